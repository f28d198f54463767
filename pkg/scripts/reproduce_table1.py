"""Print the coronoid K(n,p,r) table from the printed formulas next to the census values."""
from sombor_chains import closed_forms as cf
from sombor_chains.cli import round_half_up
from sombor_chains.sombor import STANDARD_VARIANTS


def main():
    print(f"{'(n,p,r)':>10} " + " ".join(f"{v.label + '/paper':>15} {v.label + '/census':>15}" for v in STANDARD_VARIANTS))
    for n, p, r in cf.TABLE1_PARAMS:
        params = cf.Coronoid(n, p, r)
        cells = []
        for v in STANDARD_VARIANTS:
            cells.append(f"{round_half_up(cf.family_index_paper(params, v))!s:>15}")
            cells.append(f"{round_half_up(cf.family_index_census(params, v))!s:>15}")
        print(f"{str((n, p, r)):>10} " + " ".join(cells))


if __name__ == "__main__":
    main()
