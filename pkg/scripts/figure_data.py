"""Write the CSV series behind the chain-comparison and graphene/nanocone plots."""
import argparse
from pathlib import Path

from sombor_chains import closed_forms as cf
from sombor_chains.cli import OutputSpec, render_rows
from sombor_chains.generators import ChainProbabilities
from sombor_chains.random_experiments import comparison_series, family_series
from sombor_chains.sombor import STANDARD_VARIANTS


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="figure_data")
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    spec = OutputSpec("csv", precision=6)

    for p1, p2 in [(1 / 3, 1 / 3), (0.3, 0.4), (0.0, 1.0)]:
        rows = comparison_series(("hex", "phe"), range(2, args.n_max + 1), ChainProbabilities(p1, p2),
                                 STANDARD_VARIANTS)
        (out / f"chains_p1={p1:.3f}_p2={p2:.3f}.csv").write_text(render_rows(rows, spec))

    graphene = family_series([cf.Graphene(n, n) for n in range(1, 11)], STANDARD_VARIANTS)
    (out / "graphene_k_eq_n.csv").write_text(render_rows(graphene, spec))
    for k in (5, 6, 7):
        cones = family_series([cf.Nanocone(k, n) for n in range(1, 11)], STANDARD_VARIANTS)
        (out / f"nanocone_k{k}.csv").write_text(render_rows(cones, spec))
    print(f"wrote {len(list(out.glob('*.csv')))} files to {out}/")


if __name__ == "__main__":
    main()
