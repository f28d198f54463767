"""Command-line front end: ``sombor <command> ...``.

Exit codes: 0 success, 2 domain or usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from . import closed_forms as cf
from .errors import DomainError, GraphStructureError, ResourceGuardError, UnsupportedCensusError
from .generators import (ChainFamily, ChainProbabilities, ChainSpec, build_chain, build_graphene,
                         build_nanocone)
from .graph_core import MolecularGraph, average_degree, edge_type_census
from .random_experiments import comparison_series, family_series, mc_expectation
from .sombor import STANDARD_VARIANTS, IndexVariant, sombor_from_census, sombor_general

EXIT_DOMAIN = 2
EXIT_IO = 3


class CliIOError(Exception):
    pass


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    path: str | None = None
    precision: int = 6

    def __post_init__(self):
        if not 1 <= self.precision <= 15:
            raise DomainError(f"precision must be in 1..15, got {self.precision}")
        if self.format not in ("csv", "json"):
            raise DomainError(f"unknown output format {self.format!r}")


def round_half_up(x: float, places: int = 2) -> Decimal:
    return Decimal(repr(x)).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def _fmt(value, precision: int):
    if isinstance(value, float):
        return f"{value:.{precision}f}"
    if isinstance(value, Decimal):
        return str(value)
    return value


def render_rows(rows: list[dict], out: OutputSpec, columns: list[str] | None = None) -> str:
    columns = columns or (list(rows[0]) if rows else [])
    if out.format == "json":
        payload = [{c: (round(r[c], out.precision) if isinstance(r.get(c), float)
                        else float(r[c]) if isinstance(r.get(c), Decimal) else r.get(c))
                    for c in columns} for r in rows]
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt(r.get(c, ""), out.precision) for c in columns])
    return buf.getvalue()


def emit(text: str, out: OutputSpec) -> None:
    if out.path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(out.path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliIOError(f"cannot write {out.path}: {exc}") from exc


# ---- argument helpers -----------------------------------------------------

def parse_number(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a number: {text!r}") from None


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise DomainError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"bad integer range {text!r}; use A..B, A,B,C or A") from None


def parse_family_params(name: str, tokens: list[str], allow: bool):
    kv = {}
    for tok in tokens:
        if "=" not in tok:
            raise DomainError(f"expected key=value, got {tok!r}")
        key, value = tok.split("=", 1)
        try:
            kv[key.strip().lower()] = int(value)
        except ValueError:
            raise DomainError(f"{key} must be an integer, got {value!r}") from None
    fields = {"graphene": ("n", "k"), "coronoid": ("n", "p", "r"), "nanocone": ("k", "n")}[name]
    missing = [f for f in fields if f not in kv]
    extra = sorted(set(kv) - set(fields))
    if missing or extra:
        raise DomainError(f"{name} needs exactly {', '.join(fields)} (missing {missing}, unexpected {extra})")
    cls = {"graphene": cf.Graphene, "coronoid": cf.Coronoid, "nanocone": cf.Nanocone}[name]
    return cls(**{f: kv[f] for f in fields}, allow_out_of_domain=allow)


FAMILY_NAMES = ("graphene", "coronoid", "nanocone")


def parse_target(tokens: list[str], allow: bool):
    """Either a ChainSpec (``hex:5:212``) or family parameters (``graphene n=3 k=2``)."""
    if not tokens:
        raise DomainError("missing target: a chain spec like hex:5:212 or a family like 'graphene n=3 k=2'")
    head = tokens[0].strip().lower()
    if head in FAMILY_NAMES:
        # tolerate a single quoted token such as "graphene n=1 k=1"
        parts = head.split() + tokens[1:] if " " in head else tokens
        return parse_family_params(parts[0], parts[1:], allow)
    if " " in head and head.split()[0] in FAMILY_NAMES:
        parts = head.split() + tokens[1:]
        return parse_family_params(parts[0], parts[1:], allow)
    if len(tokens) != 1:
        raise DomainError(f"unexpected extra arguments {tokens[1:]}")
    return ChainSpec.parse(tokens[0])


def build_target(target) -> MolecularGraph:
    if isinstance(target, ChainSpec):
        return build_chain(target)
    if isinstance(target, cf.Graphene):
        return build_graphene(target.n, target.k, target.allow_out_of_domain)
    if isinstance(target, cf.Nanocone):
        return build_nanocone(target.k, target.n, target.allow_out_of_domain)
    raise DomainError("coronoid K(n,p,r) is available at census level only; no explicit graph is built")


def selected_variants(args) -> list[IndexVariant]:
    chosen = []
    if args.plain:
        chosen.append(STANDARD_VARIANTS[0])
    if args.reduced:
        chosen.append(STANDARD_VARIANTS[1])
    if args.average:
        chosen.append(STANDARD_VARIANTS[2])
    for a in args.custom or []:
        chosen.append(IndexVariant.custom(parse_number(a)))
    return chosen or list(STANDARD_VARIANTS)


def output_spec(args) -> OutputSpec:
    return OutputSpec(args.format, args.output, args.precision)


def probs_from(args) -> ChainProbabilities:
    return ChainProbabilities(parse_number(args.p1), parse_number(args.p2))


# ---- commands -------------------------------------------------------------

def cmd_generate(args) -> None:
    g = build_target(parse_target(args.target, args.allow_out_of_domain))
    emit(g.to_json() + "\n", OutputSpec("json", args.output))


def _load_graph(path: str) -> MolecularGraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliIOError(f"cannot read {path}: {exc}") from exc
    try:
        return MolecularGraph.from_json(text)
    except json.JSONDecodeError as exc:
        raise GraphStructureError(f"{path} is not valid JSON: {exc}") from exc


def _graph_rows(label: str, g: MolecularGraph, variants) -> list[dict]:
    census = edge_type_census(g)
    mean = average_degree(g)
    rows = []
    for v in variants:
        a = v.resolve(mean)
        try:
            value, source = sombor_from_census(census, a), "census"
        except UnsupportedCensusError as exc:
            print(f"notice: {exc}; using the edge-wise sum", file=sys.stderr)
            value, source = sombor_general(g, a), "edgewise"
        rows.append({"target": label, "variant": v.label, "source": source, "value": value})
    return rows


def cmd_index(args) -> None:
    variants = selected_variants(args)
    if args.paper_only and args.census_only:
        raise DomainError("--paper-only and --census-only are mutually exclusive")
    if args.graph:
        if args.target:
            raise DomainError("give either --graph or a target, not both")
        rows = _graph_rows(args.graph, _load_graph(args.graph), variants)
    else:
        target = parse_target(args.target, args.allow_out_of_domain)
        if isinstance(target, ChainSpec):
            rows = _graph_rows(str(target), build_chain(target), variants)
        else:
            label = type(target).__name__.lower() + " " + " ".join(
                f"{f}={getattr(target, f)}" for f in target.__dataclass_fields__ if f != "allow_out_of_domain")
            sources = ["census"] if args.census_only else ["paper"] if args.paper_only else (
                ["census", "paper"] if isinstance(target, cf.Coronoid) else ["census"])
            rows = []
            for v in variants:
                for source in sources:
                    fn = cf.family_index_census if source == "census" else cf.family_index_paper
                    rows.append({"target": label, "variant": v.label, "source": source, "value": fn(target, v)})
    emit(render_rows(rows, output_spec(args), ["target", "variant", "source", "value"]), output_spec(args))


def cmd_expect(args) -> None:
    probs = probs_from(args)
    family = ChainFamily.parse(args.family)
    rows = [{"family": family.value, "n": n, "p1": probs.p1, "p2": probs.p2, "variant": v.label,
             "value": cf.expected_variant(family, n, probs, v).value}
            for n in parse_range(args.n) for v in selected_variants(args)]
    emit(render_rows(rows, output_spec(args), ["family", "n", "p1", "p2", "variant", "value"]), output_spec(args))


def cmd_extremes(args) -> None:
    family = ChainFamily.parse(args.family)
    rows = []
    for n in parse_range(args.n):
        for v in selected_variants(args):
            lo, hi = cf.chain_extremes(family, n, v)
            rows.append({"family": family.value, "n": n, "variant": v.label, "min": lo, "max": hi})
    emit(render_rows(rows, output_spec(args), ["family", "n", "variant", "min", "max"]), output_spec(args))


def cmd_average(args) -> None:
    family = ChainFamily.parse(args.family)
    rows = []
    for n in parse_range(args.n):
        for v in selected_variants(args):
            a = v.resolve(cf.chain_mean_degree(family, n) if v.kind == "average" else None)
            rows.append({"family": family.value, "n": n, "variant": v.label,
                         "value": cf.average_over_chains(family, n, a)})
    emit(render_rows(rows, output_spec(args), ["family", "n", "variant", "value"]), output_spec(args))


def cmd_mc(args) -> None:
    probs = probs_from(args)
    family = ChainFamily.parse(args.family)
    rows = []
    for v in selected_variants(args):
        res = mc_expectation(family, args.n, probs, v, args.samples, args.seed, args.workers)
        exact = cf.expected_variant(family, args.n, probs, v).value
        z = (res.mean - exact) / res.std_error if res.std_error > 0 else 0.0
        rows.append({"family": family.value, "n": args.n, "p1": probs.p1, "p2": probs.p2, "variant": v.label,
                     "samples": res.samples, "seed": res.seed, "workers": args.workers, "mean": res.mean,
                     "std_error": res.std_error, "closed_form": exact, "z": z, "elapsed": res.elapsed})
    emit(render_rows(rows, output_spec(args)), output_spec(args))


TABLE1_COLUMNS = ["n", "p", "r", "SO", "SO_red", "SO_avr"]


def table1_rows(with_census: bool = False) -> list[dict]:
    rows = []
    for n, p, r in cf.TABLE1_PARAMS:
        params = cf.Coronoid(n, p, r)
        row = {"n": n, "p": p, "r": r}
        for col, v in zip(TABLE1_COLUMNS[3:], STANDARD_VARIANTS):
            row[col] = round_half_up(cf.family_index_paper(params, v))
            if with_census:
                row[col + "_census"] = round_half_up(cf.family_index_census(params, v))
        rows.append(row)
    return rows


def cmd_table1(args) -> None:
    rows = table1_rows(args.census)
    cols = TABLE1_COLUMNS + ([c + "_census" for c in TABLE1_COLUMNS[3:]] if args.census else [])
    emit(render_rows(rows, output_spec(args), cols), output_spec(args))


def cmd_series(args) -> None:
    if args.kind == "chains-compare":
        rows = comparison_series(("hexagonal", "phenylene"), parse_range(args.n), probs_from(args),
                                 selected_variants(args))
    else:
        ns = parse_range(args.n)
        allow = args.allow_out_of_domain
        if args.family == "graphene":
            params = [cf.Graphene(n, args.k if args.k is not None else n, allow) for n in ns]
        elif args.family == "nanocone":
            params = [cf.Nanocone(args.k if args.k is not None else 5, n, allow) for n in ns]
        else:
            raise DomainError("series families needs --family graphene or --family nanocone")
        rows = family_series(params, selected_variants(args))
    emit(render_rows(rows, output_spec(args)), output_spec(args))


# ---- parser ---------------------------------------------------------------

def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    p.add_argument("--precision", type=int, default=6, help="decimal places, 1..15")


def _add_variants(p: argparse.ArgumentParser) -> None:
    p.add_argument("--plain", action="store_true", help="SO (a=0)")
    p.add_argument("--reduced", action="store_true", help="SO_red (a=1)")
    p.add_argument("--average", action="store_true", help="SO_avr (a = mean degree)")
    p.add_argument("--custom", action="append", metavar="A", help="SO_a for a given shift; repeatable")


def _add_probs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p1", default="1/3", help="probability of a type-1 kink (fractions allowed)")
    p.add_argument("--p2", default="1/3", help="probability of a linear attachment")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sombor", description="Sombor indices of benzenoid-type graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit graph JSON for a chain spec or a family")
    p.add_argument("target", nargs="+", help="hex:5:212 | phe:3:1 | graphene n=3 k=2 | nanocone k=5 n=2")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--allow-out-of-domain", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("index", help="Sombor index values of a graph file, chain spec or family")
    p.add_argument("target", nargs="*")
    p.add_argument("--graph", help="graph JSON file ('-' for stdin)")
    p.add_argument("--paper-only", action="store_true")
    p.add_argument("--census-only", action="store_true")
    p.add_argument("--allow-out-of-domain", action="store_true")
    _add_variants(p)
    _add_output(p)
    p.set_defaults(func=cmd_index)

    for name, func, doc in (("expect", cmd_expect, "expected index of random chains"),
                            ("extremes", cmd_extremes, "min/max index over all chains"),
                            ("average", cmd_average, "uniform average over all chains")):
        p = sub.add_parser(name, help=doc)
        p.add_argument("family", help="hexagonal|phenylene")
        p.add_argument("--n", required=True, help="length or range A..B")
        if name == "expect":
            _add_probs(p)
        _add_variants(p)
        _add_output(p)
        p.set_defaults(func=func)

    p = sub.add_parser("mc", help="Monte Carlo estimate of the expected index")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    _add_probs(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_variants(p)
    _add_output(p)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("table1", help="coronoid K(n,p,r) index table at 2 decimals")
    p.add_argument("--census", action="store_true", help="add census-path columns")
    _add_output(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("series", help="plot-ready comparison data")
    p.add_argument("kind", choices=("chains-compare", "families"))
    p.add_argument("--n", required=True, help="range A..B")
    p.add_argument("--family", choices=("graphene", "nanocone"))
    p.add_argument("--k", type=int, default=None, help="graphene: fixed k (default k=n); nanocone: k (default 5)")
    p.add_argument("--allow-out-of-domain", action="store_true")
    _add_probs(p)
    _add_variants(p)
    _add_output(p)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if hasattr(args, "precision"):
            output_spec(args)
        args.func(args)
    except CliIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, GraphStructureError, UnsupportedCensusError, ResourceGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0
