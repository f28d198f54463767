"""Generalised Sombor index SO_a, edge-wise and from an edge-type census."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnsupportedCensusError
from .graph_core import EdgeTypeCensus, MolecularGraph, average_degree, degree_sequence

CENSUS_PAIRS = ((2, 2), (2, 3), (3, 3))


@dataclass(frozen=True)
class IndexVariant:
    """Which shift ``a`` to use: plain (0), reduced (1), average (mean degree) or custom."""

    kind: str
    a: float | None = None

    def __post_init__(self):
        if self.kind not in ("plain", "reduced", "average", "custom"):
            raise DomainError(f"unknown index variant {self.kind!r}")
        if self.kind == "custom":
            if self.a is None or not math.isfinite(self.a):
                raise DomainError(f"custom variant needs a finite a, got {self.a!r}")

    @classmethod
    def custom(cls, a: float) -> "IndexVariant":
        return cls("custom", float(a))

    @classmethod
    def parse(cls, text: str) -> "IndexVariant":
        t = text.strip().lower()
        aliases = {"so": "plain", "red": "reduced", "avr": "average", "avg": "average"}
        t = aliases.get(t, t)
        if t in ("plain", "reduced", "average"):
            return cls(t)
        if t.startswith("custom"):
            return cls.custom(float(Fraction(t.split(":", 1)[1] if ":" in t else t.split("=", 1)[1])))
        raise DomainError(f"unknown index variant {text!r}")

    def resolve(self, mean_degree: Fraction | float | None = None) -> float:
        if self.kind == "plain":
            return 0.0
        if self.kind == "reduced":
            return 1.0
        if self.kind == "custom":
            return float(self.a)
        if mean_degree is None:
            raise DomainError("average variant needs the mean degree")
        return float(mean_degree)

    @property
    def label(self) -> str:
        return f"custom:{self.a:g}" if self.kind == "custom" else self.kind


PLAIN = IndexVariant("plain")
REDUCED = IndexVariant("reduced")
AVERAGE = IndexVariant("average")
STANDARD_VARIANTS = (PLAIN, REDUCED, AVERAGE)


def _check_a(a: float) -> float:
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"shift a must be finite, got {a}")
    return a


def pair_term(di: float, dj: float, a: float) -> float:
    """Contribution of one edge joining degrees ``di`` and ``dj``."""
    return math.sqrt((di - a) ** 2 + (dj - a) ** 2)


def mixed_root(a: float) -> float:
    """sqrt(2a^2 - 10a + 13), the (2,3)-edge weight."""
    return math.sqrt(2 * a * a - 10 * a + 13)


def sombor_general(g: MolecularGraph, a: float) -> float:
    a = _check_a(a)
    deg = degree_sequence(g)
    return math.fsum(pair_term(deg[u], deg[v], a) for u, v in g.edges)


def sombor_from_census(c: EdgeTypeCensus, a: float) -> float:
    a = _check_a(a)
    for pair in c.counts:
        if pair not in CENSUS_PAIRS:
            raise UnsupportedCensusError(f"census contains degree pair {pair}; only (2,2), (2,3), (3,3) supported")
    return math.fsum(c[i, j] * pair_term(i, j, a) for i, j in CENSUS_PAIRS)


def sombor_variant(g: MolecularGraph, v: IndexVariant) -> float:
    mean = average_degree(g) if v.kind == "average" else None
    return sombor_general(g, v.resolve(mean))
