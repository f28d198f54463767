"""Closed-form expectations, bounds and family formulas for Sombor indices.

Two evaluators exist for the graphene/coronoid/nanocone families:
``family_index_census`` applies the (2,2)/(2,3)/(3,3) census formula to the
stated edge counts, ``family_index_paper`` transcribes the printed index lines.
They agree except for the coronoid SO and SO_avr lines, where the printed
formulas do not follow from the printed census (see README).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .generators import ChainFamily, ChainProbabilities
from .graph_core import EdgeTypeCensus, validate_handshake
from .sombor import AVERAGE, PLAIN, REDUCED, IndexVariant, mixed_root, sombor_from_census

SQRT2 = math.sqrt(2)
SQRT5 = math.sqrt(5)
SQRT13 = math.sqrt(13)


def _check_n(n: int) -> None:
    if n < 2:
        raise DomainError("n must be ≥ 2")


def chain_mean_degree(family, n: int) -> Fraction:
    family = ChainFamily.parse(family)
    _check_n(n)
    if family is ChainFamily.HEXAGONAL:
        return Fraction(5 * n + 1, 2 * n + 1)
    return Fraction(8 * n - 2, 3 * n)


def _resolve(family, n: int, v: IndexVariant) -> float:
    return v.resolve(chain_mean_degree(family, n) if v.kind == "average" else None)


# ---- random chains: general shift a ---------------------------------------

def expected_hxg_general(n: int, probs: ChainProbabilities, a: float) -> float:
    _check_n(n)
    p2 = probs.p2
    return (2 * (n * p2 - 2 * p2 + n) * mixed_root(a)
            + SQRT2 * (-n * p2 + 2 * p2 + n + 4) * abs(2 - a)
            + SQRT2 * (-n * p2 + 2 * p2 + 2 * n - 3) * abs(3 - a))


def expected_rph_general(n: int, probs: ChainProbabilities, a: float) -> float:
    _check_n(n)
    p2 = probs.p2
    return (2 * (n * p2 - 2 * p2 + n) * mixed_root(a)
            + SQRT2 * (-n * p2 + 2 * p2 + n + 4) * abs(2 - a)
            + SQRT2 * (-n * p2 + 2 * p2 + 5 * n - 6) * abs(3 - a))


def expected_general(family, n: int, probs: ChainProbabilities, a: float) -> float:
    if ChainFamily.parse(family) is ChainFamily.HEXAGONAL:
        return expected_hxg_general(n, probs, a)
    return expected_rph_general(n, probs, a)


@dataclass(frozen=True)
class ExpectationResult:
    value: float
    family: ChainFamily
    variant: IndexVariant
    n: int
    probs: ChainProbabilities


def expected_hxg_variant(n: int, probs: ChainProbabilities, v: IndexVariant) -> ExpectationResult:
    _check_n(n)
    p2 = probs.p2
    if v.kind == "plain":
        value = ((2 * SQRT13 - 5 * SQRT2) * p2 + 8 * SQRT2 + 2 * SQRT13) * n + (10 * SQRT2 - 4 * SQRT13) * p2 - SQRT2
    elif v.kind == "reduced":
        value = ((2 * SQRT5 - 3 * SQRT2) * p2 + 5 * SQRT2 + 2 * SQRT5) * n + (6 * SQRT2 - 4 * SQRT5) * p2 - 2 * SQRT2
    elif v.kind == "average":
        d = float(chain_mean_degree(ChainFamily.HEXAGONAL, n))
        root = mixed_root(d)
        value = ((2 * (p2 + 1) * root + SQRT2 * (4 - p2 - d)) * n
                 - 4 * p2 * root + SQRT2 * (2 * p2 + 7 * d - 17))
    else:
        value = expected_hxg_general(n, probs, v.resolve())
    return ExpectationResult(value, ChainFamily.HEXAGONAL, v, n, probs)


def expected_rph_variant(n: int, probs: ChainProbabilities, v: IndexVariant) -> ExpectationResult:
    _check_n(n)
    p2 = probs.p2
    if v.kind == "plain":
        value = ((2 * SQRT13 - 5 * SQRT2) * p2 + 17 * SQRT2 + 2 * SQRT13) * n + 2 * (5 * SQRT2 - 2 * SQRT13) * p2 - 10 * SQRT2
    elif v.kind == "reduced":
        value = ((2 * SQRT5 - 3 * SQRT2) * p2 + 11 * SQRT2 + 2 * SQRT5) * n + (6 * SQRT2 - 4 * SQRT5) * p2 - 8 * SQRT2
    elif v.kind == "average":
        d = float(chain_mean_degree(ChainFamily.PHENYLENE, n))
        root = mixed_root(d)
        value = ((2 * (p2 + 1) * root + SQRT2 * (13 - p2 - 4 * d)) * n
                 - 4 * p2 * root + 2 * SQRT2 * (p2 + 5 * d - 13))
    else:
        value = expected_rph_general(n, probs, v.resolve())
    return ExpectationResult(value, ChainFamily.PHENYLENE, v, n, probs)


def expected_variant(family, n: int, probs: ChainProbabilities, v: IndexVariant) -> ExpectationResult:
    if ChainFamily.parse(family) is ChainFamily.HEXAGONAL:
        return expected_hxg_variant(n, probs, v)
    return expected_rph_variant(n, probs, v)


# ---- recurrence -----------------------------------------------------------

def initial_value(family, a: float) -> float:
    """SO_a of the unique n=2 chain."""
    if ChainFamily.parse(family) is ChainFamily.HEXAGONAL:
        return 4 * mixed_root(a) + SQRT2 * (6 * abs(2 - a) + abs(3 - a))
    return 4 * mixed_root(a) + 6 * SQRT2 * abs(2 - a) + 4 * SQRT2 * abs(3 - a)


def recurrence_step(family, prev: float, probs: ChainProbabilities, a: float) -> float:
    p2 = probs.p2
    tail = 2 - p2 if ChainFamily.parse(family) is ChainFamily.HEXAGONAL else 5 - p2
    return (prev + 2 * (p2 + 1) * mixed_root(a)
            + SQRT2 * (1 - p2) * abs(2 - a) + SQRT2 * tail * abs(3 - a))


def iterate_recurrence(family, n: int, probs: ChainProbabilities, a: float) -> float:
    _check_n(n)
    value = initial_value(family, a)
    for _ in range(n - 2):
        value = recurrence_step(family, value, probs, a)
    return value


# ---- extremal chains ------------------------------------------------------

def chain_extremes(family, n: int, v: IndexVariant) -> tuple[float, float]:
    """(min, max) of SO_variant over all chains of length n, from the extremal corollaries."""
    family = ChainFamily.parse(family)
    _check_n(n)
    hexagonal = family is ChainFamily.HEXAGONAL
    if v.kind == "plain":
        if hexagonal:
            return ((8 * SQRT2 + 2 * SQRT13) * n - SQRT2,
                    (3 * SQRT2 + 4 * SQRT13) * n + 9 * SQRT2 - 4 * SQRT13)
        return ((17 * SQRT2 + 2 * SQRT13) * n - 10 * SQRT2,
                (12 * SQRT2 + 4 * SQRT13) * n - 4 * SQRT13)
    if v.kind == "reduced":
        if hexagonal:
            return ((5 * SQRT2 + 2 * SQRT5) * n - 2 * SQRT2,
                    (2 * SQRT2 + 4 * SQRT5) * n + 4 * SQRT2 - 4 * SQRT5)
        return ((11 * SQRT2 + 2 * SQRT5) * n - 8 * SQRT2,
                (8 * SQRT2 + 4 * SQRT5) * n - 2 * SQRT2 - 4 * SQRT5)
    if v.kind == "average":
        d = float(chain_mean_degree(family, n))
        root = mixed_root(d)
        if hexagonal:
            return (2 * n * root + SQRT2 * ((4 - d) * n + 7 * d - 17),
                    4 * (n - 1) * root + SQRT2 * ((3 - d) * n + 7 * d - 15))
        return (2 * n * root + SQRT2 * ((13 - 4 * d) * n + 2 * (5 * d - 13)),
                4 * (n - 1) * root + 2 * SQRT2 * (2 * n * (3 - d) + 5 * d - 12))
    a = v.resolve()
    return (expected_general(family, n, ChainProbabilities(1.0, 0.0), a),
            expected_general(family, n, ChainProbabilities(0.0, 1.0), a))


def extremal_chain_index(family, n: int, a: float, linear: bool) -> float:
    """SO_a of the all-kink chain (linear=False) or the all-linear chain."""
    family = ChainFamily.parse(family)
    _check_n(n)
    root, t2, t3 = mixed_root(a), SQRT2 * abs(2 - a), SQRT2 * abs(3 - a)
    if linear:
        tail = n - 1 if family is ChainFamily.HEXAGONAL else 4 * (n - 1)
        return 4 * (n - 1) * root + 6 * t2 + tail * t3
    tail = 2 * n - 3 if family is ChainFamily.HEXAGONAL else 5 * n - 6
    return 2 * n * root + (n + 4) * t2 + tail * t3


# ---- uniform average over all chains --------------------------------------

def average_over_chains(family, n: int, a: float) -> float:
    family = ChainFamily.parse(family)
    _check_n(n)
    head = 4 / 3 * (2 * n - 1) * mixed_root(a) + 2 / 3 * SQRT2 * (n + 7) * abs(2 - a)
    if family is ChainFamily.HEXAGONAL:
        return head + SQRT2 / 3 * (5 * n - 7) * abs(3 - a)
    return head + 2 / 3 * SQRT2 * (7 * n - 8) * abs(3 - a)


def expectation_gap(n: int) -> tuple[float, float]:
    """Phenylene minus hexagonal expectation, for SO and SO_red (independent of probabilities)."""
    _check_n(n)
    return 9 * SQRT2 * (n - 1), 6 * SQRT2 * (n - 1)


# ---- graphene, coronoid, nanocone -----------------------------------------

@dataclass(frozen=True)
class Graphene:
    n: int
    k: int
    allow_out_of_domain: bool = False

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or (self.k > self.n and not self.allow_out_of_domain):
            raise DomainError(f"graphene GN(n,k) needs 1 ≤ k ≤ n, got n={self.n}, k={self.k}")


@dataclass(frozen=True)
class Coronoid:
    n: int
    p: int
    r: int
    allow_out_of_domain: bool = False

    def __post_init__(self):
        n_min = 2 if self.allow_out_of_domain else 3
        if self.r < 1 or self.n < n_min or not 1 <= self.p <= self.n:
            raise DomainError(f"coronoid K(n,p,r) needs r ≥ 1, n ≥ 3, 1 ≤ p ≤ n; got {self.n, self.p, self.r}")


@dataclass(frozen=True)
class Nanocone:
    k: int
    n: int
    allow_out_of_domain: bool = False

    def __post_init__(self):
        k_min = 3 if self.allow_out_of_domain else 5
        if self.k < k_min or self.n < 1:
            raise DomainError(f"nanocone CNC_k(n) needs k ≥ 5 and n ≥ 1, got k={self.k}, n={self.n}")


FamilyParams = Graphene | Coronoid | Nanocone


@dataclass(frozen=True)
class FamilyCensus:
    census: EdgeTypeCensus
    v: int
    e: int
    n2: int
    n3: int

    def handshake_ok(self) -> bool:
        return validate_handshake(self.census, self.n2, self.n3, self.v, self.e)

    @property
    def mean_degree(self) -> Fraction:
        return Fraction(2 * self.e, self.v)


def family_census(params: FamilyParams) -> FamilyCensus:
    if isinstance(params, Graphene):
        n, k = params.n, params.k
        census = EdgeTypeCensus.from_triple(2 * k + 4, 4 * n + 4 * k - 8, 6 * n * k - 5 * k - 5 * n + 4)
        v, e = 2 * (2 * n + 1) * k, (6 * n + 1) * k - n
        n2 = 2 * n + 4 * k
        return FamilyCensus(census, v, e, n2, v - n2)
    if isinstance(params, Coronoid):
        n, p, r = params.n, params.p, params.r
        census = EdgeTypeCensus.from_triple(
            6, 8 * (2 * p + n) + 12 * (r - 2), 2 * (3 * r - 2) * (2 * p + n) + 3 * (3 * r * r - 5 * r + 4))
        t = 4 * p + 2 * n + 3 * r - 3
        return FamilyCensus(census, 2 * (r + 1) * t, (3 * r + 2) * t, 2 * t, 2 * r * t)
    if isinstance(params, Nanocone):
        k, n = params.k, params.n
        census = EdgeTypeCensus.from_triple(k, 2 * k * n, k * n * (3 * n + 1) // 2)
        v, e = k * (n + 1) ** 2, k * (n + 1) * (3 * n + 2) // 2
        return FamilyCensus(census, v, e, k * (n + 1), k * n * (n + 1))
    raise DomainError(f"unknown family parameters {params!r}")


def family_index_census(params: FamilyParams, v: IndexVariant) -> float:
    fc = family_census(params)
    return sombor_from_census(fc.census, v.resolve(fc.mean_degree))


def family_index_paper(params: FamilyParams, v: IndexVariant) -> float:
    """Literal evaluation of the printed theorem lines (custom variants use the SO_a line)."""
    if isinstance(params, Graphene):
        return _graphene_paper(params.n, params.k, v)
    if isinstance(params, Coronoid):
        return _coronoid_paper(params.n, params.p, params.r, v)
    if isinstance(params, Nanocone):
        return _nanocone_paper(params.k, params.n, v)
    raise DomainError(f"unknown family parameters {params!r}")


def _graphene_paper(n: int, k: int, v: IndexVariant) -> float:
    if v.kind == "plain":
        return 4 * SQRT13 * (n + k - 2) + SQRT2 * (18 * n * k - 15 * n - 11 * k + 20)
    if v.kind == "reduced":
        return 4 * SQRT5 * (n + k - 2) + SQRT2 * (12 * n * k - 8 * k - 10 * n + 12)
    if v.kind == "average":
        den = k * (2 * n + 1)
        rad = 4 * k**2 * n**2 - 4 * k**2 * n + 5 * k**2 - 4 * k * n**2 + 6 * k * n + 2 * n**2
        return (4 * (k + n - 2) / den * math.sqrt(rad)
                + SQRT2 * (16 * k**2 * n - 12 * k**2 + 6 * k * n**2 - 9 * k * n + 4 * k - 5 * n**2) / den)
    a = v.resolve()
    return (4 * (n + k - 2) * mixed_root(a) + 2 * SQRT2 * (k + 2) * abs(2 - a)
            + SQRT2 * (6 * n * k - 5 * k - 5 * n + 4) * abs(3 - a))


def _coronoid_paper(n: int, p: int, r: int, v: IndexVariant) -> float:
    span = 2 * n + 4 * p + 3 * r - 6
    if v.kind == "plain":
        return 4 * SQRT13 * span + 3 * SQRT2 * (3 * (3 * r - 2) * (2 * p + n) + 9 * r * r - 15 * r + 16)
    if v.kind == "reduced":
        return 4 * SQRT5 * span + SQRT2 * (4 * (3 * r - 2) * (2 * p + n) + 18 * r * r - 30 * r + 30)
    if v.kind == "average":
        return (4 * math.sqrt(r * r + 1) * span + SQRT2 * (1 + 6 * r)) / (r + 1)
    a = v.resolve()
    return (4 * mixed_root(a) * span + 6 * SQRT2 * abs(2 - a)
            + abs(3 - a) * SQRT2 * (2 * (3 * r - 2) * (2 * p + n) + 3 * (3 * r * r - 5 * r + 4)))


def _nanocone_paper(k: int, n: int, v: IndexVariant) -> float:
    if v.kind == "plain":
        return 2 * SQRT13 * k * n + SQRT2 * k / 2 * (9 * n * n + 3 * n + 4)
    if v.kind == "reduced":
        return 2 * SQRT5 * k * n + SQRT2 * k * (3 * n * n + n + 1)
    if v.kind == "average":
        return k * n / 2 * (4 / (n + 1) * math.sqrt(n * n + 1) + 3 * SQRT2)
    a = v.resolve()
    return 2 * k * n * mixed_root(a) + SQRT2 * k / 2 * (2 * abs(2 - a) + abs(3 - a) * (3 * n + 1) * n)


def circumscribed_c32h16(r: int, v: IndexVariant) -> float:
    """r-circumscribed C32H16, i.e. K(2, 1, r), from its printed corollary."""
    if r < 1:
        raise DomainError(f"r must be ≥ 1, got {r}")
    if v.kind == "plain":
        return 4 * SQRT13 * (2 + 3 * r) + 3 * SQRT2 * (9 * r * r + 21 * r - 8)
    if v.kind == "reduced":
        return 4 * SQRT5 * (2 + 3 * r) + 2 * SQRT2 * (9 * r * r + 9 * r - 1)
    if v.kind == "average":
        return (4 * math.sqrt(r * r + 1) * (2 + 3 * r) + SQRT2 * (1 + 6 * r)) / (r + 1)
    return _coronoid_paper(2, 1, r, v)


def circumscribed_c48h24(r: int, v: IndexVariant) -> float:
    """r-circumscribed C48H24, i.e. K(2, 2, r), from its printed corollary."""
    if r < 1:
        raise DomainError(f"r must be ≥ 1, got {r}")
    if v.kind == "plain":
        return 12 * SQRT13 * (2 + r) + 3 * SQRT2 * (9 * r * r + 39 * r - 20)
    if v.kind == "reduced":
        return 12 * SQRT5 * (2 + r) + 6 * SQRT2 * (3 * r * r + 7 * r - 3)
    if v.kind == "average":
        return (12 * math.sqrt(r * r + 1) * (2 + r) + SQRT2 * (1 + 6 * r)) / (r + 1)
    return _coronoid_paper(2, 2, r, v)


def cnc5(n: int, v: IndexVariant) -> float:
    """One-pentagon nanocone CNC_5(n), from its printed corollary."""
    if n < 1:
        raise DomainError(f"n must be ≥ 1, got {n}")
    if v.kind == "plain":
        return 10 * SQRT13 * n + 5 * SQRT2 / 2 * (9 * n * n + 3 * n + 4)
    if v.kind == "reduced":
        return 10 * SQRT5 * n + 5 * SQRT2 * (3 * n * n + n + 1)
    if v.kind == "average":
        return 5 * n / 2 * (4 / (n + 1) * math.sqrt(n * n + 1) + 3 * SQRT2)
    return _nanocone_paper(5, n, v)


TABLE1_PARAMS = (
    (3, 1, 1), (3, 1, 2), (3, 1, 3), (4, 2, 4), (4, 2, 5), (4, 2, 6), (5, 2, 1), (5, 3, 2),
    (5, 4, 3), (6, 4, 4), (6, 4, 5), (6, 4, 6), (9, 5, 7), (9, 6, 8), (9, 7, 9),
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["PLAIN", "REDUCED", "AVERAGE"]
