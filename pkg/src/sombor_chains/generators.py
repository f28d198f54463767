"""Explicit construction of chains, graphene and nanocones; chain enumeration and sampling.

Chains are built by abstract fusion rather than planar embedding. The terminal
hexagon is tracked by its four free (degree-2) vertices ``w1..w4``, listed from
one endpoint of its fused edge to the other. A step of type ``t`` fuses the new
ring on the edge ``(w_t, w_{t+1})``, so type 2 is the linear attachment and
types 1 and 3 are the two mirror kinks.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from enum import Enum, IntEnum

import numpy as np

from .errors import DomainError, ResourceGuardError
from .graph_core import EdgeTypeCensus, MolecularGraph

DEFAULT_ENUMERATION_CAP = 10
ENUMERATION_CAP_ENV = "SOMBOR_ENUM_CAP"


class ChainFamily(str, Enum):
    HEXAGONAL = "hexagonal"
    PHENYLENE = "phenylene"

    @property
    def tag(self) -> str:
        return "hex" if self is ChainFamily.HEXAGONAL else "phe"

    @classmethod
    def parse(cls, text: "str | ChainFamily") -> "ChainFamily":
        if isinstance(text, ChainFamily):
            return text
        t = text.strip().lower()
        if t in ("hex", "hexagonal", "hxg"):
            return cls.HEXAGONAL
        if t in ("phe", "phenylene", "rph", "ph"):
            return cls.PHENYLENE
        raise DomainError(f"unknown chain family {text!r}")


class ChainStep(IntEnum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3

    def mirrored(self) -> "ChainStep":
        return {ChainStep.TYPE1: ChainStep.TYPE3, ChainStep.TYPE3: ChainStep.TYPE1}.get(self, self)


# per-step (m22, m23, m33) deltas, indexed by step type
STEP_DELTAS = {
    ChainFamily.HEXAGONAL: {1: (1, 2, 2), 2: (0, 4, 1), 3: (1, 2, 2)},
    ChainFamily.PHENYLENE: {1: (1, 2, 5), 2: (0, 4, 4), 3: (1, 2, 5)},
}
BASE_CENSUS = {
    ChainFamily.HEXAGONAL: (6, 4, 1),
    ChainFamily.PHENYLENE: (6, 4, 4),
}


@dataclass(frozen=True)
class ChainSpec:
    family: ChainFamily
    n: int
    steps: tuple[ChainStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "family", ChainFamily.parse(self.family))
        if self.n < 2:
            raise DomainError("n must be ≥ 2")
        steps = tuple(ChainStep(int(s)) for s in self.steps)
        if len(steps) != self.n - 2:
            raise DomainError(f"expected {self.n - 2} steps for n={self.n}, got {len(steps)}")
        object.__setattr__(self, "steps", steps)

    def step_counts(self) -> tuple[int, int, int]:
        return (self.steps.count(ChainStep.TYPE1), self.steps.count(ChainStep.TYPE2),
                self.steps.count(ChainStep.TYPE3))

    def mirrored(self) -> "ChainSpec":
        return ChainSpec(self.family, self.n, tuple(s.mirrored() for s in self.steps))

    def __str__(self) -> str:
        return f"{self.family.tag}:{self.n}:" + "".join(str(int(s)) for s in self.steps)

    @classmethod
    def parse(cls, text: str) -> "ChainSpec":
        parts = text.strip().split(":")
        if len(parts) not in (2, 3):
            raise DomainError(f"chain spec {text!r} is not of the form family:n:steps")
        family = ChainFamily.parse(parts[0])
        try:
            n = int(parts[1])
        except ValueError:
            raise DomainError(f"chain length {parts[1]!r} is not an integer") from None
        steps = parts[2] if len(parts) == 3 else ""
        if any(ch not in "123" for ch in steps):
            raise DomainError(f"steps {steps!r} must be a string over 1, 2, 3")
        return cls(family, n, tuple(int(ch) for ch in steps))


@dataclass(frozen=True)
class ChainProbabilities:
    p1: float
    p2: float

    def __post_init__(self):
        p1, p2 = float(self.p1), float(self.p2)
        if not (p1 >= 0 and p2 >= 0 and p1 + p2 <= 1 + 1e-12):
            raise DomainError(f"invalid chain probabilities p1={p1}, p2={p2}")
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)

    @property
    def p3(self) -> float:
        return max(0.0, 1.0 - self.p1 - self.p2)

    @classmethod
    def uniform(cls) -> "ChainProbabilities":
        return cls(1 / 3, 1 / 3)

    def weight(self, counts: tuple[int, int, int]) -> float:
        c1, c2, c3 = counts
        return self.p1 ** c1 * self.p2 ** c2 * self.p3 ** c3


class _Builder:
    """Mutable edge accumulator used only during construction."""

    def __init__(self):
        self.count = 0
        self.edges: list[tuple[int, int]] = []

    def add_vertices(self, k: int) -> list[int]:
        ids = list(range(self.count, self.count + k))
        self.count += k
        return ids

    def path(self, vertices: list[int]) -> None:
        self.edges.extend(zip(vertices, vertices[1:]))

    def cycle(self, vertices: list[int]) -> None:
        self.path(vertices)
        self.edges.append((vertices[-1], vertices[0]))

    def graph(self) -> MolecularGraph:
        return MolecularGraph(self.count, tuple(self.edges))


def _fuse_hexagon(b: _Builder, u: int, v: int) -> list[int]:
    """Attach a hexagon on edge (u, v); returns its free vertices ordered from u."""
    new = b.add_vertices(4)
    b.path([u, *new, v])
    return new


def _fuse_square_hexagon(b: _Builder, u: int, v: int) -> list[int]:
    s1, s2 = b.add_vertices(2)
    b.path([u, s1, s2, v])
    return _fuse_hexagon(b, s1, s2)


def _build_chain(spec: ChainSpec, attach) -> MolecularGraph:
    b = _Builder()
    first = b.add_vertices(6)
    b.cycle(first)
    w = attach(b, first[0], first[1])
    for step in spec.steps:
        t = int(step)
        w = attach(b, w[t - 1], w[t])
    return b.graph()


def build_hexagonal_chain(spec: ChainSpec) -> MolecularGraph:
    if spec.family is not ChainFamily.HEXAGONAL:
        raise DomainError(f"expected a hexagonal chain spec, got {spec.family.value}")
    return _build_chain(spec, _fuse_hexagon)


def build_phenylene_chain(spec: ChainSpec) -> MolecularGraph:
    if spec.family is not ChainFamily.PHENYLENE:
        raise DomainError(f"expected a phenylene chain spec, got {spec.family.value}")
    return _build_chain(spec, _fuse_square_hexagon)


def build_chain(spec: ChainSpec) -> MolecularGraph:
    if spec.family is ChainFamily.HEXAGONAL:
        return build_hexagonal_chain(spec)
    return build_phenylene_chain(spec)


def incremental_census(family, steps) -> EdgeTypeCensus:
    family = ChainFamily.parse(family)
    deltas = STEP_DELTAS[family]
    m22, m23, m33 = BASE_CENSUS[family]
    for s in steps:
        d22, d23, d33 = deltas[int(s)]
        m22 += d22
        m23 += d23
        m33 += d33
    return EdgeTypeCensus.from_triple(m22, m23, m33)


def census_from_counts(family, counts: tuple[int, int, int]) -> tuple[int, int, int]:
    """Census triple of any chain whose steps have the given type counts."""
    family = ChainFamily.parse(family)
    base = BASE_CENSUS[family]
    deltas = STEP_DELTAS[family]
    return tuple(base[i] + sum(c * deltas[t + 1][i] for t, c in enumerate(counts)) for i in range(3))


def build_graphene(n: int, k: int, allow_out_of_domain: bool = False) -> MolecularGraph:
    """GN(n, k): k stacked rows of n linearly fused hexagons.

    Row ``r`` has a top path ``t_0..t_2n`` and bottom path ``b_0..b_2n`` with
    rungs at even positions. Consecutive rows are joined by n bonds from the
    odd bottom vertices of row r to the odd top vertices of row r+1.
    """
    if n < 1 or k < 1:
        raise DomainError(f"graphene needs n ≥ 1 and k ≥ 1, got n={n}, k={k}")
    if k > n and not allow_out_of_domain:
        raise DomainError(f"graphene GN(n,k) is defined for 1 ≤ k ≤ n, got n={n}, k={k}")
    b = _Builder()
    prev_bottom = None
    for _ in range(k):
        top = b.add_vertices(2 * n + 1)
        bottom = b.add_vertices(2 * n + 1)
        b.path(top)
        b.path(bottom)
        b.edges.extend((top[i], bottom[i]) for i in range(0, 2 * n + 1, 2))
        if prev_bottom is not None:
            b.edges.extend((prev_bottom[i], top[i]) for i in range(1, 2 * n, 2))
        prev_bottom = bottom
    return b.graph()


def build_nanocone(k: int, n: int, allow_out_of_domain: bool = False) -> MolecularGraph:
    """CNC_k(n): a central k-cycle wrapped in n hexagonal layers.

    Ring i is a cycle of k(2i+1) vertices cut into k sectors of 2i+1. The even
    sector positions of ring i-1 bond in order to the odd positions of ring i.
    """
    if n < 1:
        raise DomainError(f"nanocone needs n ≥ 1, got n={n}")
    if k < 3 or (k < 5 and not allow_out_of_domain):
        raise DomainError(f"nanocone CNC_k(n) is defined for k ≥ 5, got k={k}")
    b = _Builder()
    rings = []
    for i in range(n + 1):
        ring = b.add_vertices(k * (2 * i + 1))
        b.cycle(ring)
        rings.append(ring)
    for i in range(1, n + 1):
        inner, outer = rings[i - 1], rings[i]
        w_in, w_out = 2 * i - 1, 2 * i + 1
        for s in range(k):
            for j in range(i):
                b.edges.append((inner[s * w_in + 2 * j], outer[s * w_out + 2 * j + 1]))
    return b.graph()


def enumeration_cap() -> int:
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUMERATION_CAP


def enumerate_chains(family, n: int, cap: int | None = None) -> list[ChainSpec]:
    """All 3^(n-2) chain specs of length n, lexicographic in the step string."""
    family = ChainFamily.parse(family)
    cap = enumeration_cap() if cap is None else cap
    if n < 2:
        raise DomainError("n must be ≥ 2")
    if n > cap:
        raise ResourceGuardError(
            f"enumerating n={n} means {3 ** (n - 2)} chains; cap is n={cap} "
            f"(raise it with {ENUMERATION_CAP_ENV} or the cap argument)")
    return [ChainSpec(family, n, steps) for steps in itertools.product((1, 2, 3), repeat=n - 2)]


def classify_uniform(u: np.ndarray, probs: ChainProbabilities) -> np.ndarray:
    """Map uniforms in [0, 1) to step types 1/2/3 with the given probabilities."""
    return 1 + (u >= probs.p1).astype(np.int8) + (u >= probs.p1 + probs.p2).astype(np.int8)


def sample_chain(family, n: int, probs: ChainProbabilities, seed: int) -> ChainSpec:
    family = ChainFamily.parse(family)
    if n < 2:
        raise DomainError("n must be ≥ 2")
    rng = np.random.default_rng(seed)
    steps = classify_uniform(rng.random(n - 2), probs)
    return ChainSpec(family, n, tuple(int(s) for s in steps))
