"""Graph container, degree bookkeeping and edge-type census."""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, GraphStructureError

DegreePair = tuple[int, int]


@dataclass(frozen=True)
class MolecularGraph:
    """Simple connected undirected graph on vertices ``0..vertex_count-1``.

    Edges are normalised to ``(u, v)`` with ``u < v`` and sorted, so two graphs
    with the same edge set compare equal and serialise identically.
    """

    vertex_count: int
    edges: tuple[DegreePair, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphStructureError(f"negative vertex_count {self.vertex_count}")
        seen = set()
        for raw in self.edges:
            u, v = raw
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphStructureError(f"edge {raw} has a vertex id outside 0..{self.vertex_count - 1}")
            if u == v:
                raise GraphStructureError(f"edge {raw} is a self-loop")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphStructureError(f"edge {raw} is duplicated")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        _check_connected(self.vertex_count, self.edges)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> "MolecularGraph":
        return cls(vertex_count, tuple(tuple(int(x) for x in e) for e in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def relabel(self, perm: list[int]) -> "MolecularGraph":
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise GraphStructureError("relabeling is not a permutation of the vertex ids")
        return MolecularGraph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_dict(self) -> dict:
        return {"vertex_count": self.vertex_count, "edges": [[u, v] for u, v in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "MolecularGraph":
        try:
            return cls.from_edges(data["vertex_count"], data["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, GraphStructureError):
                raise
            raise GraphStructureError(f"malformed graph JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "MolecularGraph":
        return cls.from_dict(json.loads(text))


def _check_connected(vertex_count: int, edges) -> None:
    if vertex_count == 0:
        return
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    isolated = [v for v in range(vertex_count) if not adj[v]]
    if isolated and vertex_count > 1:
        raise GraphStructureError(f"vertex {isolated[0]} has no incident edge")
    if vertex_count == 1:
        raise GraphStructureError("vertex 0 has no incident edge")
    seen = [False] * vertex_count
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                reached += 1
                queue.append(y)
    if reached != vertex_count:
        raise GraphStructureError(f"graph is disconnected: reached {reached} of {vertex_count} vertices")


@dataclass(frozen=True)
class EdgeTypeCensus:
    """Edge counts keyed by sorted endpoint-degree pair; zero entries are dropped."""

    counts: Mapping[DegreePair, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.counts.items():
            if c < 0:
                raise ValueError(f"negative count for degree pair {(i, j)}")
            if c:
                key = (i, j) if i <= j else (j, i)
                clean[key] = clean.get(key, 0) + int(c)
        object.__setattr__(self, "counts", dict(sorted(clean.items())))

    @classmethod
    def from_triple(cls, m22: int, m23: int, m33: int) -> "EdgeTypeCensus":
        return cls({(2, 2): m22, (2, 3): m23, (3, 3): m33})

    def __getitem__(self, pair: DegreePair) -> int:
        i, j = pair
        return self.counts.get((min(i, j), max(i, j)), 0)

    @property
    def m22(self) -> int:
        return self[2, 2]

    @property
    def m23(self) -> int:
        return self[2, 3]

    @property
    def m33(self) -> int:
        return self[3, 3]

    def as_triple(self) -> tuple[int, int, int]:
        return self.m22, self.m23, self.m33

    def total(self) -> int:
        return sum(self.counts.values())

    def __hash__(self):
        return hash(tuple(self.counts.items()))


def degree_sequence(g: MolecularGraph) -> dict[int, int]:
    deg = Counter()
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return {v: deg[v] for v in range(g.vertex_count)}


def degree_counts(g: MolecularGraph) -> Counter:
    """Number of vertices of each degree."""
    return Counter(degree_sequence(g).values())


def edge_type_census(g: MolecularGraph) -> EdgeTypeCensus:
    deg = degree_sequence(g)
    counts = Counter()
    for u, v in g.edges:
        du, dv = deg[u], deg[v]
        counts[(du, dv) if du <= dv else (dv, du)] += 1
    return EdgeTypeCensus(counts)


def average_degree(g: MolecularGraph) -> Fraction:
    if g.vertex_count == 0:
        raise DomainError("average degree of the empty graph is undefined")
    return Fraction(2 * g.edge_count, g.vertex_count)


def validate_handshake(census: EdgeTypeCensus, n2: int, n3: int, v: int, e: int) -> bool:
    """Consistency of a {2,3}-degree census with vertex and edge totals."""
    m22, m23, m33 = census.as_triple()
    return (
        n2 + n3 == v
        and 2 * n2 + 3 * n3 == 2 * e
        and m22 + m23 + m33 == e
        and 2 * m22 + m23 == 2 * n2
        and m23 + 2 * m33 == 3 * n3
    )
