"""Monte Carlo and exhaustive expectations over random chains, plus comparison series."""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import closed_forms as cf
from .errors import DomainError
from .generators import (BASE_CENSUS, STEP_DELTAS, ChainFamily, ChainProbabilities, build_chain,
                         classify_uniform, enumerate_chains)
from .graph_core import average_degree
from .sombor import CENSUS_PAIRS, IndexVariant, pair_term, sombor_general

BLOCK_SAMPLES = 8192
# cap on uniforms drawn at once inside a block
_MAX_DRAW = 1 << 21


@dataclass(frozen=True)
class McResult:
    mean: float
    std_error: float
    samples: int
    seed: int
    elapsed: float


def block_seed(seed: int, block: int) -> np.random.SeedSequence:
    """Seed material for sample block ``block``; independent of worker count."""
    return np.random.SeedSequence(entropy=seed, spawn_key=(block,))


def _block_moments(family: ChainFamily, n: int, probs: ChainProbabilities, seed: int, block: int,
                   size: int) -> tuple[list[int], list[list[int]]]:
    """Exact integer first and second moments of the census over one block."""
    rng = np.random.default_rng(block_seed(seed, block))
    steps = n - 2
    counts = np.zeros((size, 3), dtype=np.int64)
    chunk = max(1, _MAX_DRAW // size)
    done = 0
    while done < steps:
        width = min(chunk, steps - done)
        types = classify_uniform(rng.random((size, width)), probs)
        for t in (1, 2, 3):
            counts[:, t - 1] += (types == t).sum(axis=1)
        done += width
    deltas = np.array([STEP_DELTAS[family][t] for t in (1, 2, 3)], dtype=np.int64)
    census = np.asarray(BASE_CENSUS[family], dtype=np.int64) + counts @ deltas
    first = [int(x) for x in census.sum(axis=0)]
    second = [[int(x) for x in row] for row in census.T @ census]
    return first, second


def mc_expectation(family, n: int, probs: ChainProbabilities, v: IndexVariant, samples: int, seed: int,
                   workers: int = 1) -> McResult:
    """Sample-mean estimate of E[SO_variant] over random chains.

    Samples are split into fixed blocks of ``BLOCK_SAMPLES`` with per-block seeds,
    so the estimate depends only on (seed, samples, n, probs), never on ``workers``.
    Census moments are accumulated in exact integers.
    """
    family = ChainFamily.parse(family)
    if n < 2:
        raise DomainError("n must be ≥ 2")
    if samples < 1 or workers < 1:
        raise DomainError(f"samples and workers must be ≥ 1, got {samples}, {workers}")
    start = time.perf_counter()
    sizes = [BLOCK_SAMPLES] * (samples // BLOCK_SAMPLES)
    if samples % BLOCK_SAMPLES:
        sizes.append(samples % BLOCK_SAMPLES)

    def run(b):
        return _block_moments(family, n, probs, seed, b, sizes[b])

    if workers == 1:
        parts = [run(b) for b in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))

    s1 = [sum(p[0][i] for p in parts) for i in range(3)]
    s2 = [[sum(p[1][i][j] for p in parts) for j in range(3)] for i in range(3)]
    a = v.resolve(cf.chain_mean_degree(family, n) if v.kind == "average" else None)
    w = [pair_term(i, j, a) for i, j in CENSUS_PAIRS]
    mean = math.fsum(w[i] * (s1[i] / samples) for i in range(3))
    if samples > 1:
        # scatter matrix N*S2 - S1 S1^T is an exact integer
        scatter = [[samples * s2[i][j] - s1[i] * s1[j] for j in range(3)] for i in range(3)]
        var = math.fsum(w[i] * w[j] * scatter[i][j] for i in range(3) for j in range(3))
        var = max(var, 0.0) / (samples * (samples - 1))
        std_error = math.sqrt(var / samples)
    else:
        std_error = 0.0
    return McResult(mean, std_error, samples, seed, time.perf_counter() - start)


@lru_cache(maxsize=256)
def _enumerated_values(family: ChainFamily, n: int, a_key: str | float) -> tuple[tuple[tuple[int, int, int], float], ...]:
    out = []
    for spec in enumerate_chains(family, n):
        g = build_chain(spec)
        a = float(average_degree(g)) if a_key == "average" else a_key
        out.append((spec.step_counts(), sombor_general(g, a)))
    return tuple(out)


def exact_expectation_enumeration(family, n: int, probs: ChainProbabilities, a: float | str) -> float:
    """Probability-weighted SO_a over every chain of length n, each built explicitly.

    ``a`` may be the string ``"average"`` to use each chain's own mean degree.
    """
    family = ChainFamily.parse(family)
    a_key = a if a == "average" else float(a)
    return math.fsum(probs.weight(c) * value for c, value in _enumerated_values(family, n, a_key))


def enumerated_index_values(family, n: int, a: float | str) -> list[tuple[str, float]]:
    """(chain spec string, SO_a) for every chain of length n."""
    family = ChainFamily.parse(family)
    a_key = a if a == "average" else float(a)
    specs = enumerate_chains(family, n)
    return [(str(s), val) for s, (_, val) in zip(specs, _enumerated_values(family, n, a_key))]


def comparison_series(family_pair, n_range, probs: ChainProbabilities, variants) -> list[dict]:
    """Closed-form expectations per n, with within-family and cross-family differences."""
    families = [ChainFamily.parse(f) for f in family_pair]
    variants = list(variants)
    rows = []
    for n in n_range:
        row = {"n": n}
        for fam in families:
            for v in variants:
                row[f"{fam.tag}_{v.label}"] = cf.expected_variant(fam, n, probs, v).value
            for hi, lo in zip(variants, variants[1:]):
                row[f"{fam.tag}_{hi.label}-{lo.label}"] = row[f"{fam.tag}_{hi.label}"] - row[f"{fam.tag}_{lo.label}"]
        if len(families) == 2:
            f0, f1 = sorted(families, key=lambda f: f is ChainFamily.PHENYLENE)
            for v in variants:
                row[f"{f1.tag}-{f0.tag}_{v.label}"] = row[f"{f1.tag}_{v.label}"] - row[f"{f0.tag}_{v.label}"]
        rows.append(row)
    return rows


def family_series(params_list, variants) -> list[dict]:
    """Census-path index values for a sequence of family parameters (graphene or nanocone data)."""
    variants = list(variants)
    rows = []
    for params in params_list:
        row = {k: getattr(params, k) for k in ("n", "k", "p", "r") if hasattr(params, k)}
        for v in variants:
            row[v.label] = cf.family_index_census(params, v)
        for hi, lo in zip(variants, variants[1:]):
            row[f"{hi.label}-{lo.label}"] = row[hi.label] - row[lo.label]
        rows.append(row)
    return rows
