import math
from fractions import Fraction

import pytest

from sombor_chains import closed_forms as cf
from sombor_chains.errors import DomainError
from sombor_chains.generators import ChainProbabilities, build_graphene, build_nanocone
from sombor_chains.graph_core import EdgeTypeCensus
from sombor_chains.random_experiments import exact_expectation_enumeration
from sombor_chains.sombor import (AVERAGE, PLAIN, REDUCED, STANDARD_VARIANTS, IndexVariant, sombor_from_census,
                                  sombor_variant)

S2, S5, S13, S17 = math.sqrt(2), math.sqrt(5), math.sqrt(13), math.sqrt(17)
U = ChainProbabilities.uniform()
PROB_GRID = [ChainProbabilities(p1, p2) for p1 in (0, .25, 1 / 3, .5, 1) for p2 in (0, .25, 1 / 3, .5, 1)
             if p1 + p2 <= 1 + 1e-12]


def rel(x, y):
    return abs(x - y) / max(1.0, abs(y))


def test_hxg_n2_independent_of_probs():
    for probs in PROB_GRID:
        assert cf.expected_hxg_general(2, probs, 0) == pytest.approx(15 * S2 + 4 * S13, rel=1e-12)


def test_hxg_n3_uniform():
    # three chains at n=3: two kinks (23√2+6√13) and one linear (18√2+8√13)
    expected = (2 * (23 * S2 + 6 * S13) + (18 * S2 + 8 * S13)) / 3
    assert expected == pytest.approx((64 * S2 + 20 * S13) / 3, rel=1e-12)
    assert cf.expected_hxg_general(3, U, 0) == pytest.approx(expected, rel=1e-12)
    assert cf.expected_hxg_general(3, U, 0) == pytest.approx(54.2069, abs=1e-4)


def test_hxg_linear_chain_value():
    n = 5
    assert cf.expected_hxg_general(n, ChainProbabilities(0, 1), 0) == pytest.approx(
        (3 * S2 + 4 * S13) * n + 9 * S2 - 4 * S13, rel=1e-12)


def test_hxg_variants_n2():
    assert cf.expected_hxg_variant(2, U, PLAIN).value == pytest.approx(15 * S2 + 4 * S13, rel=1e-12)
    assert cf.expected_hxg_variant(2, U, AVERAGE).value == pytest.approx(2 * S2 + 0.8 * S17, rel=1e-12)
    red = cf.expected_hxg_variant(10, ChainProbabilities(1, 0), REDUCED).value
    assert red == pytest.approx(48 * S2 + 20 * S5, rel=1e-12)


def test_rph_examples():
    assert cf.expected_rph_general(2, U, 0) == pytest.approx(24 * S2 + 4 * S13, rel=1e-12)
    assert cf.expected_rph_general(2, U, 0) == pytest.approx(48.3633, abs=1e-4)
    assert cf.expected_rph_general(3, ChainProbabilities(0, 1), 1) == pytest.approx(
        (8 * S2 + 4 * S5) * 3 - 2 * S2 - 4 * S5, rel=1e-12)
    d = 7 / 3
    assert cf.expected_rph_variant(2, U, AVERAGE).value == pytest.approx(
        4 * math.sqrt(2 * d * d - 10 * d + 13) + 2 * S2 * d, rel=1e-12)


@pytest.mark.parametrize("family", ["hex", "phe"])
@pytest.mark.parametrize("n", [2, 3, 7, 40])
def test_variant_lines_match_general(family, n):
    for probs in PROB_GRID:
        for v in STANDARD_VARIANTS:
            a = v.resolve(cf.chain_mean_degree(family, n))
            got = cf.expected_variant(family, n, probs, v).value
            assert rel(got, cf.expected_general(family, n, probs, a)) <= 1e-9


def test_mean_degrees():
    assert cf.chain_mean_degree("hex", 2) == Fraction(11, 5)
    assert cf.chain_mean_degree("phe", 2) == Fraction(7, 3)
    assert cf.chain_mean_degree("hex", 6) == Fraction(31, 13)


@pytest.mark.parametrize("family", ["hex", "phe"])
def test_recurrence_reproduces_closed_form(family):
    for probs in (U, ChainProbabilities(.3, .4), ChainProbabilities(0, 1)):
        for a in (0, 1, 2.4, 3.7):
            value = cf.initial_value(family, a)
            for n in range(3, 201):
                value = cf.recurrence_step(family, value, probs, a)
                assert rel(value, cf.expected_general(family, n, probs, a)) <= 1e-9


def test_recurrence_examples():
    e3 = cf.recurrence_step("hex", cf.initial_value("hex", 0), ChainProbabilities(1, 0), 0)
    assert e3 == pytest.approx(23 * S2 + 6 * S13, rel=1e-12)
    assert e3 == pytest.approx(sombor_from_census(EdgeTypeCensus.from_triple(7, 6, 3), 0), rel=1e-12)
    p3 = cf.recurrence_step("phe", cf.initial_value("phe", 0), ChainProbabilities(0, 1), 0)
    assert p3 == pytest.approx(36 * S2 + 8 * S13, rel=1e-12)
    step_lin = cf.recurrence_step("hex", 0.0, ChainProbabilities(0, 1), 0)
    step_kink = cf.recurrence_step("hex", 0.0, ChainProbabilities(0, 0), 0)
    assert step_lin - step_kink == pytest.approx(2 * S13 - 5 * S2, rel=1e-12)


def test_extremes_examples():
    lo, hi = cf.chain_extremes("hex", 4, PLAIN)
    assert lo == pytest.approx(31 * S2 + 8 * S13, rel=1e-12)
    assert hi == pytest.approx(21 * S2 + 12 * S13, rel=1e-12)
    lo, hi = cf.chain_extremes("phe", 2, PLAIN)
    assert lo == pytest.approx(hi, rel=1e-12) and lo == pytest.approx(24 * S2 + 4 * S13, rel=1e-12)
    lo, hi = cf.chain_extremes("hex", 6, AVERAGE)
    d = 31 / 13
    root = math.sqrt(2 * d * d - 10 * d + 13)
    assert lo == pytest.approx(12 * root + S2 * ((4 - d) * 6 + 7 * d - 17), rel=1e-12)
    assert lo <= hi


@pytest.mark.parametrize("family", ["hex", "phe"])
@pytest.mark.parametrize("v", [PLAIN, REDUCED, AVERAGE, IndexVariant.custom(2.5), IndexVariant.custom(-1)])
def test_extremes_match_expectations(family, v):
    for n in range(2, 30):
        lo, hi = cf.chain_extremes(family, n, v)
        assert rel(lo, cf.expected_variant(family, n, ChainProbabilities(1, 0), v).value) <= 1e-9
        assert rel(hi, cf.expected_variant(family, n, ChainProbabilities(0, 1), v).value) <= 1e-9
        assert lo <= hi + 1e-9


def test_extremal_chain_corollary_lines():
    for family in ("hex", "phe"):
        for n in range(2, 20):
            for a in (0, 1, 2.2):
                assert rel(cf.extremal_chain_index(family, n, a, linear=False),
                           cf.expected_general(family, n, ChainProbabilities(.5, 0), a)) <= 1e-9
                assert rel(cf.extremal_chain_index(family, n, a, linear=True),
                           cf.expected_general(family, n, ChainProbabilities(0, 1), a)) <= 1e-9


def test_average_examples():
    assert cf.average_over_chains("hex", 3, 0) == pytest.approx((64 * S2 + 20 * S13) / 3, rel=1e-12)
    assert cf.average_over_chains("hex", 2, 1) == pytest.approx(4 * S5 + 8 * S2, rel=1e-12)
    brute = exact_expectation_enumeration("phe", 4, U, 0)
    assert cf.average_over_chains("phe", 4, 0) == pytest.approx(brute, rel=1e-9)


@pytest.mark.parametrize("family", ["hex", "phe"])
def test_average_equals_uniform_expectation(family):
    for n in range(2, 60):
        for a in (0, 1, 2.5, 4):
            assert rel(cf.average_over_chains(family, n, a), cf.expected_general(family, n, U, a)) <= 1e-9


def test_monotone_in_p2():
    for family in ("hex", "phe"):
        for n in range(3, 30):
            for a in (0, 1):
                vals = [cf.expected_general(family, n, ChainProbabilities(0, p2 / 10), a) for p2 in range(11)]
                assert all(x <= y for x, y in zip(vals, vals[1:]))
    assert 2 * S13 - 5 * S2 > 0 and 2 * S5 - 3 * S2 > 0


def test_gap():
    assert cf.expectation_gap(2) == pytest.approx((9 * S2, 6 * S2), rel=1e-12)
    assert cf.expectation_gap(11) == pytest.approx((90 * S2, 60 * S2), rel=1e-12)
    for probs in PROB_GRID:
        diff = cf.expected_rph_general(11, probs, 0) - cf.expected_hxg_general(11, probs, 0)
        assert diff == pytest.approx(90 * S2, rel=1e-9)
    with pytest.raises(DomainError):
        cf.expectation_gap(1)


@pytest.mark.parametrize("params, census, v, e", [
    (cf.Coronoid(3, 1, 1), (6, 28, 16), 40, 50),
    (cf.Graphene(2, 2), (8, 8, 8), 20, 24),
    (cf.Nanocone(5, 1), (5, 10, 10), 20, 25),
])
def test_family_census(params, census, v, e):
    fc = cf.family_census(params)
    assert fc.census.as_triple() == census
    assert (fc.v, fc.e) == (v, e)
    assert fc.handshake_ok()


def test_family_census_matches_builders():
    for n in range(1, 9):
        for k in range(1, n + 1):
            fc = cf.family_census(cf.Graphene(n, k))
            g = build_graphene(n, k)
            assert (fc.v, fc.e) == (g.vertex_count, g.edge_count)
            for variant in STANDARD_VARIANTS:
                assert rel(cf.family_index_census(cf.Graphene(n, k), variant), sombor_variant(g, variant)) <= 1e-9
    for k in (5, 6, 7):
        for n in range(1, 7):
            g = build_nanocone(k, n)
            for variant in STANDARD_VARIANTS:
                assert rel(cf.family_index_census(cf.Nanocone(k, n), variant), sombor_variant(g, variant)) <= 1e-9


def test_family_index_examples():
    assert cf.family_index_census(cf.Nanocone(5, 2), PLAIN) == pytest.approx(20 * S13 + 115 * S2, rel=1e-12)
    assert cf.family_index_paper(cf.Nanocone(5, 2), PLAIN) == pytest.approx(20 * S13 + 115 * S2, rel=1e-12)
    for fn in (cf.family_index_census, cf.family_index_paper):
        assert fn(cf.Graphene(3, 2), REDUCED) == pytest.approx(12 * S5 + 38 * S2, rel=1e-12)
    k311 = cf.Coronoid(3, 1, 1)
    assert cf.family_index_census(k311, PLAIN) == pytest.approx(60 * S2 + 28 * S13, rel=1e-12)
    assert cf.family_index_paper(k311, PLAIN) == pytest.approx(28 * S13 + 75 * S2, rel=1e-12)
    assert cf.family_index_paper(k311, AVERAGE) == pytest.approx(17.5 * S2, rel=1e-12)
    assert cf.family_index_paper(k311, REDUCED) == pytest.approx(28 * S5 + 38 * S2, rel=1e-12)
    assert cf.family_index_census(k311, REDUCED) == pytest.approx(28 * S5 + 38 * S2, rel=1e-12)


def test_coronoid_discrepancy_is_exact():
    # paper − census: SO differs by 3√2(3r−2)(2p+n); SO_avr by √2(1 − m33)/(r+1)
    for n in range(3, 10):
        for p in range(1, n + 1):
            for r in range(1, 10):
                c = cf.Coronoid(n, p, r)
                m33 = cf.family_census(c).census.m33
                d_plain = cf.family_index_paper(c, PLAIN) - cf.family_index_census(c, PLAIN)
                d_avr = cf.family_index_paper(c, AVERAGE) - cf.family_index_census(c, AVERAGE)
                assert d_plain == pytest.approx(3 * S2 * (3 * r - 2) * (2 * p + n), rel=1e-9)
                assert d_avr == pytest.approx(S2 * (1 - m33) / (r + 1), rel=1e-9)
                assert rel(cf.family_index_paper(c, REDUCED), cf.family_index_census(c, REDUCED)) <= 1e-9
                for a in (0, 1, 2.6):
                    v = IndexVariant.custom(a)
                    assert rel(cf.family_index_paper(c, v), cf.family_index_census(c, v)) <= 1e-9


def test_corollaries_follow_theorem():
    for r in range(1, 12):
        c1 = cf.Coronoid(2, 1, r, allow_out_of_domain=True)
        c2 = cf.Coronoid(2, 2, r, allow_out_of_domain=True)
        for v in STANDARD_VARIANTS:
            assert rel(cf.circumscribed_c32h16(r, v), cf.family_index_paper(c1, v)) <= 1e-9
            assert rel(cf.circumscribed_c48h24(r, v), cf.family_index_paper(c2, v)) <= 1e-9
    for n in range(1, 12):
        for v in STANDARD_VARIANTS:
            assert rel(cf.cnc5(n, v), cf.family_index_census(cf.Nanocone(5, n), v)) <= 1e-9


def test_family_domains():
    with pytest.raises(DomainError):
        cf.Graphene(2, 3)
    with pytest.raises(DomainError):
        cf.Coronoid(2, 1, 1)
    with pytest.raises(DomainError):
        cf.Coronoid(3, 4, 1)
    with pytest.raises(DomainError):
        cf.Nanocone(4, 1)
    with pytest.raises(DomainError):
        cf.Nanocone(5, 0)


def test_family_mean_degrees():
    assert cf.family_census(cf.Coronoid(4, 2, 3)).mean_degree == Fraction(11, 4)
    assert cf.family_census(cf.Nanocone(7, 3)).mean_degree == Fraction(11, 4)
    assert cf.family_census(cf.Graphene(3, 2)).mean_degree == Fraction(2 * (19 * 2 - 3), 2 * 7 * 2)
