"""Tests for the exact Rosenhain invariant expansions."""

import pytest

from humbert.rosenhain import rosenhain_triple
from humbert.series import TruncatedSeries
from humbert.theta import ThetaChar, humbert_params, restricted_theta

DISCS = [4, 5, 8, 12, 13]


@pytest.mark.parametrize("delta", DISCS)
def test_constant_terms_are_one(delta):
    triple = rosenhain_triple(humbert_params(delta), 20)
    for f in triple.series():
        assert f.constant_term() == 1


@pytest.mark.parametrize("delta", DISCS)
def test_integrality(delta):
    triple = rosenhain_triple(humbert_params(delta), 60)
    for f in triple.series():
        assert f.is_integral()


@pytest.mark.parametrize("delta", DISCS)
def test_definition_unwinds(delta):
    # e1 * th2^2 * th4^2 == th1^2 * th3^2 without any division,
    # and the same unwinding for e2, e3 after cancelling the common
    # monomial from th8, th10.
    disc = humbert_params(delta)
    n = 40
    triple = rosenhain_triple(disc, n)
    th = {i: restricted_theta(ThetaChar.from_index(i), disc, n)
          for i in (1, 2, 3, 4, 8, 10)}
    sq = {i: f * f for i, f in th.items()}
    assert triple.e1 * sq[2] * sq[4] == sq[1] * sq[3]
    i0 = 1 + disc.k
    j0 = disc.k + disc.ell - 1
    u8 = th[8].divide_monomial(i0, j0)
    u10 = th[10].divide_monomial(i0, j0)
    assert triple.e2 * sq[4] * (u10 * u10) == sq[3] * (u8 * u8)
    assert triple.e3 * sq[2] * (u10 * u10) == sq[1] * (u8 * u8)


def test_minimum_inputs_rejected():
    with pytest.raises(ValueError):
        rosenhain_triple(humbert_params(4), 3)


def test_small_precision_example_runs():
    triple = rosenhain_triple(humbert_params(12), 8)
    assert triple.precision == 8
    for f in triple.series():
        assert f.constant_term() == 1


@pytest.mark.parametrize("delta", DISCS)
def test_distinctness_at_adequate_precision(delta):
    # at high enough precision the three invariants and the constants
    # 0 and 1 are pairwise distinguishable in the truncated ring
    triple = rosenhain_triple(humbert_params(delta), 60)
    assert triple.is_distinct()
    e1, e2, e3 = triple.series()
    one = TruncatedSeries.one(60)
    assert e1 != e2 and e1 != e3 and e2 != e3
    assert e1 != one and e2 != one and e3 != one


def test_truncation_consistency_across_precision():
    # recomputing at lower precision must agree with truncating
    disc = humbert_params(5)
    hi = rosenhain_triple(disc, 40)
    lo = rosenhain_triple(disc, 24)
    for f, g in zip(hi.series(), lo.series()):
        cut = TruncatedSeries(
            {k: c for k, c in f.terms.items() if k[0] < 24 and k[1] < 24},
            24)
        assert cut == g
