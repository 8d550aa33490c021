"""Tests for relation discovery by exact linear algebra."""

import random
from math import comb

import pytest

from humbert.poly import MultiPoly, eval_on_series
from humbert.relations import (AmbiguousKernel, NoRelation, build_matrix,
                               default_precision, find_relation, kernel,
                               monomial_basis)
from humbert.rosenhain import rosenhain_triple
from humbert.theta import humbert_params

rng = random.Random(777)


def test_monomial_basis_counts():
    assert len(monomial_basis(4)) == comb(7, 3)  # 35
    assert len(monomial_basis(16)) == comb(19, 3)  # 969
    assert len(monomial_basis(2)) == 10


def test_monomial_basis_symmetry_classes():
    basis = monomial_basis(2, symmetry="e1e2")
    # degree <= 2 orbit representatives under e1 <-> e2: seven classes
    assert len(basis) == 7
    for rep in basis:
        a, b, c = rep
        assert a >= b


def test_default_precision_grows_with_degree():
    assert default_precision(2) < default_precision(8) < default_precision(16)
    assert default_precision(8) >= 4


def test_build_matrix_rank_at_degree_one():
    # 1, e1, e2, e3 are linearly independent power series on any H_Delta
    triple = rosenhain_triple(humbert_params(5), 24)
    basis = monomial_basis(1)
    rows, _ = build_matrix(triple, basis)
    assert len(kernel(rows)) == 0


def test_kernel_simple_cases():
    # x + y = 0 plane: rows are coordinate evaluations
    rows = [[1, 2, 3], [-1, -2, -3], [0, 1, 1]]
    vecs = kernel(rows)
    assert len(vecs) == 1
    v = vecs[0]
    assert v[0] == v[1] and v[2] == 0
    assert kernel([[1, 0], [0, 1]]) == []


def test_delta4_degree2_relation_is_product_formula():
    report = find_relation(4, 2)
    assert report.kernel_dim == 1
    assert report.polynomial == MultiPoly(
        {(1, 1, 0): 1, (0, 0, 1): -1})  # e1 e2 - e3


def test_below_true_degree_raises_no_relation():
    with pytest.raises(NoRelation):
        find_relation(4, 1)
    with pytest.raises(NoRelation):
        find_relation(12, 3)


def test_explicit_overgenerous_degree_is_ambiguous():
    # degree 4 for Delta = 4 contains all multiples of the degree-2
    # relation, so the kernel cannot be one-dimensional
    with pytest.raises(AmbiguousKernel):
        find_relation(4, 4, precision=48)


def test_delta5_relation_found_and_vanishes():
    report = find_relation(5, 8)
    assert report.kernel_dim == 1
    assert report.polynomial.degree() == 8
    fresh = rosenhain_triple(humbert_params(5), report.precision + 8)
    assert eval_on_series(report.polynomial, fresh).is_zero()
    assert all(ok for _, ok in report.residual_checks)


def test_delta8_relation_with_and_without_modular_path_agree():
    exact = find_relation(8, 8, use_modular=False)
    modular = find_relation(8, 8, use_modular=True)
    assert exact.polynomial == modular.polynomial
    assert exact.kernel_dim == modular.kernel_dim == 1


def test_symmetric_search_matches_full_search():
    # the Delta = 4 component e1 e2 - e3 is e1 <-> e2 symmetric
    full = find_relation(4, 2)
    sym = find_relation(4, 2, symmetry="e1e2")
    assert full.polynomial == sym.polynomial


def test_symmetric_search_misses_asymmetric_component():
    # the Delta = 8 component is not e1 <-> e2 symmetric, so it is
    # invisible inside the symmetric subspace
    with pytest.raises(NoRelation):
        find_relation(8, 8, symmetry="e1e2", precision=72)


def test_report_record_shape():
    report = find_relation(4, 2)
    rec = report.to_record()
    assert rec["schema"].startswith("humbert.relation/")
    assert rec["delta"] == 4 and rec["degree"] == 2
    assert rec["kernel_dim"] == 1
    assert isinstance(rec["polynomial"], dict)
