from fractions import Fraction

import pytest

from koszulkit.algebra_core import _sym_square_vector, g2n_presentation, monomial_index, sv_presentation
from koszulkit.complexes import build_koszul_complex
from koszulkit.exact_linear import (
    EchelonSpan,
    SparseMatrix,
    coordinates_in_span,
    image_basis,
    kernel_basis,
    product_is_zero,
    rank,
    read_matrix_market,
    rref,
    write_matrix_market,
)


def test_rank_identity_and_zero():
    assert rank(SparseMatrix.identity(3)) == 3
    assert rank(SparseMatrix.zero(4, 7)) == 0


def test_rank_of_plucker_quadrics():
    pres = g2n_presentation(5)
    idx = monomial_index(pres.n, 2)
    assert len(idx) == 55
    cols = [_sym_square_vector(pres.n, q) for q in pres.quadrics]
    m = SparseMatrix.from_columns(55, cols)
    assert rank(m) == 5


def test_canonical_entries():
    a = SparseMatrix(2, 2, ((1, 1, 2), (0, 0, 1), (1, 1, -2), (0, 1, Fraction(1, 2))))
    b = SparseMatrix(2, 2, ((0, 1, Fraction(2, 4)), (0, 0, 1)))
    assert a == b
    assert a.entries == ((0, 0, Fraction(1)), (0, 1, Fraction(1, 2)))
    with pytest.raises(IndexError):
        SparseMatrix(1, 1, ((1, 0, 1),))


def test_kernel_normalisation():
    assert kernel_basis(SparseMatrix.identity(3)) == []
    (v,) = kernel_basis(SparseMatrix.from_dense([[1, 1]]))
    assert v == (Fraction(1), Fraction(-1))


def test_kernel_of_koszul_differential_for_two_variables():
    cx = build_koszul_complex(sv_presentation(2), 2)
    d = cx.differentials[1, 2]
    assert d.cols == 4  # x θ1, x θ2, y θ1, y θ2
    ker = kernel_basis(d)
    assert len(ker) == 1
    assert d.matvec(ker[0]) == {}


def test_image_basis():
    assert image_basis(SparseMatrix.identity(2)) == [(1, 0), (0, 1)]
    assert image_basis(SparseMatrix.zero(3, 3)) == []
    (v,) = image_basis(SparseMatrix.from_dense([[1, 2], [2, 4]]))
    assert v[1] == 2 * v[0] != 0


def test_coordinates_in_span():
    assert coordinates_in_span([(1, 0)], (3, 0)) == [3]
    assert coordinates_in_span([(1, 0)], (0, 1)) is None
    a, b = {0: 1, 3: -2}, {1: 1, 3: 5}
    assert coordinates_in_span([a, b], {0: 1, 1: 1, 3: 3}) == [1, 1]


def test_rref_pivots_are_unit():
    m = SparseMatrix.from_dense([[2, 4, 6], [1, 1, 1]])
    red = rref(m)
    assert all(row[p] == 1 for p, row in red.items())
    assert sorted(red) == [0, 1]


def test_echelon_span_membership():
    span = EchelonSpan([(1, 1, 0), (0, 1, 1)])
    assert span.contains((1, 2, 1))
    assert not span.contains((0, 0, 1))
    assert not span.add((2, 3, 1))
    assert len(span) == 2


def test_product_is_zero_matches_matmul():
    a = SparseMatrix.from_dense([[1, Fraction(1, 2)], [0, 0]])
    b = SparseMatrix.from_dense([[1], [-2]])
    assert product_is_zero(a, b) == (a @ b).is_zero() == True  # noqa: E712
    c = SparseMatrix.from_dense([[1], [1]])
    assert not product_is_zero(a, c)


def test_matrix_market_round_trip(tmp_path):
    m = SparseMatrix.from_dense([[Fraction(1, 3), 0], [0, -7]])
    path = tmp_path / "m.mtx"
    write_matrix_market(m, path, "demo")
    assert read_matrix_market(path) == m
    assert "1/3" in path.read_text()
