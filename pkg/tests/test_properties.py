"""Property suites; runnable on their own with ``pytest tests/test_properties.py``."""

import warnings
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from koszulkit.algebra_core import (
    QuadraticPresentation,
    annihilator,
    dual_graded_dim,
    graded_dim,
    koszul_dual,
    monomials,
    sv_presentation,
    tensor_relations,
)
from koszulkit.complexes import build_berkovits_complex, build_koszul_complex, homology
from koszulkit.exact_linear import EchelonSpan, SparseMatrix, kernel_basis, rank
from koszulkit.hilbert import TruncatedSeries, deviations, gauss_product
from koszulkit.young_schur import (
    Partition,
    frobenius_to_partition,
    hook_content,
    lr_coefficients,
    partition_to_frobenius,
    ssyt_count,
)

small_int = st.integers(-3, 3)


@st.composite
def matrices(draw, max_dim=7):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=r, max_size=r))
    return SparseMatrix.from_dense(rows, c)


@st.composite
def presentations(draw, n_max=5, m_max=4):
    n = draw(st.integers(1, n_max))
    mons = list(monomials(n, 2))
    polys = []
    for _ in range(draw(st.integers(0, m_max))):
        terms = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=3, unique=True))
        coeffs = draw(st.lists(st.integers(-2, 2).filter(bool), min_size=len(terms), max_size=len(terms)))
        polys.append(dict(zip(terms, coeffs)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return QuadraticPresentation.from_polynomials(tuple(f"x{i}" for i in range(n)), polys)


partitions = st.lists(st.integers(1, 5), max_size=5).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


# --- exact linear algebra


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    assert rank(m) <= min(m.rows, m.cols)


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_kernel_vectors_are_annihilated_and_normalised(m):
    for v in kernel_basis(m):
        assert m.matvec(v) == {}
        assert next(x for x in v if x) == 1


@given(matrices(), st.randoms())
def test_entry_order_is_irrelevant(m, rnd):
    shuffled = list(m.entries)
    rnd.shuffle(shuffled)
    assert SparseMatrix(m.rows, m.cols, tuple(shuffled)) == m


# --- complexes


@settings(max_examples=25)
@given(presentations(), st.integers(0, 5))
def test_koszul_d_squared(pres, w):
    build_koszul_complex(pres, w).check_d_squared()


@settings(max_examples=20)
@given(presentations(n_max=4, m_max=4), st.integers(0, 5))
def test_berkovits_d_squared(pres, w):
    cx = build_berkovits_complex(pres, w)
    cx.check_d_squared()
    for (p, q), d in cx.differentials.items():
        assert d.cols == cx.dim(p, q) and d.rows == cx.dim(p - 1, q)


@settings(max_examples=15)
@given(presentations(n_max=4, m_max=3), st.integers(0, 4))
def test_euler_characteristic_invariance(pres, w):
    cx = build_berkovits_complex(pres, w)
    assert homology(cx).euler_series(w) == cx.euler_series(w)


# --- algebra and series


@settings(max_examples=30)
@given(presentations())
def test_quadric_span_and_dims(pres):
    n = pres.n
    assert graded_dim(pres, 2) + pres.m == n * (n + 1) // 2
    for d in range(4):
        assert 0 <= graded_dim(pres, d) <= comb(n + d - 1, d)


@settings(max_examples=30)
@given(presentations())
def test_double_annihilator(pres):
    q = tensor_relations(pres)
    back = annihilator(koszul_dual(pres).relation_vectors(), pres.n ** 2)
    a, b = EchelonSpan(q), EchelonSpan(back)
    assert len(a) == len(b) and all(b.contains(v) for v in q)


@given(st.integers(1, 5))
def test_exterior_dual_dims(n):
    dual = koszul_dual(sv_presentation(n))
    assert [dual_graded_dim(dual, d) for d in range(n + 2)] == [comb(n, d) for d in range(n + 2)]


@given(st.lists(st.integers(-4, 8), min_size=8, max_size=8))
def test_peeling_round_trip(eps):
    s = gauss_product(eps, 1, 8)
    assert deviations(s).epsilons == tuple(eps)
    assert gauss_product(deviations(s).epsilons, 1, 8) == s


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=7))
def test_series_inverse(tail):
    s = TruncatedSeries((1, *tail))
    assert s * s.inverse() == TruncatedSeries.one(s.order)


# --- tableaux


@given(partitions)
def test_frobenius_round_trip(lam):
    assert frobenius_to_partition(partition_to_frobenius(lam)) == lam


@given(partitions, st.integers(1, 7))
def test_ssyt_matches_hook_content(lam, N):
    assert ssyt_count(lam, N) == (hook_content(lam, N) if len(lam) <= N else 0)


small_parts = st.lists(st.integers(1, 3), max_size=3).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@settings(max_examples=40)
@given(small_parts, small_parts)
def test_lr_symmetry(a, b):
    assert lr_coefficients(a, b) == lr_coefficients(b, a)


@settings(max_examples=40)
@given(small_parts, small_parts, st.integers(1, 5))
def test_lr_dimension_homomorphism(a, b, N):
    total = sum(c * ssyt_count(nu, N) for nu, c in lr_coefficients(a, b).items())
    assert total == ssyt_count(a, N) * ssyt_count(b, N)
