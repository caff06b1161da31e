from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from koszulkit.algebra_core import (
    DependentQuadricWarning,
    QpaSyntaxError,
    QuadraticPresentation,
    annihilator,
    dual_graded_dim,
    format_presentation,
    g2n_presentation,
    graded_dim,
    koszul_dual,
    load_presentation,
    monomials,
    parse_presentation,
    quotient,
    sv_presentation,
    tensor_relations,
)
from koszulkit.exact_linear import EchelonSpan

DATA = Path(__file__).resolve().parents[1] / "src" / "koszulkit" / "data"


def test_symmetrisation_of_mixed_term():
    pres = parse_presentation("generators: x y\nrelation G1 = x*y")
    assert pres.n == 2 and pres.m == 1
    h = Fraction(1, 2)
    assert pres.quadrics[0] == ((0, h), (h, 0))


def test_shipped_file_matches_builtin():
    pres = load_presentation(DATA / "g25.qpa")
    assert (pres.n, pres.m) == (10, 5)
    assert pres.quadrics == g2n_presentation(5).quadrics


def test_empty_relation_block():
    pres = parse_presentation("generators: a b c\n")
    assert pres.m == 0
    assert [graded_dim(pres, d) for d in range(4)] == [1, 3, 6, 10]


@pytest.mark.parametrize(
    "src, line, col",
    [
        ("generators x y", 1, 11),
        ("generators: x x", 1, 15),
        ("generators: x y\nrelation R = x*y*x", 2, None),
        ("generators: x y\nrelation R = x*z", 2, None),
        ("relation R = x*y", 1, 1),
        ("generators: x\nrelation R = 2*x*x\nrelation R = x*x", 3, None),
    ],
)
def test_syntax_errors_carry_position(src, line, col):
    with pytest.raises(QpaSyntaxError) as e:
        parse_presentation(src)
    assert e.value.line == line
    if col is not None:
        assert e.value.column == col


def test_dependent_quadrics_are_pruned_with_warning():
    src = "generators: x y\nrelation A = x*y\nrelation B = 2*x*y\nrelation C = x*x"
    with pytest.warns(DependentQuadricWarning):
        pres = parse_presentation(src)
    assert pres.relation_names == ("A", "C")


def test_format_round_trip_is_bit_exact():
    text = format_presentation(g2n_presentation(5))
    assert format_presentation(parse_presentation(text)) == text
    src = "generators: x y\nrelation Q = 1/2*y*y - 3/6*x*y + x*x  # comment\n"
    canon = format_presentation(parse_presentation(src))
    assert canon == "generators: x y\nrelation Q = x*x - 1/2*x*y + 1/2*y*y\n"
    assert format_presentation(parse_presentation(canon)) == canon


def test_g2n_sizes():
    for N, (n, m) in {4: (6, 1), 5: (10, 5), 6: (15, 15)}.items():
        pres = g2n_presentation(N)
        assert (pres.n, pres.m) == (n, m)
    with pytest.raises(ValueError):
        g2n_presentation(3)


def test_graded_dims():
    assert graded_dim(sv_presentation(3), 2) == 6
    g = g2n_presentation(5)
    assert [graded_dim(g, d) for d in range(4)] == [1, 10, 50, 175]


def test_standard_monomials_span_quotient():
    Q = quotient(g2n_presentation(5))
    assert len(Q.basis(3)) == 175
    # a leading monomial of the first relation reduces to a combination of standard ones
    lead = max(g2n_presentation(5).quadric_polynomials()[0], key=lambda e: e[::-1])
    nf = Q.normal_form(lead)
    assert set(nf) <= set(Q.basis(2).labels)


def test_dual_of_polynomial_ring_is_exterior():
    dual = koszul_dual(sv_presentation(2))
    assert len(dual.relation_space) == 3
    assert [dual_graded_dim(koszul_dual(sv_presentation(4)), d) for d in range(6)] == [comb(4, d) for d in range(6)]


def test_dual_of_full_quadric_set_is_free():
    n = 3
    polys = [{e: 1} for e in monomials(n, 2)]
    pres = QuadraticPresentation.from_polynomials(("a", "b", "c"), polys)
    dual = koszul_dual(pres)
    assert len(dual.relation_space) == 0
    assert dual_graded_dim(dual, 2) == n * n
    assert dual_graded_dim(dual, 3) == n ** 3


def test_g25_dual():
    dual = koszul_dual(g2n_presentation(5))
    assert len(dual.relation_space) == 50
    assert [dual_graded_dim(dual, d) for d in range(3)] == [1, 10, 50]


def test_double_annihilator_recovers_relations():
    pres = g2n_presentation(5)
    q = tensor_relations(pres)
    dual = koszul_dual(pres)
    back = annihilator(dual.relation_vectors(), pres.n ** 2)
    a, b = EchelonSpan(q), EchelonSpan(back)
    assert len(a) == len(b) == 45 + 5
    assert all(b.contains(v) for v in q)


def test_relation_space_annihilates_q():
    pres = g2n_presentation(5)
    for r in koszul_dual(pres).relation_vectors():
        for v in tensor_relations(pres):
            assert sum(c * v.get(k, 0) for k, c in r.items()) == 0
