from fractions import Fraction

import pytest

from koszulkit.algebra_core import g2n_presentation, parse_presentation, sv_presentation, unit_exponent
from koszulkit.complexes import (
    BettiTable,
    BigradedComplex,
    build_berkovits_complex,
    build_koszul_complex,
    first_syzygy_reps,
    frobenius_pattern,
    g25_frobenius_products,
    g25_koszul_classes,
    g25_second_syzygies,
    g25_tableau_bases,
    homology,
    homology_basis,
    homology_product,
    is_cycle,
    koszul_product,
    syzygy_betti,
    verify_g25_resolution,
    wedge,
)
from koszulkit.hilbert import TruncatedSeries, hilbert_series
from koszulkit.young_schur import predicted_syzygy_betti

G25 = g2n_presentation(5)


@pytest.fixture(scope="module")
def g25_classes():
    return g25_koszul_classes(5)


def test_koszul_complex_small():
    cx = build_koszul_complex(sv_presentation(2), 1)
    assert cx.components[1, 1].labels == (((0, 0), (0,)), ((0, 0), (1,)))
    d = cx.differentials[1, 1]
    # d(θ_i) = a_i, and A_1 is ordered x, y
    assert cx.components[0, 1].labels == (((1, 0), ()), ((0, 1), ()))
    assert d.to_dense() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_polynomial_ring_resolves_ground_field(n):
    assert syzygy_betti(sv_presentation(n), 6).entries == {(0, 0): 1}


def test_wedge_signs():
    assert wedge((0,), (1,)) == (1, (0, 1))
    assert wedge((1,), (0,)) == (-1, (0, 1))
    assert wedge((0, 2), (1,)) == (-1, (0, 1, 2))
    assert wedge((0,), (0,)) is None


def test_first_syzygies_of_g25_are_cycles():
    cx = build_koszul_complex(G25, 2)
    reps = first_syzygy_reps(G25)
    assert len(reps) == 5
    vecs = [cx.vector(1, 2, r) for r in reps]
    assert all(is_cycle(cx, 1, 2, v) for v in vecs)
    assert len(homology_basis(cx, 1, 2, vecs).representatives) == 5


def test_first_syzygy_explicit_terms():
    names = G25.generator_names
    e = {g: i for i, g in enumerate(names)}
    n = G25.n
    rep = first_syzygy_reps(G25)[0]
    h = Fraction(1, 2)
    expected = {}
    for a, b, c in (("e24", "e35", -1), ("e23", "e45", 1), ("e25", "e34", 1)):
        expected[unit_exponent(n, e[a]), (e[b],)] = c * h
        expected[unit_exponent(n, e[b]), (e[a],)] = c * h
    assert rep == expected


def test_single_mixed_relation():
    pres = parse_presentation("generators: x y\nrelation R = x*y")
    (rep,) = first_syzygy_reps(pres)
    assert rep == {((1, 0), (1,)): Fraction(1, 2), ((0, 1), (0,)): Fraction(1, 2)}
    assert first_syzygy_reps(sv_presentation(2)) == []


@pytest.mark.slow
def test_g25_betti_table():
    t = syzygy_betti(G25, 6)
    assert t.entries == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}


@pytest.mark.slow
def test_g26_betti_low_weights():
    t = syzygy_betti(g2n_presentation(6), 4)
    oracle = {k: v for k, v in predicted_syzygy_betti(6).items() if k[1] <= 4}
    assert t.entries == oracle == {(0, 0): 1, (1, 2): 15, (2, 3): 35, (3, 4): 21}


def test_berkovits_without_quadrics_is_koszul():
    a = build_berkovits_complex(sv_presentation(3), 4)
    b = build_koszul_complex(sv_presentation(3), 4)
    assert {k: len(v) for k, v in a.components.items()} == {k: len(v) for k, v in b.components.items()}
    assert homology(a).entries == homology(b).entries == {(0, 0): 1}


def test_berkovits_component_and_y_differential():
    cx = build_berkovits_complex(G25, 2)
    labels = cx.components[2, 2].labels
    ys = [lab for lab in labels if any(lab[2])]
    assert len(ys) == 5 and len(labels) == 5 + 45
    d = cx.differentials[2, 2]
    gam = first_syzygy_reps(G25)
    for k, lab in enumerate(sorted(ys, key=lambda l: l[2], reverse=True)):
        img = d.matvec({cx.components[2, 2].index()[lab]: 1})
        want = cx.vector(1, 2, {(m, S, (0,) * 5): c for (m, S), c in gam[k].items()})
        assert img == want


def test_berkovits_euler_closed_form():
    cx = build_berkovits_complex(G25, 6)
    closed = hilbert_series(G25, 6) * TruncatedSeries.binomial_factor(1, 10, 6) * TruncatedSeries.binomial_factor(2, -5, 6)
    assert cx.euler_series() == closed


def test_euler_characteristic_is_homology_invariant():
    cx = build_berkovits_complex(G25, 4)
    assert homology(cx).euler_series(4) == cx.euler_series(4)


def test_betti_table_formats():
    t = BettiTable({(0, 0): 1, (1, 2): 5, (2, 2): 0}, 2, (0, 1, 2))
    assert t.to_json() == {
        "betti": [{"p": 0, "q": 0, "dim": 1}, {"p": 1, "q": 2, "dim": 5}],
        "max_weight": 2,
        "trusted_weights": [0, 1, 2],
    }
    assert t.to_csv() == "p,q,dim\n0,0,1\n1,2,5\n"
    assert t[3, 3] == 0


def test_empty_complex():
    cx = BigradedComplex(0, {}, {})
    assert homology(cx).entries == {}


def test_resolution_matrices():
    syz = g25_second_syzygies()
    idx = {g: i for i, g in enumerate(G25.generator_names)}
    assert syz[0] == [{}, {idx["e12"]: -1}, {idx["e13"]: 1}, {idx["e14"]: -1}, {idx["e15"]: 1}]


@pytest.mark.slow
def test_resolution_is_exact():
    rep = verify_g25_resolution(7)
    assert rep.passed, rep.failures()
    names = {c.name for c in rep.checks}
    assert "H0 = A at weight 3" in names


def test_resolution_needs_weight_five():
    with pytest.raises(ValueError):
        verify_g25_resolution(4)


def test_tableau_basis_signs():
    tb = g25_tableau_bases()
    assert tb["gamma_signs"] == [1] * 5
    assert tb["lambda_signs"] == [1, -1, 1, -1, 1]


@pytest.mark.slow
def test_products_in_tableau_basis(g25_classes):
    fp = g25_frobenius_products(5, "tableau")
    assert frobenius_pattern(fp["normalised"])
    assert fp["reversed"] == fp["normalised"]
    assert all(c == 0 for row in fp["gamma_gamma"] for cell in row for c in cell)


@pytest.mark.slow
def test_products_in_resolution_basis_are_diagonal():
    fp = g25_frobenius_products(5, "resolution")
    assert fp["normalised"] == [[1 if i == j else 0 for j in range(5)] for i in range(5)]


@pytest.mark.slow
def test_unit_and_supercommutativity(g25_classes):
    cx, gam, lam, top = g25_classes
    one = homology_basis(cx, 0, 0)
    assert homology_product(one, gam, cx, gam) == [[[1 if i == j else 0 for j in range(5)] for i in range(5)]]
    ab = homology_product(gam, lam, cx, top)
    ba = homology_product(lam, gam, cx, top)
    sign = (-1) ** (1 * 2)
    assert all(ab[i][j] == [sign * x for x in ba[j][i]] for i in range(5) for j in range(5))


def test_product_requires_koszul_complex():
    cx = build_berkovits_complex(sv_presentation(1), 1)
    with pytest.raises(ValueError):
        koszul_product(cx, {}, (0, 0), {}, (0, 0))
