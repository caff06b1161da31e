from fractions import Fraction

import pytest

from koszulkit.algebra_core import g2n_presentation
from koszulkit.bv_small import (
    BASIS,
    FrobeniusA5,
    berkovits_sign_euler,
    build_bv_complex,
    bv_homology,
    check_L3_free,
    frobenius_check,
    koszul_type_classes_independent,
)
from koszulkit.complexes import berkovits_homology
from koszulkit.hilbert import deviations, hilbert_series, truncated_product_tail


def y(*ks):
    e = [0] * 5
    for k in ks:
        e[k] += 1
    return tuple(e)


def d_of(cx, p, q, label):
    vec = cx.differential(p, q).matvec({cx.components[p, q].index()[label]: 1})
    return cx.labelled(p - 1, q, vec)


def test_rules():
    cx = build_bv_complex(7)
    assert d_of(cx, 1, 2, (y(), "G3")) == {(y(2), "c"): 1}
    assert d_of(cx, 1, 3, (y(), "L2")) == {}
    assert d_of(cx, 2, 7, (y(0), "c*")) == {(y(0, i), f"L{i + 1}"): (-1) ** i for i in range(5)}


def test_koszul_type_combination_is_cycle():
    cx = build_bv_complex(4)
    idx = cx.components[1, 4].index()
    v = {idx[y(1), "G1"]: 1, idx[y(0), "G2"]: -1}
    assert cx.differential(1, 4).matvec(v) == {}
    assert koszul_type_classes_independent()


def test_d_squared():
    build_bv_complex(9).check_d_squared()


def test_homology_rows():
    t = bv_homology(7)
    assert all(t[2, q] == 0 for q in range(8))
    assert [t[0, q] for q in range(8)] == [1] + [0] * 7
    assert [t[1, q] for q in range(3, 8)] == [5, 10, 24, 40, 70]


def test_series_oracle_for_h1():
    t = bv_homology(7)
    eps = deviations(hilbert_series(g2n_presentation(5), 7))
    tail = truncated_product_tail(eps, 3, 7)
    assert berkovits_sign_euler(t) == tail
    # with the plain (-1)^p sign the series is the tail at -t
    assert t.euler_series(7) == tail.alternate()


def test_freeness_report():
    rep = check_L3_free(7)
    assert rep.passed and rep.generators.as_ints() == [0, 0, 0, 5, 10, 24, 40, 70]
    low = check_L3_free(4)
    assert low.passed and "c*" in low.note


def test_zeroing_top_differential_breaks_freeness():
    rep = check_L3_free(7, top_signs=(0,) * 5)
    assert not rep.passed and rep.h2[5] == 1


def test_dropping_any_one_top_term_keeps_h2_zero():
    for i in range(5):
        signs = [1, -1, 1, -1, 1]
        signs[i] = 0
        assert check_L3_free(6, top_signs=signs).passed


def test_top_signs_do_not_change_homology():
    assert bv_homology(6, top_signs=(2, 1, -3, 1, 1)).entries == bv_homology(6).entries


def test_frobenius_table():
    rep = frobenius_check()
    assert rep.passed and rep.pairing_rank == 12
    assert rep.supercommutative_order and not rep.supercommutative_p
    alg = FrobeniusA5.standard()
    for i in range(5):
        g, l = f"G{i + 1}", f"L{i + 1}"
        s = Fraction((-1) ** i)
        assert alg.mul_vec(alg.mul_vec({g: 1}, {l: 1}), {"c": 1}) == {"c*": s}
        assert alg.mul(g, l) == alg.mul(l, g) == {"c*": s}
    P = alg.pairing_matrix()
    nonzero = [(i, j) for i in range(12) for j in range(12) if P[i][j]]
    assert len(nonzero) == 12 and {(BASIS[i], BASIS[j]) for i, j in nonzero} >= {("c", "c*"), ("c*", "c")}


@pytest.mark.slow
def test_berkovits_matches_bv_through_weight_six():
    b = berkovits_homology(g2n_presentation(5), 6)
    v = bv_homology(6)
    assert b.weight_totals() == v.weight_totals()
    assert {(q - p, q): d for (p, q), d in v.entries.items()} == b.entries
