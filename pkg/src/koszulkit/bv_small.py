"""The small complex ``S(L_2) ⊗ A(5)*`` computing Berkovits homology of G(2,5).

``A(5)`` is the 12-dimensional Frobenius algebra on ``c, Γ̃_1..Γ̃_5,
Λ̃_1..Λ̃_5, c*``.  The complex is free over ``S(y_1..y_5)`` with

    d(c) = 0,  d(Γ̃_i) = y_i c,  d(Λ̃_i) = 0,  d(c*) = sum_i (-1)^(i+1) y_i Λ̃_i

extended ``S(y)``-linearly.  Gradings: ``p(c)=0``, ``p(Γ̃)=p(Λ̃)=1``,
``p(c*)=2``, ``p(y)=0``; weights ``q(y)=q(Γ̃)=2``, ``q(Λ̃)=3``, ``q(c*)=5``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra_core import GradedBasis
from .complexes import BettiTable, BigradedComplex, _y_monomials, homology, homology_basis
from .exact_linear import SparseMatrix, rank
from .hilbert import TruncatedSeries

GAMMA = tuple(f"G{i}" for i in range(1, 6))
LAMBDA = tuple(f"L{i}" for i in range(1, 6))
BASIS = ("c",) + GAMMA + LAMBDA + ("c*",)

# (p, q) of each basis element in A(5)
BIDEGREE = {"c": (0, 0), **{g: (1, 2) for g in GAMMA}, **{l: (1, 3) for l in LAMBDA}, "c*": (2, 5)}

DEFAULT_TOP_SIGNS = tuple((-1) ** i for i in range(5))


@dataclass(frozen=True)
class FrobeniusA5:
    """Multiplication table ``(a, b) -> {basis: coeff}`` on the 12 basis labels."""

    table: dict = field(default_factory=dict)

    @classmethod
    def standard(cls) -> "FrobeniusA5":
        t = {}
        for b in BASIS:
            t["c", b] = {b: Fraction(1)}
            t[b, "c"] = {b: Fraction(1)}
        for i in range(5):
            s = Fraction((-1) ** i)
            t[GAMMA[i], LAMBDA[i]] = {"c*": s}
            t[LAMBDA[i], GAMMA[i]] = {"c*": s}
        return cls(t)

    def mul(self, a: str, b: str) -> dict:
        return self.table.get((a, b), {})

    def mul_vec(self, x: dict, y: dict) -> dict:
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for z, cz in self.mul(a, b).items():
                    out[z] = out.get(z, 0) + ca * cb * cz
        return {k: v for k, v in out.items() if v}

    def pairing_matrix(self) -> list:
        return [[self.mul(a, b).get("c*", Fraction(0)) for b in BASIS] for a in BASIS]


@dataclass
class FrobeniusReport:
    nondegenerate: bool
    associative: bool
    supercommutative_order: bool
    supercommutative_p: bool
    pairing_rank: int

    @property
    def passed(self) -> bool:
        return self.nondegenerate and self.associative and self.supercommutative_order


def frobenius_check(alg: Optional[FrobeniusA5] = None) -> FrobeniusReport:
    """Nondegenerate pairing, associativity and supercommutativity of the table.

    Supercommutativity is tested for two parities: the order grading
    ``q - p`` (c:0, Γ̃:1, Λ̃:2, c*:3), under which ``Γ̃Λ̃ = Λ̃Γ̃`` is consistent,
    and the ``p`` grading, under which it is not.
    """
    alg = alg or FrobeniusA5.standard()
    P = alg.pairing_matrix()
    r = rank(SparseMatrix.from_dense(P))
    assoc = all(
        alg.mul_vec(alg.mul_vec({a: 1}, {b: 1}), {c: 1}) == alg.mul_vec({a: 1}, alg.mul_vec({b: 1}, {c: 1}))
        for a in BASIS
        for b in BASIS
        for c in BASIS
    )

    def supercomm(parity):
        for a in BASIS:
            for b in BASIS:
                sign = (-1) ** (parity(a) * parity(b))
                lhs = alg.mul(a, b)
                rhs = {k: sign * v for k, v in alg.mul(b, a).items()}
                if lhs != rhs:
                    return False
        return True

    order = supercomm(lambda x: BIDEGREE[x][1] - BIDEGREE[x][0])
    pgrade = supercomm(lambda x: BIDEGREE[x][0])
    return FrobeniusReport(r == len(BASIS), assoc, order, pgrade, r)


# ---------------------------------------------------------------------------
# the complex


def _rules(top_signs: Sequence) -> dict:
    """``d`` on ``A(5)`` basis: ``{b: [(k, target, coeff)]}`` meaning ``coeff * y_k * target``."""
    rules = {"c": [], "c*": [(i, LAMBDA[i], Fraction(s)) for i, s in enumerate(top_signs) if s]}
    for i in range(5):
        rules[GAMMA[i]] = [(i, "c", Fraction(1))]
        rules[LAMBDA[i]] = []
    return rules


def build_bv_complex(max_weight: int, top_signs: Optional[Sequence] = None) -> BigradedComplex:
    """Weight-truncated ``S(y) ⊗ A(5)`` with the derivation rules above.

    ``top_signs`` overrides the coefficients of ``y_i Λ̃_i`` in ``d(c*)``
    (fault injection); the default is ``(-1)^(i+1)``.
    """
    if max_weight < 0:
        raise ValueError("max_weight >= 0")
    rules = _rules(DEFAULT_TOP_SIGNS if top_signs is None else tuple(top_signs))
    comps = {}
    for b in BASIS:
        p, qb = BIDEGREE[b]
        for t in range((max_weight - qb) // 2 + 1) if qb <= max_weight else ():
            q = qb + 2 * t
            for alpha in _y_monomials(5, t):
                comps.setdefault((p, q), []).append((alpha, b))
    comps = {k: GradedBasis(k[1], tuple(v)) for k, v in comps.items()}
    diffs = {}
    for (p, q), basis in comps.items():
        if p == 0 or (p - 1, q) not in comps:
            continue
        tidx = comps[p - 1, q].index()
        entries = []
        for col, (alpha, b) in enumerate(basis.labels):
            for k, target, c in rules[b]:
                beta = alpha[:k] + (alpha[k] + 1,) + alpha[k + 1:]
                entries.append((tidx[beta, target], col, c))
        diffs[p, q] = SparseMatrix(len(comps[p - 1, q]), len(basis), tuple(entries))
    return BigradedComplex(max_weight, comps, diffs, "bv")


def bv_homology(max_weight: int, top_signs: Optional[Sequence] = None, threads: Optional[int] = None) -> BettiTable:
    return homology(build_bv_complex(max_weight, top_signs), threads)


def generator_series(table: BettiTable) -> TruncatedSeries:
    """``g(t) = sum_q dim H^1_q t^q``."""
    return TruncatedSeries(tuple(table[1, q] for q in range(table.max_weight + 1)))


def berkovits_sign_euler(table: BettiTable) -> TruncatedSeries:
    """Euler series with sign ``(-1)^(q-p)``, the sign of the Berkovits degree ``q - p``."""
    c = [0] * (table.max_weight + 1)
    for (p, q), v in table.entries.items():
        c[q] += (-1) ** (q - p) * v
    return TruncatedSeries(tuple(c))


@dataclass
class FreenessReport:
    passed: bool
    max_weight: int
    h2: dict
    h0: dict
    generators: TruncatedSeries
    note: str = ""

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "max_weight": self.max_weight,
            "h2": {str(q): v for q, v in self.h2.items()},
            "h0": {str(q): v for q, v in self.h0.items()},
            "generators": [int(x) for x in self.generators],
            "note": self.note,
        }


def check_L3_free(max_weight: int = 7, top_signs: Optional[Sequence] = None, threads: Optional[int] = None) -> FreenessReport:
    """Pass iff the ``p = 2`` row vanishes on every weight ``<= max_weight``."""
    table = bv_homology(max_weight, top_signs, threads)
    h2 = {q: table[2, q] for q in range(max_weight + 1)}
    h0 = {q: table[0, q] for q in range(max_weight + 1)}
    note = ""
    if max_weight < 5:
        note = f"window q <= {max_weight} does not reach c* (weight 5): H^2 vanishes trivially"
    return FreenessReport(all(v == 0 for v in h2.values()), max_weight, h2, h0, generator_series(table), note)


def koszul_type_cycles() -> list:
    """``y_j Γ̃_i - y_i Γ̃_j`` (i<j) as vectors at ``(1, 4)``."""
    cx = build_bv_complex(4)
    idx = cx.components[1, 4].index()
    out = []
    for i in range(5):
        for j in range(i + 1, 5):
            yj = tuple(1 if k == j else 0 for k in range(5))
            yi = tuple(1 if k == i else 0 for k in range(5))
            out.append({idx[yj, GAMMA[i]]: Fraction(1), idx[yi, GAMMA[j]]: Fraction(-1)})
    return out


def koszul_type_classes_independent() -> bool:
    cx = build_bv_complex(4)
    hb = homology_basis(cx, 1, 4, koszul_type_cycles())
    return len(hb.representatives) == 10
