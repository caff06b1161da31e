"""Weight-truncated bigraded chain complexes over Q.

A component is indexed by ``(p, q)``: homological degree ``p`` and weight
``q``.  Differentials map ``(p, q) -> (p - 1, q)``.  Since every
differential preserves weight, each weight is a finite complex on its own
and every weight up to ``max_weight`` is computed exactly.

Sign convention: exterior generators ``θ_j`` are kept in increasing index
order and ``∂/∂θ_j`` carries ``(-1)^(number of θ's before j)``; the ``y_k``
are even and sign-free.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from pathlib import Path
from typing import Optional, Sequence

from .algebra_core import (
    GradedBasis,
    QuadraticPresentation,
    g2n_presentation,
    graded_dim,
    mono_mul,
    monomial_index,
    monomials,
    quotient,
    unit_exponent,
)
from .exact_linear import (
    EchelonSpan,
    SparseMatrix,
    coordinates_in_span,
    image_basis,
    kernel_basis,
    product_is_zero,
    rank,
    write_matrix_market,
)
from .hilbert import TruncatedSeries


class ComplexError(RuntimeError):
    """A constructed differential does not square to zero."""


@dataclass(frozen=True, eq=False)
class BigradedComplex:
    max_weight: int
    components: dict
    differentials: dict
    kind: str = ""
    algebra: Optional[QuadraticPresentation] = None
    _ranks: dict = field(default_factory=dict, repr=False)

    def dim(self, p: int, q: int) -> int:
        b = self.components.get((p, q))
        return len(b) if b is not None else 0

    def differential(self, p: int, q: int) -> SparseMatrix:
        d = self.differentials.get((p, q))
        if d is None:
            return SparseMatrix.zero(self.dim(p - 1, q), self.dim(p, q))
        return d

    def rank(self, p: int, q: int) -> int:
        r = self._ranks.get((p, q))
        if r is None:
            d = self.differentials.get((p, q))
            r = rank(d) if d is not None else 0
            self._ranks[p, q] = r
        return r

    def bidegrees(self) -> list:
        return sorted(self.components, key=lambda pq: (pq[1], pq[0]))

    def weights(self) -> list:
        return sorted({q for _, q in self.components})

    def vector(self, p: int, q: int, labelled: dict) -> dict:
        """Convert ``{label: coeff}`` to ``{index: coeff}`` in component ``(p, q)``."""
        idx = self.components[p, q].index()
        return {idx[lab]: Fraction(c) for lab, c in labelled.items() if c}

    def labelled(self, p: int, q: int, vec: dict) -> dict:
        if not vec:
            return {}
        labels = self.components[p, q].labels
        return {labels[i]: c for i, c in vec.items()}

    def check_d_squared(self) -> None:
        for (p, q), d in self.differentials.items():
            below = self.differentials.get((p - 1, q))
            if below is not None and not product_is_zero(below, d):
                raise ComplexError(f"d∘d != 0 at bidegree ({p}, {q})")

    def euler_series(self, N: Optional[int] = None) -> TruncatedSeries:
        """``sum_q (sum_p (-1)^p dim C_{p,q}) t^q``."""
        N = self.max_weight if N is None else N
        c = [0] * (N + 1)
        for (p, q), b in self.components.items():
            if q <= N:
                c[q] += (-1) ** p * len(b)
        return TruncatedSeries(tuple(c))

    def dump_matrices(self, directory) -> list:
        """Write every differential as MatrixMarket; returns the paths written."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for (p, q) in sorted(self.differentials):
            path = directory / f"{self.kind or 'complex'}_d_{p}_{q}.mtx"
            write_matrix_market(self.differentials[p, q], path, f"differential ({p},{q}) -> ({p - 1},{q})")
            paths.append(path)
        return paths


@dataclass(frozen=True)
class BettiTable:
    entries: dict
    max_weight: int
    trusted_weights: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, pq) -> int:
        return self.entries.get(tuple(pq), 0)

    def weight_totals(self) -> dict:
        out = {}
        for (p, q), v in self.entries.items():
            out[q] = out.get(q, 0) + v
        return {q: out.get(q, 0) for q in self.trusted_weights}

    def euler_series(self, N: Optional[int] = None) -> TruncatedSeries:
        N = self.max_weight if N is None else N
        c = [0] * (N + 1)
        for (p, q), v in self.entries.items():
            if q <= N:
                c[q] += (-1) ** p * v
        return TruncatedSeries(tuple(c))

    def to_json(self) -> dict:
        return {
            "betti": [{"p": p, "q": q, "dim": v} for (p, q), v in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))],
            "max_weight": self.max_weight,
            "trusted_weights": list(self.trusted_weights),
        }

    def to_csv(self) -> str:
        lines = ["p,q,dim"]
        for (p, q), v in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            lines.append(f"{p},{q},{v}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        if not self.entries:
            return "(zero)\n"
        ps = sorted({p for p, _ in self.entries})
        qs = sorted({q for _, q in self.entries})
        head = "q\\p " + " ".join(f"{p:>5}" for p in ps)
        rows = [head]
        for q in qs:
            rows.append(f"{q:>3} " + " ".join(f"{self[p, q] or '.':>5}" for p in ps))
        return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class HomologyBasis:
    """Cycle representatives at ``bidegree`` whose classes form a basis of homology."""

    bidegree: tuple
    representatives: tuple


# ---------------------------------------------------------------------------
# sign helpers


def _insert(S: tuple, j: int):
    """``θ_j ∧ θ_S`` as ``(sign, sorted tuple)``, or None when ``j ∈ S``."""
    if j in S:
        return None
    before = sum(1 for s in S if s < j)
    T = S[:before] + (j,) + S[before:]
    return (-1 if before % 2 else 1), T


def wedge(S: tuple, T: tuple):
    """``θ_S ∧ θ_T`` as ``(sign, sorted tuple)``, or None if they overlap."""
    if set(S) & set(T):
        return None
    inv = sum(1 for s in S for t in T if s > t)
    return (-1 if inv % 2 else 1), tuple(sorted(S + T))


def _threads(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("KOSZULKIT_THREADS", "1") or 1)
    return max(1, threads)


# ---------------------------------------------------------------------------
# builders


class _Multiplier:
    """Cached ``NF(m * a_j)`` for standard monomials ``m``."""

    def __init__(self, pres: QuadraticPresentation):
        self.Q = quotient(pres)
        self.n = pres.n
        self._cache = {}

    def __call__(self, m: tuple, j: int) -> dict:
        key = (m, j)
        r = self._cache.get(key)
        if r is None:
            nf = self.Q.normal_form(mono_mul(m, unit_exponent(self.n, j)))
            r = self._cache[key] = {k: _int_if_integral(v) for k, v in nf.items()}
        return r


def _int_if_integral(x):
    """Plain ints keep the inner loops off ``Fraction`` arithmetic."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _koszul_terms(mult, m, S, n):
    """Terms of ``sum_j a_j ∂/∂θ_j`` applied to ``m θ_S``: yields ``(m', T, coeff)``."""
    for pos, j in enumerate(S):
        sign = -1 if pos % 2 else 1
        T = S[:pos] + S[pos + 1:]
        for m2, c in mult(m, j).items():
            yield m2, T, sign * c


def build_koszul_complex(pres: QuadraticPresentation, max_weight: int) -> BigradedComplex:
    """``A ⊗ Λ(θ_1..θ_n)`` with differential ``sum_i a_i ∂/∂θ_i``.

    Component ``(p, q)`` has basis ``(standard monomial of degree q-p, p-subset)``.
    """
    if max_weight < 0:
        raise ValueError("max_weight >= 0")
    n = pres.n
    Q = quotient(pres)
    mult = _Multiplier(pres)
    comps = {}
    for q in range(max_weight + 1):
        for p in range(0, min(n, q) + 1):
            mons = Q.basis(q - p).labels
            if not mons:
                continue
            comps[p, q] = GradedBasis(q, tuple((m, S) for m in mons for S in combinations(range(n), p)))
    diffs = {}
    for (p, q), basis in comps.items():
        if p == 0 or (p - 1, q) not in comps:
            continue
        tidx = comps[p - 1, q].index()
        entries = []
        for col, (m, S) in enumerate(basis.labels):
            for m2, T, c in _koszul_terms(mult, m, S, n):
                entries.append((tidx[m2, T], col, c))
        diffs[p, q] = SparseMatrix(len(comps[p - 1, q]), len(basis), tuple(entries))
    return BigradedComplex(max_weight, comps, diffs, "koszul", pres)


def _y_monomials(m: int, t: int) -> list:
    out = []
    for idx in combinations_with_replacement(range(m), t):
        e = [0] * m
        for i in idx:
            e[i] += 1
        out.append(tuple(e))
    return out


def build_berkovits_complex(pres: QuadraticPresentation, max_weight: int) -> BigradedComplex:
    """``A ⊗ Λ(θ) ⊗ S(y_1..y_m)`` with ``sum a_i ∂/∂θ_i + sum Γ̃_k ∂/∂y_k``.

    ``θ`` has (degree, weight) ``(1, 1)`` and ``y`` has ``(2, 2)``; basis
    labels are ``(monomial, θ-subset, y-exponent)``.
    """
    if max_weight < 0:
        raise ValueError("max_weight >= 0")
    n, mq = pres.n, pres.m
    # Γ̃_k must have weight 2 for the differential to be homogeneous
    assert all(sum(e) == 2 for poly in pres.quadric_polynomials() for e in poly)
    Q = quotient(pres)
    mult = _Multiplier(pres)
    gt = [
        [(i, j, _int_if_integral(q[i][j])) for i in range(n) for j in range(n) if q[i][j]]
        for q in pres.quadrics
    ]
    comps = {}
    for q in range(max_weight + 1):
        for p in range(0, q + 1):
            mons = Q.basis(q - p).labels
            if not mons:
                continue
            labels = []
            for t in range(p // 2 + 1):
                s = p - 2 * t
                if s > n or (t and not mq):
                    continue
                ys = _y_monomials(mq, t)
                for m in mons:
                    for S in combinations(range(n), s):
                        for beta in ys:
                            labels.append((m, S, beta))
            if labels:
                comps[p, q] = GradedBasis(q, tuple(labels))
    diffs = {}
    for (p, q), basis in comps.items():
        if p == 0 or (p - 1, q) not in comps:
            continue
        tidx = comps[p - 1, q].index()
        entries = []
        for col, (m, S, beta) in enumerate(basis.labels):
            for m2, T, c in _koszul_terms(mult, m, S, n):
                entries.append((tidx[m2, T, beta], col, c))
            for k, bk in enumerate(beta):
                if not bk:
                    continue
                beta2 = beta[:k] + (bk - 1,) + beta[k + 1:]
                for i, j, g in gt[k]:
                    ins = _insert(S, j)
                    if ins is None:
                        continue
                    sign, T = ins
                    for m2, c in mult(m, i).items():
                        entries.append((tidx[m2, T, beta2], col, bk * sign * g * c))
        diffs[p, q] = SparseMatrix(len(comps[p - 1, q]), len(basis), tuple(entries))
    return BigradedComplex(max_weight, comps, diffs, "berkovits", pres)


# ---------------------------------------------------------------------------
# homology


def homology(cx: BigradedComplex, threads: Optional[int] = None, check: bool = True) -> BettiTable:
    """Homology dimensions ``dim ker d_{p,q} - rank d_{p+1,q}`` for every stored bidegree."""
    if check:
        cx.check_d_squared()
    keys = sorted(cx.differentials)
    workers = _threads(threads)
    if workers > 1 and len(keys) > 1:
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(lambda pq: cx.rank(*pq), keys))
    out = {}
    for (p, q) in cx.components:
        out[p, q] = cx.dim(p, q) - cx.rank(p, q) - cx.rank(p + 1, q)
    return BettiTable(out, cx.max_weight, tuple(range(cx.max_weight + 1)))


def syzygy_betti(pres: QuadraticPresentation, max_weight: int, threads: Optional[int] = None) -> BettiTable:
    """Betti table ``R_{p,q}`` of the algebra of syzygies (order ``p``, degree ``q``)."""
    return homology(build_koszul_complex(pres, max_weight), threads)


def berkovits_homology(pres: QuadraticPresentation, max_weight: int, threads: Optional[int] = None) -> BettiTable:
    return homology(build_berkovits_complex(pres, max_weight), threads)


def cycle_space(cx: BigradedComplex, p: int, q: int) -> list:
    if (p, q) in cx.differentials:
        return kernel_basis(cx.differentials[p, q], sparse=True)
    return [{i: Fraction(1)} for i in range(cx.dim(p, q))]


def boundary_space(cx: BigradedComplex, p: int, q: int) -> list:
    d = cx.differentials.get((p + 1, q))
    return image_basis(d, sparse=True) if d is not None else []


def is_cycle(cx: BigradedComplex, p: int, q: int, vec: dict) -> bool:
    d = cx.differentials.get((p, q))
    return d is None or not d.matvec(vec)


def homology_basis(cx: BigradedComplex, p: int, q: int, candidates: Optional[Sequence[dict]] = None) -> HomologyBasis:
    """Pick representatives greedily from ``candidates`` (default: a cycle basis).

    With explicit candidates, each must be a cycle; they are kept in order
    when their classes are independent, and the result may span only part of
    homology.
    """
    span = EchelonSpan(boundary_space(cx, p, q))
    if candidates is None:
        candidates = cycle_space(cx, p, q)
    else:
        for v in candidates:
            if not is_cycle(cx, p, q, v):
                raise ValueError(f"candidate at ({p}, {q}) is not a cycle")
    reps = [dict(v) for v in candidates if span.add(v)]
    return HomologyBasis((p, q), tuple(reps))


def class_coordinates(cx: BigradedComplex, hb: HomologyBasis, vec: dict) -> Optional[list]:
    """Coordinates of the class of the cycle ``vec`` in ``hb``; None if outside their span."""
    p, q = hb.bidegree
    bnd = boundary_space(cx, p, q)
    coords = coordinates_in_span(list(hb.representatives) + bnd, vec)
    if coords is None:
        return None
    return coords[: len(hb.representatives)]


def koszul_product(cx: BigradedComplex, x: dict, bx: tuple, y: dict, by: tuple) -> dict:
    """``(a θ_S)(b θ_T) = ab θ_S∧θ_T`` on chain vectors, reduced in ``A``."""
    if cx.kind != "koszul":
        raise ValueError("products are defined here for Koszul complexes only")
    Q = quotient(cx.algebra)
    (p1, q1), (p2, q2) = bx, by
    target = (p1 + p2, q1 + q2)
    if target not in cx.components:
        return {}
    lx = cx.labelled(p1, q1, x)
    ly = cx.labelled(p2, q2, y)
    tidx = cx.components[target].index()
    out = {}
    for (m1, S), c1 in lx.items():
        for (m2, T), c2 in ly.items():
            w = wedge(S, T)
            if w is None:
                continue
            sign, U = w
            for m3, c3 in Q.normal_form(mono_mul(m1, m2)).items():
                k = tidx[m3, U]
                out[k] = out.get(k, 0) + sign * c1 * c2 * c3
    return {k: v for k, v in out.items() if v}


def homology_product(hb1: HomologyBasis, hb2: HomologyBasis, cx: BigradedComplex, target: Optional[HomologyBasis] = None) -> list:
    """Table ``T[i][j]`` = coordinates of ``[x_i][y_j]`` in the target homology basis."""
    p1, q1 = hb1.bidegree
    p2, q2 = hb2.bidegree
    tp, tq = p1 + p2, q1 + q2
    if target is None:
        target = homology_basis(cx, tp, tq) if (tp, tq) in cx.components else HomologyBasis((tp, tq), ())
    table = []
    for x in hb1.representatives:
        row = []
        for y in hb2.representatives:
            z = koszul_product(cx, x, hb1.bidegree, y, hb2.bidegree)
            if (tp, tq) in cx.components:
                assert is_cycle(cx, tp, tq, z), "product of cycles is not a cycle"
            coords = class_coordinates(cx, target, z) if z else [Fraction(0)] * len(target.representatives)
            if coords is None:
                raise ValueError("product class is outside the span of the target basis")
            row.append(coords)
        table.append(row)
    return table


# ---------------------------------------------------------------------------
# syzygy representatives


def first_syzygy_reps(pres: QuadraticPresentation) -> list:
    """``Γ̃_k = sum_ij Γ^k_ij a_i θ_j`` as labelled chains at ``(1, 2)``."""
    n = pres.n
    out = []
    for q in pres.quadrics:
        vec = {}
        for i in range(n):
            for j in range(n):
                if q[i][j]:
                    lab = (unit_exponent(n, i), (j,))
                    vec[lab] = vec.get(lab, 0) + q[i][j]
        out.append({k: v for k, v in vec.items() if v})
    return out


def lift_linear_syzygies(pres: QuadraticPresentation, syzygies: Sequence[Sequence[dict]]) -> list:
    """Koszul-homology representatives at ``(2, 3)`` of linear second syzygies.

    ``syzygies[j][k]`` is a linear form ``{generator index: coeff}`` with
    ``sum_k syzygies[j][k] * Γ_k = 0`` in ``S(V)``.  With ``φ_k`` the
    θ-linear lift of ``f_k`` and ``G_k = Γ̃_k``, the chain
    ``sum_k φ_k G_k - U`` is a cycle in ``A ⊗ Λ``, where ``U`` solves
    ``d U = sum_k f_k G_k`` in the (exact) Koszul complex of ``S(V)``.
    """
    n = pres.n
    poly_ring = QuadraticPresentation(pres.generator_names)
    kS = build_koszul_complex(poly_ring, 3)
    d23 = kS.differentials[2, 3]
    cols = d23.col_dicts()
    reps = []
    for row in syzygies:
        Z, W = {}, {}
        for k, form in enumerate(row):
            q = pres.quadrics[k]
            for l, f in form.items():
                if not f:
                    continue
                for a in range(n):
                    for b in range(n):
                        g = q[a][b]
                        if not g:
                            continue
                        wl = (mono_mul(unit_exponent(n, l), unit_exponent(n, a)), (b,))
                        W[wl] = W.get(wl, 0) + f * g
                        if l != b:
                            sign = 1 if l < b else -1
                            zl = (unit_exponent(n, a), (min(l, b), max(l, b)))
                            Z[zl] = Z.get(zl, 0) + sign * f * g
        wvec = kS.vector(1, 3, {k: v for k, v in W.items() if v})
        coeffs = coordinates_in_span(cols, wvec)
        if coeffs is None:
            raise ValueError("syzygy is not a syzygy: lift does not exist")
        labels = kS.components[2, 3].labels
        for c, lab in zip(coeffs, labels):
            if c:
                Z[lab] = Z.get(lab, 0) - c
        reps.append({k: v for k, v in Z.items() if v})
    return reps


# ---------------------------------------------------------------------------
# the explicit G(2,5) resolution

# ∂Λ̃_j as rows over (Γ̃_1..Γ̃_5); entries are (sign, generator name)
G25_SECOND_SYZYGIES = (
    (None, (-1, "e12"), (1, "e13"), (-1, "e14"), (1, "e15")),
    ((1, "e12"), None, (-1, "e23"), (1, "e24"), (-1, "e25")),
    ((-1, "e13"), (1, "e23"), None, (-1, "e34"), (1, "e35")),
    ((1, "e14"), (-1, "e24"), (1, "e34"), None, (-1, "e45")),
    ((-1, "e15"), (1, "e25"), (-1, "e35"), (1, "e45"), None),
)


def g25_second_syzygies(pres: Optional[QuadraticPresentation] = None) -> list:
    pres = pres or g2n_presentation(5)
    pos = {g: i for i, g in enumerate(pres.generator_names)}
    return [
        [({} if e is None else {pos[e[1]]: Fraction(e[0])}) for e in row]
        for row in G25_SECOND_SYZYGIES
    ]


@dataclass
class CheckLine:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ResolutionReport:
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def verify_g25_resolution(max_weight: int = 7) -> ResolutionReport:
    """Check ``0 -> F3 -> F2 -> F1 -> F0`` over ``S(V)`` weight by weight.

    ``F0 = S``, ``F1 = S(-2)^5`` (Γ̃_k), ``F2 = S(-3)^5`` (Λ̃_j), ``F3 = S(-5)`` (c*),
    with ``∂Γ̃_k = Γ_k``, ``∂Λ̃_j = sum_k f_jk Γ̃_k`` and ``∂c* = sum_i Γ_i Λ̃_i``.
    """
    if max_weight < 5:
        raise ValueError("max_weight >= 5 (c* sits in weight 5)")
    pres = g2n_presentation(5)
    n = pres.n
    polys = pres.quadric_polynomials()
    syz = g25_second_syzygies(pres)
    checks = []
    for q in range(max_weight + 1):
        f0 = monomials(n, q)
        f1 = [(u, k) for u in (monomials(n, q - 2) if q >= 2 else ()) for k in range(5)]
        f2 = [(u, j) for u in (monomials(n, q - 3) if q >= 3 else ()) for j in range(5)]
        f3 = list(monomials(n, q - 5)) if q >= 5 else []
        i0 = monomial_index(n, q)
        i1 = {lab: i for i, lab in enumerate(f1)}
        i2 = {lab: i for i, lab in enumerate(f2)}
        e1 = [(i0[mono_mul(u, e)], c, v) for c, (u, k) in enumerate(f1) for e, v in polys[k].items()]
        e2 = [
            (i1[mono_mul(u, unit_exponent(n, l)), k], c, v)
            for c, (u, j) in enumerate(f2)
            for k, form in enumerate(syz[j])
            for l, v in form.items()
        ]
        e3 = [(i2[mono_mul(u, e), i], c, v) for c, u in enumerate(f3) for i in range(5) for e, v in polys[i].items()]
        d1 = SparseMatrix(len(f0), len(f1), tuple(e1))
        d2 = SparseMatrix(len(f1), len(f2), tuple(e2))
        d3 = SparseMatrix(len(f2), len(f3), tuple(e3))
        ok12 = (d1 @ d2).is_zero()
        ok23 = (d2 @ d3).is_zero()
        checks.append(CheckLine(f"d1∘d2 = 0 at weight {q}", ok12, "" if ok12 else "matrix d1 @ d2 nonzero"))
        checks.append(CheckLine(f"d2∘d3 = 0 at weight {q}", ok23, "" if ok23 else "matrix d2 @ d3 nonzero"))
        r1, r2, r3 = rank(d1), rank(d2), rank(d3)
        h0 = len(f0) - r1
        expect = graded_dim(pres, q)
        checks.append(CheckLine(f"H0 = A at weight {q}", h0 == expect, f"dim coker d1 = {h0}, dim A_{q} = {expect}"))
        for p, dim_f, r_out, r_in in ((1, len(f1), r1, r2), (2, len(f2), r2, r3), (3, len(f3), r3, 0)):
            h = dim_f - r_out - r_in
            checks.append(CheckLine(f"H{p} = 0 at weight {q}", h == 0, f"dim H{p} = {h}"))
    return ResolutionReport(checks)


def _signed_wedge_pair(a: int, b: int):
    """``e_a ∧ e_b`` as ``(sign, (min, max))``; None when ``a == b``."""
    if a == b:
        return None
    return (1, (a, b)) if a < b else (-1, (b, a))


def g25_tableau_bases(pres: Optional[QuadraticPresentation] = None) -> dict:
    """Equivariant (tableau) bases of the first and second syzygies of G(2,5).

    The column tableau omitting ``i`` is ``e_{[5]-i} ∈ Λ⁴V`` and maps to the
    Plücker quadric ``e_ab e_cd - e_ac e_bd + e_ad e_bc``.  The tableau with
    columns ``[5]`` and ``(i)`` is ``e_i ⊗ ω`` and maps to
    ``sum_k ι_k(ω) ∧ e_i ∧ e_k``, i.e. ``sum_k (-1)^(k-1) (e_i ∧ e_k) Γ̃^tab_k``.

    Returns ``gamma_signs`` (tableau Γ̃_k = sign * presentation Γ̃_k),
    ``syzygies`` (tableau Λ rows over the presentation's Γ̃) and
    ``lambda_signs`` (tableau Λ row = sign * explicit resolution row).
    """
    pres = pres or g2n_presentation(5)
    n = pres.n
    pos = {}
    for a in range(5):
        for b in range(a + 1, 5):
            pos[a, b] = pres.generator_names.index(f"e{a + 1}{b + 1}")
    polys = pres.quadric_polynomials()
    gamma_signs = []
    for i in range(5):
        a, b, c, d = (x for x in range(5) if x != i)
        tab = {}
        for sign, (u, v), (w, z) in ((1, (a, b), (c, d)), (-1, (a, c), (b, d)), (1, (a, d), (b, c))):
            e = mono_mul(unit_exponent(n, pos[u, v]), unit_exponent(n, pos[w, z]))
            tab[e] = tab.get(e, 0) + sign
        # the presentation's k-th quadric is the one on the same 4-subset
        matches = [k for k, poly in enumerate(polys) if set(poly) == set(tab)]
        if len(matches) != 1:
            raise ValueError(f"no presentation quadric matches tableau Γ̃_{i + 1}")
        k = matches[0]
        ratio = {Fraction(tab[e]) / polys[k][e] for e in tab}
        if len(ratio) != 1 or k != i:
            raise ValueError(f"tableau Γ̃_{i + 1} is not a signed copy of Γ_{i + 1}")
        gamma_signs.append(ratio.pop())
    syz = []
    for i in range(5):
        row = []
        for k in range(5):
            w = _signed_wedge_pair(i, k)
            if w is None:
                row.append({})
                continue
            sign, pair = w
            contraction = -1 if k % 2 else 1
            # Γ̃^tab_k = gamma_signs[k] * Γ̃_k
            row.append({pos[pair]: Fraction(sign * contraction) * gamma_signs[k]})
        syz.append(row)
    explicit = g25_second_syzygies(pres)
    lambda_signs = []
    for i in range(5):
        ratios = {
            syz[i][k][g] / explicit[i][k][g]
            for k in range(5)
            for g in syz[i][k]
        }
        if len(ratios) != 1 or any(set(syz[i][k]) != set(explicit[i][k]) for k in range(5)):
            raise ValueError(f"tableau Λ̃_{i + 1} is not a signed copy of the resolution row")
        lambda_signs.append(ratios.pop())
    return {"gamma_signs": gamma_signs, "syzygies": syz, "lambda_signs": lambda_signs}


def g25_koszul_classes(max_weight: int = 5, basis: str = "tableau"):
    """Koszul complex of G(2,5) with homology bases for Γ̃ (1,2), Λ̃ (2,3) and c* (3,5).

    ``basis="resolution"`` uses the explicit resolution rows for Λ̃;
    ``basis="tableau"`` uses the equivariant tableau basis.
    """
    pres = g2n_presentation(5)
    cx = build_koszul_complex(pres, max_weight)
    gammas = first_syzygy_reps(pres)
    if basis == "tableau":
        tb = g25_tableau_bases(pres)
        gammas = [{k: s * v for k, v in g.items()} for s, g in zip(tb["gamma_signs"], gammas)]
        syz = tb["syzygies"]
    elif basis == "resolution":
        syz = g25_second_syzygies(pres)
    else:
        raise ValueError(f"unknown basis {basis!r}")
    gam = homology_basis(cx, 1, 2, [cx.vector(1, 2, v) for v in gammas])
    lam = homology_basis(cx, 2, 3, [cx.vector(2, 3, v) for v in lift_linear_syzygies(pres, syz)])
    top = homology_basis(cx, 3, 5)
    if len(gam.representatives) != 5 or len(lam.representatives) != 5:
        raise ValueError("syzygy representatives are not independent in homology")
    return cx, gam, lam, top


def g25_frobenius_products(max_weight: int = 5, basis: str = "tableau") -> dict:
    """Products ``[Γ̃_i][Λ̃_j]`` in ``H_{3,5}``, scaled so ``[Γ̃_1][Λ̃_1] = [c*]``.

    Returns the normalised 5x5 table, the reversed products ``[Λ̃_j][Γ̃_i]``,
    the raw table, and ``[Γ̃_i][Γ̃_j]`` coordinates in ``H_{2,4}``.
    """
    cx, gam, lam, top = g25_koszul_classes(max_weight, basis)
    raw = homology_product(gam, lam, cx, top)
    scale = raw[0][0][0]
    if scale == 0:
        raise ValueError("[Γ̃_1][Λ̃_1] vanishes; cannot normalise c*")
    table = [[cell[0] / scale for cell in row] for row in raw]
    rev = homology_product(lam, gam, cx, top)
    rev_table = [[rev[j][i][0] / scale for j in range(5)] for i in range(5)]
    gg = homology_product(gam, gam, cx)
    return {
        "basis": basis,
        "normalised": table,
        "reversed": rev_table,
        "raw": [[cell[0] for cell in row] for row in raw],
        "gamma_gamma": gg,
        "dims": {"gamma": len(gam.representatives), "lambda": len(lam.representatives), "top": len(top.representatives)},
    }


def frobenius_pattern(table) -> bool:
    """``table[i][j] == (-1)^i δ_ij`` with 0-based indices, i.e. ``(-1)^(i+1) δ_ij`` 1-based."""
    return all(
        table[i][j] == ((-1) ** i if i == j else 0)
        for i in range(len(table))
        for j in range(len(table))
    )
