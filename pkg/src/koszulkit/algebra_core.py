"""Quadratic commutative algebras ``A = S(V)/I`` and their Koszul duals.

Monomials are exponent tuples.  Every degree-``d`` monomial list is kept in
descending graded reverse lexicographic order (first declared generator is
largest), so "leading term" means "smallest index".
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb
from pathlib import Path
from typing import Optional

from .exact_linear import EchelonSpan, SparseMatrix, _primitive, kernel_basis, rank


class QpaSyntaxError(ValueError):
    """Malformed ``.qpa`` input; carries 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class DependentQuadricWarning(UserWarning):
    pass


Matrix = tuple  # tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class QuadraticPresentation:
    """Generators of weight 1 and symmetric quadric coefficient matrices.

    ``quadrics[k][i][j]`` is the symmetric coefficient of ``a_i a_j`` in the
    k-th relation, so the relation reads ``sum_ij quadrics[k][i][j] a_i a_j``.
    """

    generator_names: tuple
    quadrics: tuple = ()
    relation_names: tuple = ()

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator name")
        n = len(names)
        quads = tuple(tuple(tuple(Fraction(x) for x in row) for row in q) for q in self.quadrics)
        for q in quads:
            if len(q) != n or any(len(row) != n for row in q):
                raise ValueError("quadric matrix must be n x n")
            if any(q[i][j] != q[j][i] for i in range(n) for j in range(i)):
                raise ValueError("quadric matrix must be symmetric")
        rel = tuple(self.relation_names) or tuple(f"G{k + 1}" for k in range(len(quads)))
        if len(rel) != len(quads):
            raise ValueError("one relation name per quadric")
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "quadrics", quads)
        object.__setattr__(self, "relation_names", rel)
        if quads and _quadric_rank(n, quads) != len(quads):
            raise ValueError("quadrics are linearly dependent")

    @property
    def n(self) -> int:
        return len(self.generator_names)

    @property
    def m(self) -> int:
        return len(self.quadrics)

    def quadric_polynomials(self) -> list:
        """Each quadric as ``{exponent tuple: coefficient}``."""
        return [_matrix_to_poly(self.n, q) for q in self.quadrics]

    @classmethod
    def from_polynomials(cls, names, polys, relation_names=(), prune: bool = True):
        """Build from ``{exponent: coeff}`` quadrics, dropping dependent ones if ``prune``."""
        n = len(names)
        mats = []
        for poly in polys:
            mat = [[Fraction(0)] * n for _ in range(n)]
            for exp, c in poly.items():
                if sum(exp) != 2:
                    raise ValueError("non-quadratic term")
                idx = [i for i, e in enumerate(exp) for _ in range(e)]
                i, j = idx
                if i == j:
                    mat[i][i] += Fraction(c)
                else:
                    mat[i][j] += Fraction(c) / 2
                    mat[j][i] += Fraction(c) / 2
            mats.append(tuple(tuple(r) for r in mat))
        rel = list(relation_names) or [f"G{k + 1}" for k in range(len(mats))]
        if prune:
            keep = _independent_subset(n, mats)
            for k in range(len(mats)):
                if k not in keep:
                    warnings.warn(
                        f"relation {rel[k]} is a linear combination of earlier relations; dropped",
                        DependentQuadricWarning,
                        stacklevel=2,
                    )
            mats = [mats[k] for k in keep]
            rel = [rel[k] for k in keep]
        return cls(tuple(names), tuple(mats), tuple(rel))


def _matrix_to_poly(n: int, q) -> dict:
    poly = {}
    for i in range(n):
        for j in range(i, n):
            c = q[i][j] if i == j else 2 * q[i][j]
            if c:
                exp = [0] * n
                exp[i] += 1
                exp[j] += 1
                poly[tuple(exp)] = c
    return poly


def _sym_square_vector(n: int, q) -> dict:
    """Coordinates of a quadric in the upper-triangular basis of S^2(V)."""
    out = {}
    k = 0
    for i in range(n):
        for j in range(i, n):
            c = q[i][j] if i == j else 2 * q[i][j]
            if c:
                out[k] = c
            k += 1
    return out


def _quadric_rank(n: int, quads) -> int:
    return rank(SparseMatrix.from_columns(n * (n + 1) // 2, [_sym_square_vector(n, q) for q in quads]))


def _independent_subset(n: int, quads) -> list:
    span = EchelonSpan()
    return [k for k, q in enumerate(quads) if span.add(_sym_square_vector(n, q))]


# ---------------------------------------------------------------------------
# monomials


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """Degree-``d`` monomials in ``n`` variables, largest first (grevlex)."""
    out = []
    for idx in combinations_with_replacement(range(n), d):
        exp = [0] * n
        for i in idx:
            exp[i] += 1
        out.append(tuple(exp))
    out.sort(key=lambda e: e[::-1])
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, d: int) -> dict:
    return {m: i for i, m in enumerate(monomials(n, d))}


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def unit_exponent(n: int, i: int) -> tuple:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def format_monomial(names, exp) -> str:
    parts = []
    for name, e in zip(names, exp):
        parts.extend([name] * e)
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class GradedBasis:
    """An ordered basis of one graded piece; ``labels`` are distinct."""

    weight: int
    labels: tuple

    def __len__(self):
        return len(self.labels)

    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}


# ---------------------------------------------------------------------------
# the quotient A = S(V)/I, degree by degree


class GradedQuotient:
    """Degree-wise linear algebra model of ``S(V)/I``.

    For each degree the relation space ``I_d`` is echelonised with pivots at
    leading monomials; the non-leading monomials form the basis of ``A_d``.
    """

    def __init__(self, pres: QuadraticPresentation):
        self.pres = pres
        self.n = pres.n
        self._polys = pres.quadric_polynomials()
        self._spans = {}
        self._reduced = {}
        self._bases = {}

    def _span(self, d: int) -> EchelonSpan:
        span = self._spans.get(d)
        if span is None:
            span = EchelonSpan()
            if d >= 2 and self._polys:
                idx = monomial_index(self.n, d)
                for u in monomials(self.n, d - 2):
                    for poly in self._polys:
                        row = {idx[mono_mul(u, e)]: c for e, c in poly.items()}
                        span.add_integer_row(_primitive(row))
            self._spans[d] = span
        return span

    def relation_rank(self, d: int) -> int:
        return len(self._span(d))

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if self.n == 0:
            return 1 if d == 0 else 0
        return comb(self.n + d - 1, d) - self.relation_rank(d)

    def basis(self, d: int) -> GradedBasis:
        """Standard monomials of degree ``d`` in descending grevlex order."""
        b = self._bases.get(d)
        if b is None:
            if d < 0:
                b = GradedBasis(d, ())
            else:
                piv = self._span(d).pivots
                mons = monomials(self.n, d)
                b = GradedBasis(d, tuple(m for i, m in enumerate(mons) if i not in piv))
            self._bases[d] = b
        return b

    def _rref(self, d: int) -> dict:
        red = self._reduced.get(d)
        if red is None:
            red = self._span(d).reduced()
            self._reduced[d] = red
        return red

    def normal_form(self, mono: tuple) -> dict:
        """Express a monomial in the standard monomial basis: ``{mono: coeff}``."""
        d = sum(mono)
        if d < 2 or not self._polys:
            return {mono: Fraction(1)}
        idx = monomial_index(self.n, d)[mono]
        red = self._rref(d)
        row = red.get(idx)
        if row is None:
            return {mono: Fraction(1)}
        mons = monomials(self.n, d)
        return {mons[c]: -v for c, v in row.items() if c != idx}

    def reduce(self, poly: dict) -> dict:
        """Normal form of a polynomial ``{exponent: coeff}``."""
        out = {}
        for mono, c in poly.items():
            for m2, c2 in self.normal_form(mono).items():
                out[m2] = out.get(m2, 0) + c * c2
        return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=32)
def quotient(pres: QuadraticPresentation) -> GradedQuotient:
    return GradedQuotient(pres)


def graded_dim(pres: QuadraticPresentation, d: int) -> int:
    """``dim A_d``."""
    return quotient(pres).dim(d)


# ---------------------------------------------------------------------------
# Koszul dual


@dataclass(frozen=True)
class DualPresentation:
    """``A^! = T(V*)/(R)`` with ``R`` the annihilator of the relations of ``A``.

    ``relation_space`` vectors live in ``V*⊗V*`` with coordinate ``i*n + j``
    for ``a_i* ⊗ a_j*``; each is stored as a sorted tuple of
    ``(coordinate, coefficient)`` pairs.
    """

    generator_names: tuple
    relation_space: tuple

    @property
    def n(self) -> int:
        return len(self.generator_names)

    def relation_vectors(self) -> list:
        return [dict(v) for v in self.relation_space]


def tensor_relations(pres: QuadraticPresentation) -> list:
    """Basis of ``Q = C ⊕ Ĩ`` inside ``V⊗V``: commutators then symmetric lifts."""
    n = pres.n
    rows = []
    for i, j in combinations(range(n), 2):
        rows.append({i * n + j: Fraction(1), j * n + i: Fraction(-1)})
    for q in pres.quadrics:
        rows.append({i * n + j: q[i][j] for i in range(n) for j in range(n) if q[i][j]})
    return rows


def annihilator(vectors, dim: int) -> list:
    """Basis of ``{x : <x, v> = 0 for all v}`` under the coordinate pairing."""
    mat = SparseMatrix(len(vectors), dim, tuple((r, c, x) for r, v in enumerate(vectors) for c, x in v.items()))
    return kernel_basis(mat, sparse=True)


def koszul_dual(pres: QuadraticPresentation) -> DualPresentation:
    n = pres.n
    rel = annihilator(tensor_relations(pres), n * n)
    return DualPresentation(
        tuple(g + "*" for g in pres.generator_names),
        tuple(tuple(sorted(v.items())) for v in rel),
    )


class DualQuotient:
    """Degree-wise model of ``T(V*)/(R)`` built without tensor powers.

    Degree ``d`` is the quotient of ``V* ⊗ A^!_{d-1}`` (coordinates
    ``j * dim A^!_{d-1} + b``) by the image of ``R ⊗ A^!_{d-2}``.
    """

    def __init__(self, dual: DualPresentation):
        self.dual = dual
        self.n = dual.n
        n = self.n
        self._rel = [
            [(c // n, c % n, Fraction(v)) for c, v in r] for r in dual.relation_space
        ]
        # degree -> (basis coordinate list, {coordinate: position}, reduced rows)
        self._deg = {0: ([0], {0: 0}, {})}

    def _level(self, d: int):
        lvl = self._deg.get(d)
        if lvl is not None:
            return lvl
        n = self.n
        prev_basis, _, _ = self._level(d - 1)
        dprev = len(prev_basis)
        span = EchelonSpan()
        if d >= 2 and self._rel:
            pp_basis = self._level(d - 2)[0]
            for b in range(len(pp_basis)):
                nfs = {}
                for rel in self._rel:
                    row = {}
                    for i, j, c in rel:
                        nf = nfs.get(j)
                        if nf is None:
                            nf = nfs[j] = self.left_multiply(d - 1, j, b)
                        base = i * dprev
                        for pos, x in nf.items():
                            key = base + pos
                            v = row.get(key, 0) + c * x
                            if v:
                                row[key] = v
                            else:
                                row.pop(key)
                    if row:
                        span.add_integer_row(_primitive(row))
        red = span.reduced() if d >= 2 else {}
        basis = [c for c in range(n * dprev) if c not in red]
        pos = {c: i for i, c in enumerate(basis)}
        lvl = (basis, pos, red)
        self._deg[d] = lvl
        return lvl

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        return len(self._level(d)[0])

    def left_multiply(self, d: int, j: int, b: int) -> dict:
        """``a_j* · e_b`` in degree ``d``, with ``e_b`` the b-th basis vector of degree ``d-1``.

        Returned as ``{basis position in degree d: coeff}``.
        """
        basis, pos, red = self._level(d)
        dprev = self.dim(d - 1)
        coord = j * dprev + b
        p = pos.get(coord)
        if p is not None:
            return {p: Fraction(1)}
        row = red[coord]
        return {pos[c]: -v for c, v in row.items() if c != coord}


@lru_cache(maxsize=32)
def dual_quotient(dual: DualPresentation) -> DualQuotient:
    return DualQuotient(dual)


def dual_graded_dim(dual: DualPresentation, d: int) -> int:
    """``dim A^!_d`` by the iterative quotient."""
    return dual_quotient(dual).dim(d)


# ---------------------------------------------------------------------------
# fixtures


def sv_presentation(n: int) -> QuadraticPresentation:
    """The polynomial ring ``S(V)`` on generators ``x1..xn``."""
    return QuadraticPresentation(tuple(f"x{i + 1}" for i in range(n)))


def g2n_presentation(N: int) -> QuadraticPresentation:
    """Plücker presentation of the coordinate ring of ``G(2, N)``.

    Generators ``e_ij`` (i<j) in lexicographic order; one three-term relation
    ``e_ij e_kl - e_ik e_jl + e_il e_jk`` per 4-subset, 4-subsets taken in
    reverse lexicographic order (for N=5 the k-th relation omits index k).
    """
    if N < 4:
        raise ValueError("G(2, N) needs N >= 4")
    pairs = list(combinations(range(1, N + 1), 2))
    names = tuple(f"e{i}{j}" if N < 10 else f"e{i}_{j}" for i, j in pairs)
    pos = {p: k for k, p in enumerate(pairs)}
    n = len(pairs)

    def sq(p, q):
        exp = [0] * n
        exp[pos[p]] += 1
        exp[pos[q]] += 1
        return tuple(exp)

    polys, rel = [], []
    for i, j, k, l in sorted(combinations(range(1, N + 1), 4), reverse=True):
        polys.append({sq((i, j), (k, l)): 1, sq((i, k), (j, l)): -1, sq((i, l), (j, k)): 1})
        rel.append(f"P{i}{j}{k}{l}")
    return QuadraticPresentation.from_polynomials(names, polys, rel, prune=False)


# ---------------------------------------------------------------------------
# .qpa DSL

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"\d+(?:/\d+)?")


def _parse_sum(text: str, lineno: int, offset: int, gens: dict) -> dict:
    """Parse ``[+-] term ([+-] term)*`` where term = ``[c *] g1 * g2``."""
    n = len(gens)
    poly = {}
    pos = 0
    L = len(text)
    first = True

    def skip(p):
        while p < L and text[p] in " \t":
            p += 1
        return p

    def err(msg, p):
        raise QpaSyntaxError(msg, lineno, offset + p + 1)

    pos = skip(pos)
    if pos >= L:
        err("empty relation", pos)
    while True:
        pos = skip(pos)
        sign = 1
        if pos < L and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            err("expected '+' or '-'", pos)
        first = False
        coeff = Fraction(sign)
        factors = []
        term_start = pos
        while True:
            pos = skip(pos)
            mnum = _NUMBER.match(text, pos)
            mid = _IDENT.match(text, pos)
            if mnum:
                if factors:
                    err("coefficient must precede generators", pos)
                frac = Fraction(mnum.group())
                if frac.denominator == 0:
                    err("zero denominator", pos)
                coeff *= frac
                pos = mnum.end()
            elif mid:
                name = mid.group()
                if name not in gens:
                    err(f"unknown generator '{name}'", pos)
                factors.append(gens[name])
                pos = mid.end()
            else:
                err("expected coefficient or generator", pos)
            pos = skip(pos)
            if pos < L and text[pos] == "*":
                pos += 1
                continue
            break
        if len(factors) != 2:
            err(f"non-quadratic term (degree {len(factors)})", term_start)
        exp = [0] * n
        for f in factors:
            exp[f] += 1
        exp = tuple(exp)
        poly[exp] = poly.get(exp, 0) + coeff
        if pos >= L:
            break
    return {e: c for e, c in poly.items() if c}


def parse_presentation(text: str) -> QuadraticPresentation:
    """Parse ``.qpa`` source.  Dependent relations are dropped with a warning."""
    gens: Optional[dict] = None
    names = []
    polys, rels = [], []
    seen_rel = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        if body.startswith("generators"):
            rest = body[len("generators"):]
            if not rest.lstrip().startswith(":"):
                raise QpaSyntaxError("expected ':' after 'generators'", lineno, indent + len("generators") + 1)
            if gens is not None:
                raise QpaSyntaxError("generators declared twice", lineno, indent + 1)
            colon = body.index(":")
            gens = {}
            for mt in re.finditer(r"\S+", body[colon + 1:]):
                tok = mt.group()
                col = indent + colon + 1 + mt.start() + 1
                if not _IDENT.fullmatch(tok):
                    raise QpaSyntaxError(f"invalid generator name '{tok}'", lineno, col)
                if tok in gens:
                    raise QpaSyntaxError(f"duplicate generator '{tok}'", lineno, col)
                gens[tok] = len(names)
                names.append(tok)
        elif body.startswith("relation") and (len(body) == 8 or body[8] in " \t"):
            if gens is None:
                raise QpaSyntaxError("relation before generators", lineno, indent + 1)
            m = re.match(r"relation\s+([A-Za-z_][A-Za-z0-9_]*)\s*=", body)
            if not m:
                raise QpaSyntaxError("expected 'relation <name> = <sum>'", lineno, indent + 9)
            rname = m.group(1)
            if rname in seen_rel:
                raise QpaSyntaxError(f"duplicate relation name '{rname}'", lineno, indent + m.start(1) + 1)
            seen_rel.add(rname)
            poly = _parse_sum(body[m.end():], lineno, indent + m.end(), gens)
            if not poly:
                warnings.warn(f"relation {rname} is zero; dropped", DependentQuadricWarning, stacklevel=2)
                continue
            polys.append(poly)
            rels.append(rname)
        else:
            raise QpaSyntaxError("expected 'generators:' or 'relation'", lineno, indent + 1)
    if gens is None:
        raise QpaSyntaxError("missing 'generators:' line", 1, 1)
    return QuadraticPresentation.from_polynomials(tuple(names), polys, rels, prune=True)


def load_presentation(path) -> QuadraticPresentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_presentation(pres: QuadraticPresentation) -> str:
    """Canonical ``.qpa`` text: terms in descending grevlex order, lowest-term coefficients."""
    lines = ["generators: " + " ".join(pres.generator_names)]
    order = monomial_index(pres.n, 2)
    for name, poly in zip(pres.relation_names, pres.quadric_polynomials()):
        parts = []
        for exp in sorted(poly, key=order.__getitem__):
            c = poly[exp]
            mono = format_monomial(pres.generator_names, exp)
            mag = abs(c)
            term = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        lines.append(f"relation {name} = " + " ".join(parts))
    return "\n".join(lines) + "\n"
