"""Exact sparse linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Internally rows are scaled to
primitive integer vectors and eliminated fraction-free, so no rational
arithmetic happens inside the elimination loops.

Vectors are passed around either densely (any sequence) or sparsely as
``dict[int, Fraction]``; every public function accepts both.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

SparseVector = dict  # dict[int, Fraction]
Vector = Union[Sequence, Mapping]


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse matrix with canonical (row-major sorted) entries.

    Construction sums duplicate positions and drops zeros, so two matrices
    built from the same entries in any order compare equal.
    """

    rows: int
    cols: int
    entries: tuple = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix shape must be non-negative")
        acc = {}
        for i, j, v in self.entries:
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            acc[i, j] = acc.get((i, j), 0) + v
        canon = tuple(
            (i, j, v if type(v) is Fraction else Fraction(v))
            for (i, j), v in sorted(acc.items())
            if v != 0
        )
        object.__setattr__(self, "entries", canon)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], cols: Optional[int] = None) -> "SparseMatrix":
        """``cols`` is needed only for matrices with no rows."""
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        elif rows and any(len(r) != cols for r in data):
            raise ValueError("row length differs from cols")
        entries = [(i, j, v) for i, row in enumerate(data) for j, v in enumerate(row) if v]
        return cls(rows, cols, tuple(entries))

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping]) -> "SparseMatrix":
        entries = [(i, j, v) for j, col in enumerate(columns) for i, v in col.items()]
        return cls(rows, len(columns), tuple(entries))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, ())

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple((i, i, 1) for i in range(n)))

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple((j, i, v) for i, j, v in self.entries))

    def row_dicts(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for i, j, v in self.entries:
            out[i][j] = v
        return out

    def col_dicts(self) -> list:
        out = [dict() for _ in range(self.cols)]
        for i, j, v in self.entries:
            out[j][i] = v
        return out

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries:
            out[i][j] = v
        return out

    def matvec(self, v: Vector) -> SparseVector:
        v = as_sparse(v)
        out = {}
        for i, j, a in self.entries:
            x = v.get(j)
            if x:
                out[i] = out.get(i, 0) + a * x
        return {i: x for i, x in out.items() if x}

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = defaultdict(list)
        for k, j, b in other.entries:
            by_row[k].append((j, b))
        acc = {}
        for i, k, a in self.entries:
            for j, b in by_row.get(k, ()):
                acc[i, j] = acc.get((i, j), 0) + a * b
        return SparseMatrix(self.rows, other.cols, tuple((i, j, v) for (i, j), v in acc.items()))

    def is_zero(self) -> bool:
        return not self.entries

    def scaled_integer_entries(self) -> list:
        """Entries times the lcm of all denominators, as Python ints."""
        L = 1
        for _, _, v in self.entries:
            L = lcm(L, v.denominator)
        return [(i, j, v.numerator * (L // v.denominator)) for i, j, v in self.entries]


def product_is_zero(a: SparseMatrix, b: SparseMatrix) -> bool:
    """``a @ b == 0`` using integer arithmetic after clearing denominators."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    by_col = defaultdict(list)
    for i, k, x in a.scaled_integer_entries():
        by_col[k].append((i, x))
    cols = defaultdict(lambda: defaultdict(int))
    for k, j, y in b.scaled_integer_entries():
        acc = cols[j]
        for i, x in by_col.get(k, ()):
            acc[i] += x * y
    return not any(v for acc in cols.values() for v in acc.values())


def as_sparse(v: Vector) -> SparseVector:
    if isinstance(v, Mapping):
        return {i: Fraction(x) for i, x in v.items() if x}
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def to_dense(v: Mapping, length: int) -> tuple:
    out = [Fraction(0)] * length
    for i, x in v.items():
        out[i] = Fraction(x)
    return tuple(out)


# ---------------------------------------------------------------------------
# integer row kernels


def _primitive(row: dict) -> dict:
    """Scale a rational row to a primitive integer row (content 1)."""
    den = lcm(*(Fraction(v).denominator for v in row.values())) if row else 1
    ints = {k: int(Fraction(v) * den) for k, v in row.items() if v}
    g = gcd(*ints.values()) if ints else 1
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    return ints


def _combine(target: dict, pivot_row: dict, col) -> dict:
    """Return the primitive integer row ``p*target - a*pivot_row`` with ``col`` cleared."""
    p = pivot_row[col]
    a = target[col]
    g = gcd(p, a)
    f1, f2 = p // g, a // g
    if f1 < 0:
        f1, f2 = -f1, -f2
    if f1 == 1:
        out = dict(target)
    else:
        out = {k: f1 * v for k, v in target.items()}
    for k, v in pivot_row.items():
        w = out.get(k, 0) - f2 * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    if out:
        g = gcd(*out.values())
        if g > 1:
            out = {k: v // g for k, v in out.items()}
    return out


def _components(rows: list) -> list:
    """Split integer rows into groups sharing no columns (union-find on columns)."""
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for row in rows:
        it = iter(row)
        first = next(it, None)
        if first is None:
            continue
        parent.setdefault(first, first)
        r0 = find(first)
        for c in it:
            parent.setdefault(c, c)
            rc = find(c)
            if rc != r0:
                parent[rc] = r0
    groups = defaultdict(list)
    for row in rows:
        if row:
            groups[find(next(iter(row)))].append(row)
    return [groups[k] for k in sorted(groups)]


def _markowitz_rank(rows: list) -> int:
    """Rank of integer rows by fraction-free elimination with Markowitz-style pivots.

    The pivot row is the sparsest remaining row (lowest index on ties); within
    it the pivot column minimises the column count (lowest column on ties).
    """
    live = {i: r for i, r in enumerate(rows) if r}
    colrows = defaultdict(set)
    for i, r in live.items():
        for c in r:
            colrows[c].add(i)
    heap = [(len(r), i) for i, r in live.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        ln, i = heapq.heappop(heap)
        r = live.get(i)
        if r is None or len(r) != ln:
            continue
        del live[i]
        for c in r:
            colrows[c].discard(i)
        col = min(r, key=lambda c: (len(colrows[c]), c))
        rank += 1
        for j in sorted(colrows[col]):
            old = live[j]
            new = _combine(old, r, col)
            for c in old:
                if c not in new:
                    colrows[c].discard(j)
            for c in new:
                if c not in old:
                    colrows[c].add(j)
            if new:
                live[j] = new
                heapq.heappush(heap, (len(new), j))
            else:
                del live[j]
    return rank


class EchelonSpan:
    """Incrementally maintained row-echelon basis of a subspace.

    Pivots are leading (smallest) column indices.  Rows are stored as primitive
    integer dicts; :meth:`reduced` produces the reduced echelon form with
    rational rows normalised to pivot 1.
    """

    def __init__(self, vectors: Iterable[Vector] = ()):
        self.pivots: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.pivots)

    def _reduce_int(self, row: dict) -> dict:
        pivots = self.pivots
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                break
            row = _combine(row, prow, lead)
        return row

    def add(self, v: Vector) -> bool:
        """Insert ``v``; returns True when it enlarged the span."""
        row = _primitive(v if isinstance(v, Mapping) else as_sparse(v))
        row = self._reduce_int(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def add_integer_row(self, row: dict) -> bool:
        row = self._reduce_int(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True

    def contains(self, v: Vector) -> bool:
        return not self._reduce_int(_primitive(v if isinstance(v, Mapping) else as_sparse(v)))

    def reduced(self) -> dict:
        """Reduced echelon form: ``{pivot: {col: Fraction}}`` with pivot entry 1."""
        pivots = self.pivots
        done = {}
        for pc in sorted(pivots, reverse=True):
            row = pivots[pc]
            for c in [c for c in row if c != pc and c in done]:
                if c in row:
                    row = _combine(row, done[c], c)
            done[pc] = row
        self.pivots = done
        return {
            pc: {c: Fraction(v, row[pc]) for c, v in row.items()}
            for pc, row in done.items()
        }


# ---------------------------------------------------------------------------
# public operations


def rank(m: SparseMatrix) -> int:
    """Exact rank over Q."""
    rows = [_primitive(r) for r in m.row_dicts() if r]
    return sum(_markowitz_rank(group) for group in _components(rows))


def rref(m: SparseMatrix) -> dict:
    """Reduced row echelon form as ``{pivot column: {col: Fraction}}``."""
    span = EchelonSpan()
    for r in m.row_dicts():
        if r:
            span.add_integer_row(_primitive(r))
    return span.reduced()


def kernel_basis(m: SparseMatrix, sparse: bool = False) -> list:
    """Basis of the right null space, one vector per free column.

    Each vector is scaled so its first nonzero entry is 1.
    """
    red = rref(m)
    by_col = defaultdict(list)
    for pc, row in red.items():
        for c, v in row.items():
            if c != pc:
                by_col[c].append((pc, v))
    basis = []
    for f in range(m.cols):
        if f in red:
            continue
        vec = {f: Fraction(1)}
        for pc, v in by_col.get(f, ()):
            vec[pc] = -v
        lead = vec[min(vec)]
        if lead != 1:
            vec = {k: x / lead for k, x in vec.items()}
        basis.append(vec if sparse else to_dense(vec, m.cols))
    return basis


def image_basis(m: SparseMatrix, sparse: bool = False) -> list:
    """Canonical basis of the column space (reduced echelon rows of the transpose)."""
    red = rref(m.transpose())
    out = []
    for pc in sorted(red):
        vec = red[pc]
        out.append(vec if sparse else to_dense(vec, m.rows))
    return out


def coordinates_in_span(vectors: Sequence[Vector], target: Vector) -> Optional[list]:
    """Coefficients ``c`` with ``sum(c[i] * vectors[i]) == target``, or None.

    When the vectors are dependent, free coefficients are set to zero.
    """
    vecs = [as_sparse(v) for v in vectors]
    lengths = {len(v) for v in vectors if not isinstance(v, Mapping)}
    if len(lengths) > 1:
        raise ValueError("vectors must have equal length")
    k = len(vecs)
    tgt = as_sparse(target)
    # rows of the augmented system [v_0 ... v_{k-1} | target]
    rows = defaultdict(dict)
    for j, v in enumerate(vecs):
        for i, x in v.items():
            rows[i][j] = x
    for i, x in tgt.items():
        rows[i][k] = x
    span = EchelonSpan()
    for i in sorted(rows):
        span.add_integer_row(_primitive(rows[i]))
    red = span.reduced()
    if k in red:
        return None
    coeffs = [Fraction(0)] * k
    for pc, row in red.items():
        coeffs[pc] = row.get(k, Fraction(0))
    return coeffs


def write_matrix_market(m: SparseMatrix, path: Union[str, Path], comment: str = "") -> None:
    """Dump ``m`` in MatrixMarket coordinate format with exact ``p/q`` values."""
    lines = ["%%MatrixMarket matrix coordinate rational general"]
    if comment:
        lines.extend("% " + c for c in comment.splitlines())
    lines.append(f"{m.rows} {m.cols} {m.nnz}")
    for i, j, v in m.entries:
        lines.append(f"{i + 1} {j + 1} {v.numerator}/{v.denominator}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_matrix_market(path: Union[str, Path]) -> SparseMatrix:
    lines = [
        ln for ln in Path(path).read_text(encoding="utf-8").splitlines()
        if ln and not ln.startswith("%")
    ]
    rows, cols, _ = map(int, lines[0].split())
    entries = []
    for ln in lines[1:]:
        i, j, v = ln.split()
        entries.append((int(i) - 1, int(j) - 1, Fraction(v)))
    return SparseMatrix(rows, cols, tuple(entries))
