"""Partitions, Frobenius notation, tableau counts and Littlewood-Richardson products."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Union


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must weakly decrease: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i] if i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def durfee(self) -> int:
        return sum(1 for i, p in enumerate(self.parts) if p > i)

    def cells(self) -> Iterator[tuple]:
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


@dataclass(frozen=True)
class FrobeniusShape:
    """Diagonal arms ``alphas`` and legs ``betas`` of a Young diagram."""

    alphas: tuple
    betas: tuple

    def __post_init__(self):
        a, b = tuple(map(int, self.alphas)), tuple(map(int, self.betas))
        if len(a) != len(b):
            raise ValueError(f"arm and leg lists differ in length: {a} | {b}")
        for seq in (a, b):
            if any(x < 0 for x in seq) or any(x <= y for x, y in zip(seq, seq[1:])):
                raise ValueError(f"arms and legs must strictly decrease and be >= 0: {a} | {b}")
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "betas", b)

    @property
    def rank(self) -> int:
        return len(self.alphas)

    def __str__(self):
        sep = "" if all(x < 10 for x in self.alphas + self.betas) else ","
        return "(" + sep.join(map(str, self.alphas)) + "|" + sep.join(map(str, self.betas)) + ")"


def frobenius_to_partition(f: FrobeniusShape) -> Partition:
    """``λ_i = α_i + i`` and ``λ'_i = β_i + i`` for ``i <= rank``."""
    p = f.rank
    top = [a + i + 1 for i, a in enumerate(f.alphas)]
    cols = [b + i + 1 for i, b in enumerate(f.betas)]
    rows = list(top)
    depth = max(cols, default=0)
    for r in range(p, depth):
        rows.append(sum(1 for c in cols if c > r))
    lam = Partition(tuple(rows))
    if partition_to_frobenius(lam) != f:
        raise ValueError(f"inconsistent Frobenius data {f}")
    return lam


def partition_to_frobenius(lam: Partition) -> FrobeniusShape:
    d = lam.durfee()
    t = lam.transpose()
    return FrobeniusShape(tuple(lam[i] - i - 1 for i in range(d)), tuple(t[i] - i - 1 for i in range(d)))


def parse_shape(text: str) -> Partition:
    """Read ``[4,1,1]`` (partition) or ``(1|4)`` / ``(5,2,0|4,2,1)`` (Frobenius)."""
    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"\[([0-9,]*)\]", s)
    if m:
        body = m.group(1)
        return Partition(tuple(int(x) for x in body.split(",") if x != "")) if body else Partition()
    m = re.fullmatch(r"\(([0-9,]*)\|([0-9,]*)\)", s)
    if m:
        def seq(body):
            if "," in body:
                return tuple(int(x) for x in body.split(","))
            return tuple(int(ch) for ch in body)

        return frobenius_to_partition(FrobeniusShape(seq(m.group(1)), seq(m.group(2))))
    raise ValueError(f"cannot read shape {text!r}: use [a,b,...] or (arms|legs)")


def as_partition(x: Union[Partition, FrobeniusShape, tuple, list, str]) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, FrobeniusShape):
        return frobenius_to_partition(x)
    if isinstance(x, str):
        return parse_shape(x)
    return Partition(tuple(x))


# ---------------------------------------------------------------------------
# tableau counting


def horizontal_strips(alpha: tuple, r: int) -> Iterator[tuple]:
    """Shapes ``β ⊇ α`` with ``β/α`` a horizontal strip of ``r`` boxes."""
    rows = list(alpha) + [0]

    def go(i, left, acc):
        if i == len(rows):
            if left == 0:
                yield tuple(x for x in acc if x)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from go(i + 1, left - add, acc + [rows[i] + add])

    yield from go(0, r, [])


def removable_strips(lam: tuple) -> Iterator[tuple]:
    """Shapes ``μ ⊆ λ`` with ``λ/μ`` a horizontal strip (any size)."""
    rows = list(lam)

    def go(i, acc):
        if i == len(rows):
            yield tuple(x for x in acc if x)
            return
        low = rows[i + 1] if i + 1 < len(rows) else 0
        for v in range(rows[i], low - 1, -1):
            yield from go(i + 1, acc + [v])

    yield from go(0, [])


@lru_cache(maxsize=None)
def _ssyt(lam: tuple, N: int) -> int:
    if not lam:
        return 1
    if N == 0 or len(lam) > N:
        return 0
    # the cells holding the largest entry N form a horizontal strip
    return sum(_ssyt(mu, N - 1) for mu in removable_strips(lam))


def ssyt_count(lam, N: int) -> int:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..N``, by strip enumeration."""
    lam = as_partition(lam)
    if len(lam) > N:
        return 0
    return _ssyt(lam.parts, N)


def hook_content(lam, N: int) -> int:
    """``prod (N + content) / hook`` over the cells of ``lam``."""
    lam = as_partition(lam)
    t = lam.transpose()
    out = Fraction(1)
    for r, c in lam.cells():
        hook = lam[r] - c + t[c] - r - 1
        out *= Fraction(N + c - r, hook)
    return int(out)


def enumerate_ssyt(lam, N: int) -> Iterator[tuple]:
    """All tableaux as tuples of rows (small shapes only)."""
    lam = as_partition(lam)
    cells = list(lam.cells())
    grid = {}

    def go(k):
        if k == len(cells):
            yield tuple(tuple(grid[r, c] for c in range(lam[r])) for r in range(len(lam)))
            return
        r, c = cells[k]
        lo = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        for v in range(lo, N + 1):
            grid[r, c] = v
            yield from go(k + 1)
        grid.pop((r, c), None)

    yield from go(0)


# ---------------------------------------------------------------------------
# Littlewood-Richardson


@dataclass(frozen=True)
class SchurExpansion:
    terms: tuple = ()

    @classmethod
    def from_dict(cls, d: dict) -> "SchurExpansion":
        items = [(as_partition(k), int(v)) for k, v in d.items() if v]
        return cls(tuple(sorted(items, key=lambda kv: _display_key(kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __getitem__(self, lam) -> int:
        return self.as_dict().get(as_partition(lam), 0)

    def dimension(self, N: int) -> int:
        return sum(c * ssyt_count(lam, N) for lam, c in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{c}" if c != 1 else "") + f"s_{partition_to_frobenius(lam)}" for lam, c in self.terms
        )

    def to_json(self) -> list:
        return [
            {"partition": list(lam.parts), "frobenius": str(partition_to_frobenius(lam)), "multiplicity": c}
            for lam, c in self.terms
        ]


def _display_key(lam: Partition):
    f = partition_to_frobenius(lam)
    return (f.rank, f.alphas, tuple(-b for b in f.betas))


def _lattice(word) -> bool:
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def lr_coefficients(lam, mu, max_rows: Optional[int] = None) -> dict:
    """``{ν: c^ν_{λμ}}`` by enumerating LR fillings of ``ν/λ`` with content ``μ``.

    ``max_rows`` drops every ``ν`` with more rows (the ``GL_N`` truncation).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    out = {}

    def go(k, shape, filling):
        if k == len(mu):
            rows = {}
            for (r, c), v in filling.items():
                rows.setdefault(r, []).append((c, v))
            word = [v for r in sorted(rows) for _, v in sorted(rows[r], reverse=True)]
            if _lattice(word):
                nu = Partition(shape)
                out[nu] = out.get(nu, 0) + 1
            return
        for new in horizontal_strips(shape, mu[k]):
            if max_rows is not None and len(new) > max_rows:
                continue
            added = dict(filling)
            for r, length in enumerate(new):
                old = shape[r] if r < len(shape) else 0
                for c in range(old, length):
                    added[r, c] = k + 1
            # prune on the partial word: letters 1..k+1 already final
            if _partial_ok(added):
                go(k + 1, new, added)

    go(0, lam.parts, {})
    return out


def _partial_ok(filling) -> bool:
    rows = {}
    for (r, c), v in filling.items():
        rows.setdefault(r, []).append((c, v))
    word = [v for r in sorted(rows) for _, v in sorted(rows[r], reverse=True)]
    return _lattice(word)


def lr_product(lam, mu, max_rows: Optional[int] = None) -> SchurExpansion:
    return SchurExpansion.from_dict(lr_coefficients(lam, mu, max_rows))


def schur_product(a: SchurExpansion, b: SchurExpansion, max_rows: Optional[int] = None) -> SchurExpansion:
    out = {}
    for la, ca in a.terms:
        for lb, cb in b.terms:
            for nu, c in lr_coefficients(la, lb, max_rows).items():
                out[nu] = out.get(nu, 0) + ca * cb * c
    return SchurExpansion.from_dict(out)


def schur_power(lam, k: int, max_rows: Optional[int] = None) -> SchurExpansion:
    """``s_λ^k``; with ``max_rows=N`` only ``GL_N`` shapes are kept."""
    if k < 1:
        raise ValueError("k >= 1")
    lam = as_partition(lam)
    if max_rows is not None and len(lam) > max_rows:
        return SchurExpansion()
    base = SchurExpansion.from_dict({lam: 1})
    out = base
    for _ in range(k - 1):
        out = schur_product(out, base, max_rows)
    return out


# ---------------------------------------------------------------------------
# A_{p,q}(N)


def a_pq_shapes(N: int, p: int, q: int) -> list:
    """Frobenius shapes ``(i_1-2,...,i_p-2 | i_1+1,...,i_p+1)`` with ``N-2 >= i_1 > ... > i_p >= 2`` summing to ``q``."""
    if N < 4:
        raise ValueError("N >= 4")
    out = []
    for seq in combinations(range(N - 2, 1, -1), p):
        if sum(seq) == q:
            out.append(FrobeniusShape(tuple(i - 2 for i in seq), tuple(i + 1 for i in seq)))
    return out


def a_pq_dimension(N: int, p: int, q: int) -> int:
    return sum(ssyt_count(frobenius_to_partition(f), N) for f in a_pq_shapes(N, p, q))


def a_pq_table(N: int) -> dict:
    """All nonzero ``dim A_{p,q}(N)``."""
    out = {}
    top = N - 3
    for p in range(top + 1):
        for seq in combinations(range(N - 2, 1, -1), p):
            q = sum(seq)
            if (p, q) not in out:
                out[p, q] = a_pq_dimension(N, p, q)
    return {k: v for k, v in sorted(out.items()) if v}


def predicted_syzygy_betti(N: int) -> dict:
    """Betti table ``R_{q-p, q} = A_{p,q}(N)`` (order = degree minus Frobenius rank)."""
    return {(q - p, q): v for (p, q), v in a_pq_table(N).items()}
