"""Truncated power series, Hilbert series and deviations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .algebra_core import QuadraticPresentation, dual_graded_dim, graded_dim, koszul_dual


class InconsistentSeriesError(ValueError):
    """A deviation came out non-integral."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``c_0 + c_1 t + ... + c_N t^N`` modulo ``t^(N+1)``."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int) -> "TruncatedSeries":
        c = list(coeffs[: order + 1]) + [0] * max(0, order + 1 - len(coeffs))
        return cls(tuple(c))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_poly([1], order)

    @classmethod
    def binomial_factor(cls, s: int, exponent: int, order: int) -> "TruncatedSeries":
        """``(1 - t^s)^exponent`` for any integer exponent."""
        base = [0] * (order + 1)
        base[0] = 1
        if s <= order:
            base[s] = -1
        return cls(tuple(base)) ** exponent

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def _check(self, other: "TruncatedSeries") -> int:
        if other.order != self.order:
            raise ValueError(f"order mismatch {self.order} != {other.order}")
        return self.order

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self, other)))

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(tuple(a * other for a in self))
        N = self._check(other)
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (N + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(N + 1 - i):
                    if b[j]:
                        out[i + j] += x * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        N = self.order
        a = self.coefficients
        inv = [Fraction(0)] * (N + 1)
        inv[0] = 1 / c0
        for k in range(1, N + 1):
            s = sum(a[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -s / c0
        return TruncatedSeries(tuple(inv))

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(tuple(a / other for a in self))
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def alternate(self) -> "TruncatedSeries":
        """Substitute ``t -> -t``."""
        return TruncatedSeries(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self)))

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_poly(list(self.coefficients), order)

    def as_ints(self) -> list:
        return [int(c) if c.denominator == 1 else c for c in self]

    def __str__(self) -> str:
        return self.polynomial_str() + f" + O(t^{self.order + 1})"

    def polynomial_str(self) -> str:
        """The coefficients without the ``O(t^(N+1))`` tail."""
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            cs = str(mag)
            if k == 0:
                body = cs
            elif k == 1:
                body = "t" if mag == 1 else f"{cs}*t"
            else:
                body = f"t^{k}" if mag == 1 else f"{cs}*t^{k}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class DeviationVector:
    """``epsilons[s-1]`` is the exponent of ``(1 - t^s)^((-1)^s eps_s)``.

    ``formal`` marks vectors extracted from an algebra not known to be
    Koszul, where the entries carry no Lie-algebra meaning.
    """

    epsilons: tuple
    formal: bool = False

    def __getitem__(self, s: int) -> int:
        """1-based access: ``dv[s]`` is ``eps_s``."""
        return self.epsilons[s - 1]

    def __len__(self):
        return len(self.epsilons)

    def to_json(self) -> dict:
        return {"epsilon": list(self.epsilons), "formal": self.formal}


def hilbert_series(pres: QuadraticPresentation, N: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(graded_dim(pres, r) for r in range(N + 1)))


def numerator(series: TruncatedSeries, n: int) -> Optional[list]:
    """``h(t) = H(t) (1-t)^n`` as a coefficient list, or None if not stabilized.

    Stabilized means the last ``ceil(N/3)`` coefficients vanish; trailing
    zeros are stripped from the returned polynomial.
    """
    N = series.order
    h = series * TruncatedSeries.binomial_factor(1, n, N)
    window = ceil(N / 3)
    if window and any(h[k] for k in range(N + 1 - window, N + 1)):
        return None
    coeffs = list(h.as_ints())
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def deviations(series: TruncatedSeries, formal: bool = False) -> DeviationVector:
    """Peel ``series = prod_s (1 - t^s)^((-1)^s eps_s)`` one factor at a time."""
    if series[0] != 1:
        raise ValueError("series must start with 1")
    N = series.order
    residual = series
    eps = []
    for s in range(1, N + 1):
        c = residual[s]
        if c.denominator != 1:
            raise InconsistentSeriesError(f"non-integral deviation at s={s}: {c}")
        e = int(c) * (-1) ** (s + 1)
        eps.append(e)
        if e:
            residual = residual / TruncatedSeries.binomial_factor(s, (-1) ** s * e, N)
    return DeviationVector(tuple(eps), formal)


def gauss_product(epsilons: Sequence[int], k: int, N: int) -> TruncatedSeries:
    """``prod_{s=k}^{N} (1 - t^s)^((-1)^s eps_s)`` truncated at ``t^N``."""
    if k < 1:
        raise ValueError("k >= 1")
    eps = list(epsilons.epsilons if isinstance(epsilons, DeviationVector) else epsilons)
    if len(eps) < N:
        raise ValueError(f"need eps_1..eps_{N}, got {len(eps)}")
    out = TruncatedSeries.one(N)
    for s in range(k, N + 1):
        e = eps[s - 1]
        if e:
            out = out * TruncatedSeries.binomial_factor(s, (-1) ** s * e, N)
    return out


def truncated_product_tail(epsilons, k: int, N: int) -> TruncatedSeries:
    """Hilbert series of ``L_{>=k}`` as the tail of the Gauss product."""
    return gauss_product(epsilons, k, N)


def pbw_series(epsilons, N: int) -> TruncatedSeries:
    """``prod_s (1 - (-t)^s)^((-1)^(s-1) eps_s)``: the series of ``U(L)``."""
    eps = list(epsilons.epsilons if isinstance(epsilons, DeviationVector) else epsilons)
    out = TruncatedSeries.one(N)
    for s in range(1, N + 1):
        e = eps[s - 1] if s - 1 < len(eps) else 0
        if not e:
            continue
        base = [0] * (N + 1)
        base[0] = 1
        base[s] = -((-1) ** s)
        out = out * TruncatedSeries(tuple(base)) ** ((-1) ** (s - 1) * e)
    return out


@dataclass(frozen=True)
class KoszulCheck:
    passed: bool
    first_failing_degree: Optional[int]
    product: TruncatedSeries
    hilbert: TruncatedSeries
    dual: TruncatedSeries


def series_product_check(hilbert: TruncatedSeries, dual: TruncatedSeries) -> KoszulCheck:
    prod = hilbert * dual.alternate()
    target = TruncatedSeries.one(prod.order)
    bad = next((k for k in range(prod.order + 1) if prod[k] != target[k]), None)
    return KoszulCheck(bad is None, bad, prod, hilbert, dual)


def koszul_series_check(pres: QuadraticPresentation, N: int) -> KoszulCheck:
    """Test ``H_A(t) H_{A!}(-t) = 1 mod t^(N+1)``; both factors from rank computations.

    A failure certifies that ``A`` is not Koszul; a pass is only necessary evidence.
    """
    dual = koszul_dual(pres)
    h = hilbert_series(pres, N)
    hd = TruncatedSeries(tuple(dual_graded_dim(dual, r) for r in range(N + 1)))
    return series_product_check(h, hd)


def lie_dimensions(pres: QuadraticPresentation, N: int) -> DeviationVector:
    """Deviations of ``A``; labelled formal unless the Koszul series check passes."""
    check = koszul_series_check(pres, N)
    return deviations(check.hilbert, formal=not check.passed)
