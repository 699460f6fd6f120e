"""Truncated formal power series over GF(2).

Only parities ever enter an adjacency matrix, so every series is reduced
mod 2 as soon as it is built. A series of order ``N`` stores the
coefficients of ``z^0 .. z^(N-1)``.

Text form used by the CLI and by cache keys:

* ``"1101"``      polynomial, character k is the coefficient of z^k
* ``"11/1001"``   rational ``(1+z)/(1+z^3)``
* ``"catalan"``   the Catalan generating function C with C = 1 + z C^2
* ``"catalan_f"`` the series z C
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from .errors import FNotProper, OrderMismatch, RationalDenominatorNotUnit, SeriesParseError


def _bits_to_int(bits) -> int:
    value = 0
    for i, b in enumerate(bits):
        if b & 1:
            value |= 1 << i
    return value


@dataclass(frozen=True)
class Gf2Series:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("series order must be positive")
        if any(c not in (0, 1) for c in self.coeffs):
            raise ValueError("GF(2) coefficients must be 0 or 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_int(cls, value: int, order: int) -> "Gf2Series":
        return cls(tuple((value >> i) & 1 for i in range(order)))

    @classmethod
    def from_bits(cls, bits, order: int | None = None) -> "Gf2Series":
        bits = [int(b) & 1 for b in bits]
        if order is None:
            order = len(bits)
        bits = (bits + [0] * order)[:order]
        return cls(tuple(bits))

    @classmethod
    def zero(cls, order: int) -> "Gf2Series":
        return cls((0,) * order)

    @classmethod
    def one(cls, order: int) -> "Gf2Series":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int) -> "Gf2Series":
        return cls.from_int(1 << k if k < order else 0, order)

    def to_int(self) -> int:
        return _bits_to_int(self.coeffs)

    def truncate(self, order: int) -> "Gf2Series":
        if order > self.order:
            raise OrderMismatch(f"cannot extend a series of order {self.order} to {order}")
        return Gf2Series(self.coeffs[:order])

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __add__(self, other: "Gf2Series") -> "Gf2Series":
        return series_add(self, other)

    def __mul__(self, other: "Gf2Series") -> "Gf2Series":
        return series_mul(self, other)

    def __str__(self) -> str:
        return "".join(map(str, self.coeffs))


def _check_orders(a: Gf2Series, b: Gf2Series) -> int:
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} != {b.order}")
    return a.order


def _clmul(a: int, b: int, order: int) -> int:
    """Carry-less product of two bit-packed polynomials, truncated."""
    mask = (1 << order) - 1
    a &= mask
    out = 0
    while b and a:
        if b & 1:
            out ^= a
        b >>= 1
        a = (a << 1) & mask
    return out & mask


def series_add(a: Gf2Series, b: Gf2Series) -> Gf2Series:
    order = _check_orders(a, b)
    return Gf2Series.from_int(a.to_int() ^ b.to_int(), order)


def series_mul(a: Gf2Series, b: Gf2Series) -> Gf2Series:
    order = _check_orders(a, b)
    return Gf2Series.from_int(_clmul(a.to_int(), b.to_int(), order), order)


def series_pow(a: Gf2Series, j: int) -> Gf2Series:
    result = Gf2Series.one(a.order)
    base = a
    while j:
        if j & 1:
            result = series_mul(result, base)
        base = series_mul(base, base)
        j >>= 1
    return result


def column_series(g: Gf2Series, f: Gf2Series, j: int) -> Gf2Series:
    """Column ``j`` of the binary Riordan matrix B(g, f), i.e. g * f^j."""
    if j < 0:
        raise ValueError("column index must be nonnegative")
    if f.order and f.coeffs[0]:
        raise FNotProper("f must have zero constant term")
    if f.order != g.order:
        f = Gf2Series.from_bits(f.coeffs, g.order) if f.order < g.order else f.truncate(g.order)
    return series_mul(g, series_pow(f, j))


# --- specs -----------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    bits: Tuple[int, ...]


@dataclass(frozen=True)
class Rational:
    numerator: Tuple[int, ...]
    denominator: Tuple[int, ...]


@dataclass(frozen=True)
class CatalanG:
    pass


@dataclass(frozen=True)
class CatalanF:
    pass


SeriesSpec = Union[Polynomial, Rational, CatalanG, CatalanF]


def _rational_expand(num: Tuple[int, ...], den: Tuple[int, ...], order: int) -> Gf2Series:
    if not den or not den[0] & 1:
        raise RationalDenominatorNotUnit("denominator must have constant term 1")
    num = list(num) + [0] * max(0, order - len(num))
    c = [0] * order
    for i in range(order):
        acc = num[i] & 1
        for j in range(1, min(i, len(den) - 1) + 1):
            acc ^= den[j] & c[i - j]
        c[i] = acc
    return Gf2Series(tuple(c))


def _catalan(order: int) -> Gf2Series:
    # Fixed point of S -> 1 + z S^2; each round fixes at least one more coefficient.
    one = Gf2Series.one(order)
    z = Gf2Series.monomial(1, order)
    s = one
    while True:
        nxt = one + z * (s * s)
        if nxt == s:
            return s
        s = nxt


def expand(spec: SeriesSpec, order: int) -> Gf2Series:
    if order < 1:
        raise ValueError("order must be at least 1")
    if isinstance(spec, Polynomial):
        return Gf2Series.from_bits(spec.bits, order)
    if isinstance(spec, Rational):
        return _rational_expand(spec.numerator, spec.denominator, order)
    if isinstance(spec, CatalanG):
        return _catalan(order)
    if isinstance(spec, CatalanF):
        return series_mul(Gf2Series.monomial(1, order), _catalan(order))
    raise TypeError(f"unknown series spec {spec!r}")


def _parse_bits(text: str) -> Tuple[int, ...]:
    if not text or any(ch not in "01" for ch in text):
        raise SeriesParseError(f"expected a non-empty 0/1 string, got {text!r}")
    return tuple(int(ch) for ch in text)


def parse_series(text: str) -> SeriesSpec:
    text = text.strip()
    if text == "catalan":
        return CatalanG()
    if text == "catalan_f":
        return CatalanF()
    if "/" in text:
        num, _, den = text.partition("/")
        spec = Rational(_parse_bits(num), _parse_bits(den))
        if not spec.denominator[0]:
            raise RationalDenominatorNotUnit(f"denominator of {text!r} has zero constant term")
        return spec
    return Polynomial(_parse_bits(text))


def format_series(spec: SeriesSpec) -> str:
    if isinstance(spec, CatalanG):
        return "catalan"
    if isinstance(spec, CatalanF):
        return "catalan_f"
    if isinstance(spec, Rational):
        return "".join(map(str, spec.numerator)) + "/" + "".join(map(str, spec.denominator))
    return "".join(map(str, spec.bits))
