"""Exact arithmetic in cyclotomic fields, plus a floating-point twin.

A :class:`Cyclo` is an element of Q(zeta_L) written as a rational
combination of powers of ``zeta_L = exp(2*pi*i/L)``.  Logically it is a
residue modulo ``x**L - 1`` (the :attr:`Cyclo.coeffs` vector has length
``L``), but every value is kept in its canonical representative: the
remainder modulo the cyclotomic polynomial ``Phi_L``, of degree below
``phi(L)``.  Equality is then structural and :func:`is_zero` is a
divisibility test that the canonical form answers directly.

Internally a value is a sparse ``{exponent: int}`` numerator with one
positive common denominator, reduced so the gcd of all of them is 1.
Rational coefficients are exposed as :class:`fractions.Fraction`.

:class:`ComplexF` implements the same scalar interface (``+``, ``*``,
``conj``, ``is_zero``, ``dot``) in double precision, with an absolute
zero tolerance.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

from .errors import InvalidArgument

__all__ = [
    "FLOAT_TOL",
    "Cyclo",
    "ComplexF",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "lift_order",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_neg",
    "cyclo_conj",
    "cyclo_scale",
    "is_zero",
    "to_complex",
    "common_order",
    "unit_phase",
]

FLOAT_TOL = 1e-10


# --------------------------------------------------------------------------- #
# integer polynomials (ascending coefficient lists)
# --------------------------------------------------------------------------- #


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    """Quotient of ``num / den`` for a monic ``den`` that divides ``num``."""
    num = list(num)
    dn = len(den) - 1
    if den[dn] != 1:
        raise InvalidArgument("divisor must be monic")
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dn]
        quot[i] = c
        if c:
            for j in range(dn + 1):
                num[i + j] -= c * den[j]
    if any(num[:dn]):
        raise InvalidArgument("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Integer coefficients of ``Phi_L``, constant term first.

    Obtained from ``x**L - 1`` by dividing out ``Phi_e`` for every proper
    divisor ``e`` of ``L``.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if not isinstance(L, int) or L < 1:
        raise InvalidArgument(f"order must be a positive integer, got {L!r}")
    poly = [-1] + [0] * (L - 1) + [1]
    for e in _divisors(L)[:-1]:
        poly = _poly_exact_div(poly, cyclotomic_polynomial(e))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(L: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Row ``t`` is ``x**t mod Phi_L`` as sparse ``(exponent, coeff)`` pairs."""
    phi = cyclotomic_polynomial(L)
    deg = len(phi) - 1
    rows: list[tuple[tuple[int, int], ...]] = []
    cur = [0] * deg
    for t in range(L):
        if t < deg:
            rows.append(((t, 1),))
            continue
        if t == deg:
            cur = [-c for c in phi[:deg]]
        else:
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * phi[i]
        rows.append(tuple((i, c) for i, c in enumerate(cur) if c))
    return tuple(rows)


# --------------------------------------------------------------------------- #
# exact scalars
# --------------------------------------------------------------------------- #


def _check_order(order) -> int:
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise InvalidArgument(f"order must be a positive integer, got {order!r}")
    return order


def _reduce(order: int, acc: dict[int, int], den: int) -> "Cyclo":
    """Canonical Cyclo from a numerator keyed by exponents in ``[0, order)``."""
    table = _reduction_table(order)
    deg = euler_phi(order)
    out: dict[int, int] = defaultdict(int)
    for e, c in acc.items():
        if not c:
            continue
        if e < deg:
            out[e] += c
        else:
            for f, r in table[e]:
                out[f] += c * r
    num = {e: c for e, c in out.items() if c}
    return Cyclo._make(order, num, den)


class Cyclo:
    """Element of Q(zeta_L) in canonical form.

    ``Cyclo(L, coeffs)`` accepts any residue vector (length ``L``, entries
    int/Fraction/str) and reduces it modulo ``Phi_L``.  Arithmetic with
    ``int`` and ``Fraction`` operands is supported; two Cyclo operands must
    share an order (see :func:`lift_order`).
    """

    __slots__ = ("_order", "_num", "_den")
    __hash__ = None  # values of different orders may compare equal

    def __init__(self, order: int, coeffs: Iterable = ()):
        order = _check_order(order)
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) > order:
            raise InvalidArgument(f"{len(fracs)} coefficients for order {order}")
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        acc = {t: int(f * den) for t, f in enumerate(fracs) if f}
        src = _reduce(order, acc, den)
        self._order, self._num, self._den = src._order, src._num, src._den

    @classmethod
    def _make(cls, order: int, num: dict[int, int], den: int) -> "Cyclo":
        g = den
        for c in num.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        if g != 1:
            num = {e: c // g for e, c in num.items()}
            den //= g
        if not num:
            den = 1
        obj = object.__new__(cls)
        obj._order, obj._num, obj._den = order, num, den
        return obj

    # -- constructors --------------------------------------------------- #

    @classmethod
    def rational(cls, value, order: int = 1) -> "Cyclo":
        f = Fraction(value)
        return cls._make(_check_order(order), {0: f.numerator} if f else {}, f.denominator)

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclo":
        return cls._make(_check_order(order), {}, 1)

    @classmethod
    def one(cls, order: int = 1) -> "Cyclo":
        return cls.rational(1, order)

    # -- views ---------------------------------------------------------- #

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Canonical residue vector: entry ``t`` is the coefficient of zeta**t."""
        out = [Fraction(0)] * self._order
        for e, c in self._num.items():
            out[e] = Fraction(c, self._den)
        return tuple(out)

    def terms(self) -> dict[int, Fraction]:
        return {e: Fraction(c, self._den) for e, c in sorted(self._num.items())}

    def is_zero(self) -> bool:
        # canonical form: divisible by Phi_L iff the remainder vanishes
        return not self._num

    def is_rational(self) -> bool:
        return not self._num or set(self._num) == {0}

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise InvalidArgument(f"{self!r} is not rational")
        return Fraction(self._num.get(0, 0), self._den)

    def to_complex(self) -> "ComplexF":
        L = self._order
        re = math.fsum(c * math.cos(2 * math.pi * e / L) for e, c in self._num.items())
        im = math.fsum(c * math.sin(2 * math.pi * e / L) for e, c in self._num.items())
        return ComplexF(re / self._den, im / self._den)

    def __complex__(self) -> complex:
        return complex(self.to_complex())

    # -- arithmetic ----------------------------------------------------- #

    def _coerce(self, other) -> "Cyclo | None":
        if isinstance(other, Cyclo):
            if other._order != self._order:
                raise InvalidArgument(
                    f"order mismatch: {self._order} vs {other._order}; lift first"
                )
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return Cyclo.rational(other, self._order)
        return None

    def __add__(self, other):
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        den = self._den * y._den // math.gcd(self._den, y._den)
        a, b = den // self._den, den // y._den
        num = {e: c * a for e, c in self._num.items()}
        for e, c in y._num.items():
            num[e] = num.get(e, 0) + c * b
        return Cyclo._make(self._order, {e: c for e, c in num.items() if c}, den)

    __radd__ = __add__

    def __neg__(self) -> "Cyclo":
        return Cyclo._make(self._order, {e: -c for e, c in self._num.items()}, self._den)

    def __pos__(self) -> "Cyclo":
        return self

    def __sub__(self, other):
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other):
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return y + (-self)

    def __mul__(self, other):
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        if y.is_rational():
            r = y._num.get(0, 0)
            return Cyclo._make(
                self._order, {e: c * r for e, c in self._num.items()} if r else {},
                self._den * y._den,
            )
        if self.is_rational():
            return y * self
        L = self._order
        acc: dict[int, int] = defaultdict(int)
        for s, a in self._num.items():
            for t, b in y._num.items():
                acc[(s + t) % L] += a * b
        return _reduce(L, acc, self._den * y._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            return self * other.inverse()
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return y * self.inverse()

    def __pow__(self, k: int) -> "Cyclo":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclo.one(self._order)
        for _ in range(k):
            out = out * self
        return out

    def galois(self, a: int) -> "Cyclo":
        """Image under the automorphism ``zeta -> zeta**a`` (gcd(a, L) = 1)."""
        L = self._order
        if math.gcd(a, L) != 1:
            raise InvalidArgument(f"{a} is not a unit modulo {L}")
        acc: dict[int, int] = defaultdict(int)
        for e, c in self._num.items():
            acc[(a * e) % L] += c
        return _reduce(L, acc, self._den)

    def conj(self) -> "Cyclo":
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q: product of all Galois conjugates."""
        L = self._order
        out = Cyclo.one(L)
        for a in range(1, L + 1):
            if math.gcd(a, L) == 1:
                out = out * self.galois(a)
        return out.to_rational()

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclo.rational(1 / self.to_rational(), self._order)
        L = self._order
        rest = Cyclo.one(L)
        for a in range(2, L + 1):
            if math.gcd(a, L) == 1:
                rest = rest * self.galois(a)
        return rest * (1 / (self * rest).to_rational())

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclo) and other._order != self._order:
            L = math.lcm(self._order, other._order)
            return lift_order(self, L) == lift_order(other, L)
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return self._den == y._den and self._num == y._num

    def __bool__(self) -> bool:
        return bool(self._num)

    @classmethod
    def dot(cls, xs: Sequence["Cyclo"], ys: Sequence["Cyclo"]) -> "Cyclo":
        """``sum(x * conj(y))`` with a single reduction at the end."""
        if not xs:
            raise InvalidArgument("dot of empty sequences")
        L = xs[0]._order
        den = 1
        for v in (*xs, *ys):
            if v._order != L:
                raise InvalidArgument("order mismatch in dot")
            den = den * v._den // math.gcd(den, v._den)
        acc: dict[int, int] = defaultdict(int)
        for x, y in zip(xs, ys, strict=True):
            if not x._num or not y._num:
                continue
            scale = (den // x._den) * (den // y._den)
            for s, a in x._num.items():
                a *= scale
                for t, b in y._num.items():
                    acc[(s - t) % L] += a * b
        return _reduce(L, acc, den * den)

    def __repr__(self) -> str:
        if not self._num:
            return f"Cyclo({self._order}, 0)"
        parts = []
        for e, c in sorted(self._num.items()):
            f = Fraction(c, self._den)
            parts.append(f"{f}" if e == 0 else f"{f}*z^{e}")
        return f"Cyclo({self._order}, {' + '.join(parts)})"


# --------------------------------------------------------------------------- #
# float scalars
# --------------------------------------------------------------------------- #


class ComplexF:
    """Double-precision complex scalar with an absolute zero tolerance."""

    __slots__ = ("value",)

    def __init__(self, re: float = 0.0, im: float = 0.0):
        self.value = complex(re, im)

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexF":
        obj = object.__new__(cls)
        obj.value = complex(z)
        return obj

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag

    @staticmethod
    def _unwrap(other):
        if isinstance(other, ComplexF):
            return other.value
        if isinstance(other, Cyclo):
            return complex(other)
        if isinstance(other, (int, float, complex, Fraction)) and not isinstance(other, bool):
            return complex(other)
        return None

    def __add__(self, other):
        z = self._unwrap(other)
        return NotImplemented if z is None else ComplexF.from_complex(self.value + z)

    __radd__ = __add__

    def __sub__(self, other):
        z = self._unwrap(other)
        return NotImplemented if z is None else ComplexF.from_complex(self.value - z)

    def __rsub__(self, other):
        z = self._unwrap(other)
        return NotImplemented if z is None else ComplexF.from_complex(z - self.value)

    def __mul__(self, other):
        z = self._unwrap(other)
        return NotImplemented if z is None else ComplexF.from_complex(self.value * z)

    __rmul__ = __mul__

    def __truediv__(self, other):
        z = self._unwrap(other)
        return NotImplemented if z is None else ComplexF.from_complex(self.value / z)

    def __neg__(self) -> "ComplexF":
        return ComplexF.from_complex(-self.value)

    def __pow__(self, k: int) -> "ComplexF":
        return ComplexF.from_complex(self.value**k)

    def __abs__(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value

    def __eq__(self, other) -> bool:
        z = self._unwrap(other)
        return NotImplemented if z is None else self.value == z

    __hash__ = None

    def conj(self) -> "ComplexF":
        return ComplexF.from_complex(self.value.conjugate())

    def is_zero(self, tol: float = FLOAT_TOL) -> bool:
        return abs(self.value) <= tol

    def to_complex(self) -> "ComplexF":
        return self

    @classmethod
    def dot(cls, xs: Sequence["ComplexF"], ys: Sequence["ComplexF"]) -> "ComplexF":
        return cls.from_complex(
            sum((x.value * y.value.conjugate() for x, y in zip(xs, ys, strict=True)), 0j)
        )

    def __repr__(self) -> str:
        return f"ComplexF({self.re!r}, {self.im!r})"


# --------------------------------------------------------------------------- #
# functional interface
# --------------------------------------------------------------------------- #


def root_of_unity(order: int, exponent: int) -> Cyclo:
    """``zeta_order ** exponent`` as a Cyclo of the given order."""
    order = _check_order(order)
    return _reduce(order, {exponent % order: 1}, 1)


def lift_order(x: Cyclo, target_order: int) -> Cyclo:
    """Rewrite ``x`` over Q(zeta_target) by ``zeta_L**t -> zeta_T**(t*T/L)``."""
    target_order = _check_order(target_order)
    if target_order % x.order:
        raise InvalidArgument(f"order {x.order} does not divide {target_order}")
    if target_order == x.order:
        return x
    step = target_order // x.order
    return _reduce(target_order, {e * step: c for e, c in x._num.items()}, x._den)


def common_order(values: Iterable[Cyclo]) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v.order)
    return out


def cyclo_add(x: Cyclo, y: Cyclo) -> Cyclo:
    return x + y


def cyclo_mul(x: Cyclo, y: Cyclo) -> Cyclo:
    return x * y


def cyclo_neg(x: Cyclo) -> Cyclo:
    return -x


def cyclo_conj(x: Cyclo) -> Cyclo:
    return x.conj()


def cyclo_scale(x: Cyclo, r) -> Cyclo:
    if isinstance(r, Cyclo):
        return x * r
    return x * Fraction(r)


def is_zero(x, tol: float = FLOAT_TOL) -> bool:
    if isinstance(x, Cyclo):
        return x.is_zero()
    return x.is_zero(tol)


def to_complex(x: Cyclo) -> ComplexF:
    return x.to_complex()


def unit_phase(order: int, exponent: int) -> ComplexF:
    """Float counterpart of :func:`root_of_unity`."""
    return ComplexF.from_complex(cmath.exp(2j * math.pi * (exponent % order) / order))
