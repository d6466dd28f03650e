"""Exact arithmetic in cyclotomic fields Q(zeta_L).

Elements are canonical residues modulo the L-th cyclotomic polynomial,
stored as an integer coefficient vector over the power basis
1, z, ..., z^(phi(L)-1) together with a positive common denominator in
lowest terms.  Because the representation is canonical, ``==`` decides
equality of field elements and CycNum values can be used as dict keys.

The only inexact operation is :func:`embed`, which evaluates an element
as a complex number at z = exp(2*pi*i/L) for printing and plotting.
Sign decisions on real elements go through :func:`real_sign`, which uses
adaptive-precision interval evaluation and is never wrong.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Union

import mpmath

Rat = Union[int, Fraction]


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n // 2 + 1) if n % d == 0]
    out.append(n)
    return out


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (coefficients low to high), den monic."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - dn, 0, -1):
        c = num[k + dn - 1]
        out[k - 1] = c
        if c:
            for j, d in enumerate(den):
                num[k - 1 + j] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low to high."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_div_exact(poly, _cyclotomic(d))
    return tuple(poly)


class _Field:
    """Cached reduction data for one cyclotomic order."""

    __slots__ = ("order", "degree", "zpow")

    def __init__(self, order: int):
        phi = _cyclotomic(order)
        deg = len(phi) - 1
        red = tuple(-c for c in phi[:-1])
        zp: list[tuple[int, ...]] = [
            tuple(1 if t == j else 0 for t in range(deg)) for j in range(deg)
        ]
        for _ in range(deg, 2 * order):
            prev = zp[-1]
            top = prev[-1]
            shifted = [0] + list(prev[:-1])
            if top:
                shifted = [s + top * r for s, r in zip(shifted, red)]
            zp.append(tuple(shifted))
        self.order = order
        self.degree = deg
        self.zpow = tuple(zp)


@lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    if order < 1:
        raise ValueError("cyclotomic order must be positive")
    return _Field(order)


class CycNum:
    """An element of Q(zeta_order) in canonical form.

    Supports +, -, *, /, ** (integer exponents), conjugation and exact
    equality, and mixes freely with int and Fraction scalars.  Elements
    of different orders never mix; combine them by constructing both in
    a common field from the start.
    """

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, num: tuple[int, ...], den: int):
        # Callers normalize; this constructor trusts its arguments.
        self.order = order
        self._num = num
        self._den = den

    # -- construction -------------------------------------------------

    @staticmethod
    def _make(order: int, num: Iterable[int], den: int) -> "CycNum":
        num = list(num)
        if den < 0:
            den = -den
            num = [-v for v in num]
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        content = gcd(reduce(gcd, num, 0), den)
        if content > 1:
            num = [v // content for v in num]
            den //= content
        return CycNum(order, tuple(num), den)

    @classmethod
    def rational(cls, order: int, value: Rat) -> "CycNum":
        value = Fraction(value)
        deg = _field(order).degree
        num = [0] * deg
        num[0] = value.numerator
        return cls._make(order, num, value.denominator)

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable[Rat]) -> "CycNum":
        """Build from Fractions over the power basis 1, z, .., z^(phi-1)."""
        coeffs = [Fraction(c) for c in coeffs]
        deg = _field(order).degree
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients, got {len(coeffs)}")
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls._make(order, [int(c * den) for c in coeffs], den)

    # -- inspection ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(v, d) for v in self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._num[0], self._den)

    def is_real(self) -> bool:
        return self == self.conj()

    def __bool__(self) -> bool:
        return any(self._num)

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.order, self._den, self._num))

    def __repr__(self):
        if self.is_rational():
            return f"CycNum({self.order}, {self.as_rational()})"
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z^{j}")
            else:
                terms.append(f"{c}*z^{j}")
        return f"CycNum({self.order}, {' + '.join(terms)})"

    def coeff_strings(self) -> list[str]:
        """Exact decimal-free serialization of the basis coefficients."""
        return [str(c) for c in self.coeffs]

    # -- ring structure -------------------------------------------------

    def _coerce(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.order, other)
        return None

    def __eq__(self, other):
        if isinstance(other, CycNum) and other.order != self.order:
            # Values of different orders are only identified when both
            # are rational (hash() identifies those too); combining them
            # arithmetically still raises.
            if self.is_rational() and other.is_rational():
                return self.as_rational() == other.as_rational()
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._den == o._den and self._num == o._num

    def __neg__(self):
        return CycNum(self.order, tuple(-v for v in self._num), self._den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self._den, o._den
        num = [x * db + y * da for x, y in zip(self._num, o._num)]
        return CycNum._make(self.order, num, da * db)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = _field(self.order)
        deg = F.degree
        a, b = self._num, o._num
        nza = [(i, c) for i, c in enumerate(a) if c]
        nzb = [(j, c) for j, c in enumerate(b) if c]
        if not nza or not nzb:
            return CycNum.rational(self.order, 0)
        if len(nza) > len(nzb):
            nza, nzb = nzb, nza
        conv = [0] * (2 * deg - 1)
        for i, c in nza:
            for j, d in nzb:
                conv[i + j] += c * d
        out = list(conv[:deg]) + [0] * (deg - min(deg, len(conv)))
        zp = F.zpow
        for j in range(deg, len(conv)):
            cj = conv[j]
            if cj:
                zj = zp[j]
                for t in range(deg):
                    if zj[t]:
                        out[t] += cj * zj[t]
        return CycNum._make(self.order, out, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return self * Fraction(1, Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inv()
            n = -n
        result = CycNum.rational(self.order, 1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "CycNum":
        """Complex conjugation, z -> z^(L-1)."""
        F = _field(self.order)
        L = self.order
        out = [0] * F.degree
        for j, c in enumerate(self._num):
            if c:
                zj = F.zpow[(L - j) % L]
                for t in range(F.degree):
                    if zj[t]:
                        out[t] += c * zj[t]
        return CycNum._make(self.order, out, self._den)

    def inv(self) -> "CycNum":
        if self.is_rational():
            # bypass the cache: rationals of different orders compare
            # equal, so a cached result could carry the wrong order
            return CycNum.rational(self.order, 1 / self.as_rational())
        return _inverse(self)


@lru_cache(maxsize=8192)
def _inverse(z: CycNum) -> CycNum:
    if not z:
        raise ZeroDivisionError("inverse of zero")
    if z.is_rational():
        return CycNum.rational(z.order, 1 / z.as_rational())
    zc = z.conj()
    p = z * zc
    if p.is_rational():
        return zc / p.as_rational()
    # General case: solve (multiplication by z) w = 1 over the power basis.
    deg = _field(z.order).degree
    cols = [z * zeta(z.order, j) for j in range(deg)]
    rows = [[Fraction(c._num[i], c._den) for c in cols] for i in range(deg)]
    rhs = [Fraction(int(i == 0)) for i in range(deg)]
    for col in range(deg):
        piv = next(r for r in range(col, deg) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv_p = 1 / rows[col][col]
        rows[col] = [v * inv_p for v in rows[col]]
        rhs[col] *= inv_p
        for r in range(deg):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
                rhs[r] -= f * rhs[col]
    return CycNum.from_coeffs(z.order, rhs)


# -- constructors and named values -------------------------------------


def zeta(order: int, exponent: int = 1) -> CycNum:
    """The root of unity exp(2*pi*i*exponent/order)."""
    F = _field(order)
    vec = F.zpow[exponent % order]
    return CycNum._make(order, vec, 1)


def one(order: int) -> CycNum:
    return CycNum.rational(order, 1)


def zero(order: int) -> CycNum:
    return CycNum.rational(order, 0)


def master_order(N: int) -> int:
    """Order of the coefficient field used for rank N: contains
    zeta_8 and all half-integer powers of q = exp(pi*i/N)."""
    return 8 * N


def qnum(m: Rat, N: int) -> CycNum:
    """The quantum integer [m] = (q^m - q^-m)/(q - q^-1) at q = exp(pi*i/N).

    m may be a half-integer (Fraction with denominator 2).
    """
    m = Fraction(m)
    if m.denominator not in (1, 2):
        raise ValueError(f"[m] needs integer or half-integer m, got {m}")
    t = int(2 * m)
    L = master_order(N)
    num = zeta(L, 2 * t) - zeta(L, -2 * t)
    den = zeta(L, 4) - zeta(L, -4)
    return num / den


def gauss_sum(modulus: int, order: int) -> CycNum:
    """The quadratic Gauss sum sum_j exp(2*pi*i*j^2/modulus), j < modulus."""
    if order % modulus:
        raise ValueError(f"zeta_{modulus} does not lie in Q(zeta_{order})")
    step = order // modulus
    total = zero(order)
    for j in range(modulus):
        total = total + zeta(order, step * j * j)
    return total


def _square_split(m: int) -> tuple[int, int]:
    """m = s^2 * t with t squarefree; returns (s, t)."""
    s, t = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                t *= p
        p += 1 if p == 2 else 2
    return s, t * m


def sqrt_int(m: int, order: int) -> CycNum:
    """The positive real square root of the integer m >= 0 inside
    Q(zeta_order), built from quadratic Gauss sums.  Raises ValueError
    when the root does not lie in the field."""
    if m < 0:
        raise ValueError("sqrt_int needs a nonnegative integer")
    if m == 0:
        return zero(order)
    s, t = _square_split(m)
    root = CycNum.rational(order, s)
    if t % 2 == 0:
        if order % 8:
            raise ValueError(f"sqrt(2) does not lie in Q(zeta_{order})")
        root = root * (zeta(order, order // 8) + zeta(order, -(order // 8)))
        t //= 2
    p = 3
    while p <= t:
        if t % p == 0:
            t //= p
            if order % p:
                raise ValueError(f"sqrt({p}) does not lie in Q(zeta_{order})")
            g = gauss_sum(p, order)
            if p % 4 == 3:
                if order % 4:
                    raise ValueError(
                        f"sqrt({p}) does not lie in Q(zeta_{order})"
                    )
                g = g * (-zeta(order, order // 4))
            root = root * g
        p += 2
    if root * root != m:
        raise ArithmeticError(f"square-root construction failed for {m}")
    if real_sign(root) < 0:
        root = -root
    return root


# -- numeric evaluation ------------------------------------------------


def embed(z: CycNum, precision: int = 12) -> complex:
    """Evaluate at zeta_order = exp(2*pi*i/order) as a complex float.

    precision counts requested decimal digits; values above ~15 exceed
    what a Python complex can carry and are clamped by the output type.
    """
    with mpmath.workdps(precision + 15):
        total = mpmath.mpc(0)
        L = z.order
        for j, c in enumerate(z._num):
            if c:
                total += c * mpmath.expjpi(mpmath.mpf(2 * j) / L)
        total /= z._den
        return complex(total)


def real_sign(z: CycNum) -> int:
    """Sign of a real element: -1, 0 or 1.  Raises on non-real input."""
    if not z == z.conj():
        raise ValueError(f"{z!r} is not real")
    if not z:
        return 0
    L = z.order
    size = sum(abs(c) for c in z._num)
    dps = 30
    while dps <= 480:
        with mpmath.workdps(dps):
            total = mpmath.mpf(0)
            for j, c in enumerate(z._num):
                if c:
                    total += c * mpmath.cospi(mpmath.mpf(2 * j) / L)
            err = (size + 1) * mpmath.mpf(10) ** (5 - dps)
            if abs(total) > err * z._den:
                return 1 if total > 0 else -1
        dps *= 2
    raise ArithmeticError("sign of a provably nonzero value did not resolve")
