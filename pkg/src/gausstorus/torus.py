"""The quantum torus at q = exp(pi*i/N) and its standard module.

The algebra has unitary generators u_1, ..., u_m with

    u_i u_{i+1} = q u_{i+1} u_i,      u_i u_j = u_j u_i  (|i-j| > 1),
    u_i^{2N} = 1,

and carries the star structure u_i* = u_i^{-1} and the inversion
automorphism theta(u_i) = u_i^{-1}.  Elements are kept as exact linear
combinations of normally ordered monomials u^a = u_1^{a_1}... u_m^{a_m}
with a in (Z/2N)^m; the product of two monomials is again a monomial up
to an explicit power of q, so all algebra operations stay sparse.

For even m the standard module has basis v(i_1, ..., i_k), k = m/2,
with each index running over Z/2N: odd generators act diagonally by
q^{i_s}, even generators shift a neighbouring pair of indices in
opposite directions (the last one shifts only its own index).  That
module is faithful, so identities proved at the level of monomial
coefficients and identities of matrices are interchangeable; tests
exercise both sides.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .cyclo import CycNum, master_order, zeta
from .exactla import ExactMatrix


class TorusAlgebra:
    """The quantum torus on ``ngens`` generators at level N."""

    def __init__(self, N: int, ngens: int):
        if N < 2 or ngens < 1:
            raise ValueError("need N >= 2 and at least one generator")
        self.N = N
        self.ngens = ngens
        self.period = 2 * N
        self.L = master_order(N)
        self._qpow = tuple(
            zeta(self.L, (4 * k) % self.L) for k in range(self.period)
        )

    def qpow(self, k: int) -> CycNum:
        """q**k as a field element (q has multiplicative order 2N)."""
        return self._qpow[k % self.period]

    @property
    def q(self) -> CycNum:
        return self._qpow[1]

    @property
    def x(self) -> CycNum:
        """A fixed square root of q."""
        return zeta(self.L, 2)

    def _key(self):
        return (self.N, self.ngens)

    def scalar(self, value) -> CycNum:
        if isinstance(value, CycNum):
            if value.order != self.L:
                raise ValueError("coefficient from a different field")
            return value
        return CycNum.rational(self.L, value)

    def zero(self) -> "LaurentElement":
        return LaurentElement(self, {})

    def one(self) -> "LaurentElement":
        return self.monomial((0,) * self.ngens)

    def monomial(self, exps, coeff=1) -> "LaurentElement":
        exps = tuple(e % self.period for e in exps)
        if len(exps) != self.ngens:
            raise ValueError(f"expected {self.ngens} exponents")
        c = self.scalar(coeff)
        return LaurentElement(self, {exps: c} if c else {})

    def u(self, i: int, power: int = 1) -> "LaurentElement":
        """The generator u_i (1-based), or a power of it."""
        if not 1 <= i <= self.ngens:
            raise ValueError(f"generator index {i} outside 1..{self.ngens}")
        exps = [0] * self.ngens
        exps[i - 1] = power
        return self.monomial(exps)

    def standard_module(self) -> "StandardModule":
        return StandardModule(self)

    def __repr__(self):
        return f"TorusAlgebra(N={self.N}, ngens={self.ngens})"


@lru_cache(maxsize=None)
def torus_algebra(N: int, ngens: int) -> TorusAlgebra:
    return TorusAlgebra(N, ngens)


def strand_algebra(N: int, n: int) -> TorusAlgebra:
    """The torus whose standard module carries the braid group on n
    strands: n-1 generators when n is odd, n when n is even (the extra
    generator pads the module; braid elements never touch it)."""
    if n < 2:
        raise ValueError("need at least two strands")
    return torus_algebra(N, n - 1 if n % 2 else n)


class LaurentElement:
    """Exact linear combination of normally ordered torus monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: TorusAlgebra, terms: Mapping[tuple, CycNum]):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if v}

    def _coerce(self, other):
        if isinstance(other, LaurentElement):
            if other.alg._key() != self.alg._key():
                raise ValueError("elements of different tori cannot combine")
            return other
        if isinstance(other, (int, Fraction, CycNum)):
            c = self.alg.scalar(other)
            return self.alg.monomial((0,) * self.alg.ngens, c)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __neg__(self):
        return LaurentElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return LaurentElement(self.alg, out)

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
        if isinstance(other, (int, Fraction, CycNum)):
            c = self.alg.scalar(other)
            return LaurentElement(
                self.alg, {k: v * c for k, v in self.terms.items()}
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        alg = self.alg
        period = alg.period
        m = alg.ngens
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in o.terms.items():
                phase = 0
                for t in range(m - 1):
                    phase -= a[t + 1] * b[t]
                key = tuple((a[t] + b[t]) % period for t in range(m))
                val = ca * cb * alg.qpow(phase)
                cur = out.get(key)
                out[key] = val if cur is None else cur + val
        return LaurentElement(alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.alg.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self) -> "LaurentElement":
        """Antilinear involution with u_i* = u_i^{-1}."""
        alg = self.alg
        m = alg.ngens
        out = {}
        for a, c in self.terms.items():
            phase = 0
            for t in range(m - 1):
                phase -= a[t] * a[t + 1]
            key = tuple((-e) % alg.period for e in a)
            out[key] = c.conj() * alg.qpow(phase)
        return LaurentElement(alg, out)

    def theta(self) -> "LaurentElement":
        """The linear automorphism sending every u_i to u_i^{-1}."""
        alg = self.alg
        out = {
            tuple((-e) % alg.period for e in a): c
            for a, c in self.terms.items()
        }
        return LaurentElement(alg, out)

    def inv(self) -> "LaurentElement":
        """Inverse of a single scaled monomial (general elements are not
        invertible term-by-term; unitaries should use star())."""
        if len(self.terms) != 1:
            raise ValueError("inv() is only defined for monomials")
        ((a, c),) = self.terms.items()
        alg = self.alg
        phase = 0
        for t in range(alg.ngens - 1):
            phase -= a[t] * a[t + 1]
        key = tuple((-e) % alg.period for e in a)
        return LaurentElement(alg, {key: c.inv() * alg.qpow(phase)})

    def frozen(self):
        """Hashable snapshot of the terms."""
        return tuple(sorted(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "LaurentElement(0)"
        bits = []
        for a, c in sorted(self.terms.items())[:6]:
            mono = "*".join(
                f"u{i + 1}^{e}" for i, e in enumerate(a) if e
            ) or "1"
            bits.append(f"({c!r})*{mono}")
        more = "" if len(self.terms) <= 6 else f" + {len(self.terms) - 6} more"
        return f"LaurentElement({' + '.join(bits)}{more})"


class StandardModule:
    """The faithful module of a torus with an even number of generators."""

    def __init__(self, alg: TorusAlgebra):
        if alg.ngens % 2:
            raise ValueError(
                "the standard module needs an even number of generators"
            )
        self.alg = alg
        self.k = alg.ngens // 2
        self.dim = alg.period ** self.k
        self._gen_cache: dict[int, ExactMatrix] = {}

    def decode(self, index: int) -> tuple[int, ...]:
        period = self.alg.period
        digits = []
        for _ in range(self.k):
            digits.append(index % period)
            index //= period
        return tuple(reversed(digits))

    def encode(self, digits) -> int:
        period = self.alg.period
        index = 0
        for d in digits:
            index = index * period + (d % period)
        return index

    def matrix_of(self, elem: LaurentElement) -> ExactMatrix:
        if elem.alg._key() != self.alg._key():
            raise ValueError("element belongs to a different torus")
        alg = self.alg
        period = alg.period
        k = self.k
        data: dict = {}
        for a, c in elem.terms.items():
            for col in range(self.dim):
                vec = list(self.decode(col))
                phase = 0
                for j in range(alg.ngens, 0, -1):
                    e = a[j - 1]
                    if not e:
                        continue
                    if j % 2:
                        phase += e * vec[(j - 1) // 2]
                    else:
                        s = j // 2 - 1
                        vec[s] = (vec[s] + e) % period
                        if s + 1 < k:
                            vec[s + 1] = (vec[s + 1] - e) % period
                key = (self.encode(vec), col)
                val = c * alg.qpow(phase)
                cur = data.get(key)
                data[key] = val if cur is None else cur + val
        return ExactMatrix(self.dim, self.dim, data)

    def gen_matrix(self, i: int) -> ExactMatrix:
        if i not in self._gen_cache:
            self._gen_cache[i] = self.matrix_of(self.alg.u(i))
        return self._gen_cache[i]

    def __repr__(self):
        return f"StandardModule(N={self.alg.N}, ngens={self.alg.ngens}, dim={self.dim})"
