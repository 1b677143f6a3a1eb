"""Exact Laurent polynomials in q with arbitrary-precision integer coefficients.

This is the value type of every q-binomial coefficient in the package.  It
also houses cyclotomic polynomials and divisibility testing modulo them,
which is what "congruent mod Phi_m(q)" means for Laurent polynomials.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, Mapping, Sequence

__all__ = [
    "LaurentPoly",
    "CyclotomicModulus",
    "ZERO",
    "ONE",
    "Q",
    "cyclotomic",
    "cyclotomic_poly",
    "divides",
    "congruent_mod",
]


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class LaurentPoly:
    """A Laurent polynomial over the integers: a valuation plus a dense
    coefficient list, ``coeffs[i]`` holding the coefficient of ``q**(val+i)``.

    Instances are canonical: a nonzero polynomial never starts or ends with a
    zero coefficient, and the zero polynomial is ``LaurentPoly(0, ())``.
    Values are immutable after construction and safe to share across threads.

    >>> LaurentPoly(0, (0, 1, 1, 0))
    LaurentPoly('q + q^2')
    >>> LaurentPoly(-7, (1, 1, 2, 1, 1))
    LaurentPoly('q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3')
    >>> LaurentPoly(3, ()) == LaurentPoly(0, (0,))
    True
    """

    val: int
    coeffs: tuple[int, ...]

    def __init__(self, val: int, coeffs: Sequence[int]):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
            val += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.val = 0
            self.coeffs = ()
        else:
            self.val = val
            self.coeffs = tuple(coeffs[lo:hi])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls(0, ())

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls(0, (1,))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def q_power(cls, e: int, coeff: int = 1) -> LaurentPoly:
        """The monomial ``coeff * q**e``."""
        return cls(e, (coeff,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from an {exponent: coefficient} mapping."""
        nonzero = {e: c for e, c in terms.items() if c != 0}
        if not nonzero:
            return cls.zero()
        lo, hi = min(nonzero), max(nonzero)
        coeffs = [0] * (hi - lo + 1)
        for e, c in nonzero.items():
            coeffs[e - lo] = c
        return cls(lo, coeffs)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (0 for the zero poly)."""
        return self.val

    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient (-1 for the zero poly)."""
        return self.val + len(self.coeffs) - 1

    def coefficient(self, e: int) -> int:
        i = e - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.val + i, c

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_self_reciprocal(self) -> bool:
        """True if the coefficient sequence reads the same in both directions."""
        return self.coeffs == self.coeffs[::-1]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.val, other.val)
        hi = max(self.degree(), other.degree())
        coeffs = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[self.val + i - lo] += c
        for i, c in enumerate(other.coeffs):
            coeffs[other.val + i - lo] += c
        return LaurentPoly(lo, coeffs)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.val, tuple(-c for c in self.coeffs))

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.val, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        # Schoolbook convolution; valuations and degrees add.
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.val + other.val, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by ``q**e``: every exponent translated by ``e``.

        >>> LaurentPoly(0, (1, 1)).shift(-1)
        LaurentPoly('q^-1 + 1')
        """
        if not self.coeffs:
            return self
        return LaurentPoly(self.val + e, self.coeffs)

    def substitute_qinv(self) -> LaurentPoly:
        """The image under q -> 1/q: exponent e becomes -e.

        >>> LaurentPoly(-5, (2, 0, 1)).substitute_qinv()
        LaurentPoly('q^3 + 2*q^5')
        """
        return LaurentPoly(-self.degree(), self.coeffs[::-1])

    def inflate(self, t: int) -> LaurentPoly:
        """The image under q -> q**t for a nonzero integer t."""
        if t == 0:
            raise ValueError("inflation exponent must be nonzero")
        return LaurentPoly.from_terms({e * t: c for e, c in self.terms()})

    def eval_at_one(self) -> int:
        """The integer value at q = 1, i.e. the sum of all coefficients."""
        return sum(self.coeffs)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        """Render in the documented text format.

        Terms ascend by exponent; coefficient 1 is omitted; exponent 0 is a
        bare coefficient and exponent 1 is written "q"; negative coefficients
        join with " - " followed by the magnitude.

        >>> print(LaurentPoly(0, (-2, -2)))
        -2 - 2*q
        >>> print(LaurentPoly(0, ()))
        0
        """
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{e}" if mag == 1 else f"{mag}*q^{e}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json_dict(self) -> dict:
        """JSON form: valuation plus coefficient decimal strings, ascending."""
        return {
            "valuation": self.val,
            "coefficients": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> LaurentPoly:
        return cls(int(data["valuation"]), [int(c) for c in data["coefficients"]])


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))
Q = LaurentPoly(1, (1,))


def _divmod_monic(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Long division of ascending coefficient lists by a monic divisor.

    Monic divisors keep every intermediate coefficient an integer, so the
    result is exact over the integers whenever the remainder comes out zero.
    """
    dd = len(den) - 1
    rem = list(num)
    if len(rem) <= dd:
        return [], rem
    quot = [0] * (len(rem) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + dd]
        if c:
            quot[i] = c
            for j, d in enumerate(den):
                rem[i + j] -= c * d
    return quot, rem[:dd]


def divides(d: LaurentPoly, a: LaurentPoly) -> bool:
    """True if ``a`` is a multiple of ``d`` in the Laurent polynomial ring.

    ``d`` must be monic with valuation 0.  A unit power of q never affects
    divisibility by such a ``d`` (its constant term is nonzero), so ``a`` is
    first shifted to valuation 0 and then divided exactly over the integers.
    """
    if d.is_zero() or d.val != 0 or not d.is_monic():
        raise ValueError("divisor must be monic with valuation 0")
    if a.is_zero():
        return True
    _, rem = _divmod_monic(a.coeffs, d.coeffs)
    return not any(rem)


@dataclasses.dataclass(frozen=True)
class CyclotomicModulus:
    """The congruence context for q-Lucas: an integer m >= 2 together with
    the m-th cyclotomic polynomial Phi_m(q)."""

    m: int
    phi: LaurentPoly


# Cache of Phi_m keyed by m.  Values are immutable and every writer computes
# the identical canonical polynomial, so concurrent fills are idempotent.
_cyclotomic_cache: dict[int, LaurentPoly] = {}


def cyclotomic_poly(m: int) -> LaurentPoly:
    """The m-th cyclotomic polynomial for m >= 1, by recursive exact division:
    Phi_m(q) = (q^m - 1) / prod of Phi_d(q) over proper divisors d of m.

    >>> cyclotomic_poly(6)
    LaurentPoly('1 - q + q^2')
    """
    if m < 1:
        raise ValueError(f"cyclotomic index must be positive, got {m}")
    cached = _cyclotomic_cache.get(m)
    if cached is not None:
        return cached
    if m == 1:
        phi = LaurentPoly(0, (-1, 1))
    else:
        num = [0] * (m + 1)
        num[0], num[m] = -1, 1
        den = ONE
        for d in range(1, m):
            if m % d == 0:
                den = den * cyclotomic_poly(d)
        quot, rem = _divmod_monic(num, den.coeffs)
        assert not any(rem), f"cyclotomic division left a remainder at m={m}"
        phi = LaurentPoly(0, quot)
    _cyclotomic_cache[m] = phi
    return phi


def cyclotomic(m: int) -> CyclotomicModulus:
    """The modulus object for Phi_m; only m >= 2 is a valid modulus."""
    if m < 2:
        raise ValueError(f"cyclotomic modulus requires m >= 2, got {m}")
    return CyclotomicModulus(m, cyclotomic_poly(m))


def congruent_mod(a: LaurentPoly, b: LaurentPoly, mod: CyclotomicModulus) -> bool:
    """True if a - b is divisible by Phi_m(q)."""
    return divides(mod.phi, a - b)
