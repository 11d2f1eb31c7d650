"""
Exact arithmetic in the cyclotomic field Q(zeta_n), stored as residues of
Q[x] modulo the n-th cyclotomic polynomial.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from utils.errors import DivisionByZero

logger = logging.getLogger(__name__)

Poly = Tuple[Fraction, ...]
Number = Union[int, Fraction]


def _trim(coeffs: Sequence[Fraction]) -> List[Fraction]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return _trim(out)


def poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def poly_divmod(num: Sequence[Fraction], den: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    """Quotient and remainder of polynomials over Q (lowest degree first)"""
    den = _trim(den)
    if not den:
        raise DivisionByZero("polynomial division by zero")
    rem = _trim([Fraction(c) for c in num])
    if len(rem) < len(den):
        return [], rem
    quot = [Fraction(0)] * (len(rem) - len(den) + 1)
    lead = den[-1]
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        factor = rem[-1] / lead
        quot[shift] = factor
        for k, d in enumerate(den):
            rem[shift + k] -= factor * d
        rem = _trim(rem)
    return _trim(quot), rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Poly:
    """
    Coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided exactly by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic_poly(d))
            if rem:
                raise ArithmeticError(f"Phi_{d} does not divide x^{n} - 1")
    return tuple(num)


class CyclotomicField:
    """Q(zeta_n) as Q[x]/Phi_n(x)"""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_poly(n)
        self.degree = len(self.phi) - 1
        # x^k mod phi for degree <= k <= 2*degree - 2, used to fold products
        self._fold = {}
        power = [Fraction(0)] * self.degree + [Fraction(1)]
        for k in range(self.degree, max(2 * self.degree - 1, self.degree + 1)):
            _, r = poly_divmod(power, self.phi)
            self._fold[k] = tuple(r + [Fraction(0)] * (self.degree - len(r)))
            power = [Fraction(0)] + power
        logger.debug(f"Built Q(zeta_{n}) of degree {self.degree}")

    def reduce(self, coeffs: Sequence[Fraction]) -> Poly:
        d = self.degree
        if len(coeffs) <= d:
            return tuple(coeffs) + (Fraction(0),) * (d - len(coeffs))
        out = [Fraction(c) for c in coeffs[:d]] + [Fraction(0)] * (d - min(len(coeffs), d))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c == 0:
                continue
            fold = self._fold.get(k)
            if fold is None:
                _, r = poly_divmod([Fraction(0)] * k + [Fraction(1)], self.phi)
                fold = tuple(r + [Fraction(0)] * (d - len(r)))
                self._fold[k] = fold
            for i, f in enumerate(fold):
                if f:
                    out[i] += c * f
        return tuple(out)

    def element(self, coeffs: Sequence[Number]) -> 'Cyclotomic':
        return Cyclotomic(self, self.reduce([Fraction(c) for c in coeffs]))

    def from_int(self, value: Number) -> 'Cyclotomic':
        return Cyclotomic(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def zero(self) -> 'Cyclotomic':
        return self.from_int(0)

    def one(self) -> 'Cyclotomic':
        return self.from_int(1)

    def gen_power(self, k: int) -> 'Cyclotomic':
        k %= self.n
        return self.element([0] * k + [1])


class Cyclotomic:
    """Immutable element of a CyclotomicField"""

    __slots__ = ('field', 'coeffs', '_hash')

    def __init__(self, field: CyclotomicField, coeffs: Poly):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other) -> 'Cyclotomic':
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_int(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def support(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.field, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational():
            return other * self.coeffs[0]
        if other.is_rational():
            return self * other.coeffs[0]
        return Cyclotomic(self.field, self.field.reduce(poly_mul(self.coeffs, other.coeffs) or [Fraction(0)]))

    __rmul__ = __mul__

    def inverse(self) -> 'Cyclotomic':
        """Inverse via the extended Euclidean algorithm against Phi_n"""
        if self.is_zero():
            raise DivisionByZero("inverse of zero in cyclotomic field")
        if self.is_rational():
            return self.field.from_int(1 / self.coeffs[0])
        # invariant: s_k * self = r_k mod phi
        r0, r1 = list(self.field.phi), _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        inv_lead = 1 / r1[0]
        return self.field.element([c * inv_lead for c in s1] or [0])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.field.n == other.field.n and self.coeffs == other.coeffs

    def __hash__(self):
        # rationals compare equal to int and Fraction, so they hash like them
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.field.n, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({[str(c) for c in self.coeffs]})"
