"""
Scalars of the form re + th*theta over Q(xi), xi a primitive 2p-th root of
unity, where theta is a formal symbol with theta^2 = (1 - xi^-2) * lambda and
lambda = (xi - 1)/(xi + 1).
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Union

import config
from scalar.cyclotomic import Cyclotomic, CyclotomicField
from utils.errors import DivisionByZero, DivisionByZeroDivisor, UnsupportedP

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class ThetaScalar:
    """Immutable element re + th*theta of Q(xi)[theta]/(theta^2 - c)"""

    __slots__ = ('ctx', 're', 'th', '_hash')

    def __init__(self, ctx: 'ScalarContext', re: Cyclotomic, th: Cyclotomic):
        self.ctx = ctx
        self.re = re
        self.th = th
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, ThetaScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_int(other)
        if isinstance(other, Cyclotomic):
            return ThetaScalar(self.ctx, other, self.ctx.field.zero())
        return NotImplemented

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.th.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def has_theta(self) -> bool:
        return not self.th.is_zero()

    def support(self) -> int:
        return self.re.support() + self.th.support()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ThetaScalar(self.ctx, self.re + other.re, self.th + other.th)

    __radd__ = __add__

    def __neg__(self):
        return ThetaScalar(self.ctx, -self.re, -self.th)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ThetaScalar(self.ctx, self.re - other.re, self.th - other.th)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ThetaScalar(self.ctx, self.re * other, self.th * other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.has_theta() and not other.has_theta():
            return ThetaScalar(self.ctx, self.re * other.re, self.ctx.field.zero())
        re = self.re * other.re + self.th * other.th * self.ctx.theta_sq_field
        th = self.re * other.th + self.th * other.re
        return ThetaScalar(self.ctx, re, th)

    __rmul__ = __mul__

    def conjugate(self) -> 'ThetaScalar':
        """Image under theta -> -theta"""
        return ThetaScalar(self.ctx, self.re, -self.th)

    def norm(self) -> Cyclotomic:
        return self.re * self.re - self.th * self.th * self.ctx.theta_sq_field

    def inverse(self) -> 'ThetaScalar':
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        if not self.has_theta():
            return ThetaScalar(self.ctx, self.re.inverse(), self.ctx.field.zero())
        n = self.norm()
        if n.is_zero():
            raise DivisionByZeroDivisor(f"{self!r} is a zero divisor (norm vanishes)")
        n_inv = n.inverse()
        return ThetaScalar(self.ctx, self.re * n_inv, -(self.th * n_inv))

    def is_invertible(self) -> bool:
        if self.is_zero():
            return False
        return not self.has_theta() or not self.norm().is_zero()

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.th.is_zero() and self.re == other
        if not isinstance(other, ThetaScalar):
            return NotImplemented
        return self.ctx.p == other.ctx.p and self.re == other.re and self.th == other.th

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.re) if self.th.is_zero() else hash((self.re, self.th))
        return self._hash

    def __repr__(self):
        from scalar.text import render
        return f"ThetaScalar({render(self)})"


class ScalarContext:
    """
    Arithmetic context for a fixed p >= 2.

    Holds the field Q(xi) with xi of order 2p, together with lambda and
    c = theta^2.
    """

    def __init__(self, p: int):
        if p < 2:
            raise UnsupportedP(f"p must be at least 2, got {p}", p=p)
        self.p = p
        self.n = 2 * p
        self.field = CyclotomicField(self.n)
        self.phi = self.field.phi
        self._xi_cache: Dict[int, ThetaScalar] = {}

        zero_f = self.field.zero()
        self.zero = ThetaScalar(self, zero_f, zero_f)
        self.one = ThetaScalar(self, self.field.one(), zero_f)
        self.xi = self.xi_power(1)
        xi_f = self.field.gen_power(1)
        lam_f = (xi_f - 1) / (xi_f + 1)
        self.theta_sq_field = (1 - self.field.gen_power(-2)) * lam_f
        self.lam = ThetaScalar(self, lam_f, zero_f)
        self.lam_inv = self.lam.inverse()
        self.theta_sq = ThetaScalar(self, self.theta_sq_field, zero_f)
        self.theta = ThetaScalar(self, zero_f, self.field.one())
        logger.debug(f"Scalar context ready for p={p}, [Q(xi):Q]={self.field.degree}")

    def from_int(self, value: Number) -> ThetaScalar:
        return ThetaScalar(self, self.field.from_int(value), self.field.zero())

    def from_cyclotomic(self, re: Cyclotomic, th: Optional[Cyclotomic] = None) -> ThetaScalar:
        return ThetaScalar(self, re, th if th is not None else self.field.zero())

    def xi_power(self, k: int) -> ThetaScalar:
        k %= self.n
        cached = self._xi_cache.get(k)
        if cached is None:
            cached = ThetaScalar(self, self.field.gen_power(k), self.field.zero())
            self._xi_cache[k] = cached
        return cached

    def sign(self, k: int) -> int:
        """(-1)^k as an int"""
        return -1 if k % 2 else 1

    def order_of_unity(self, s: ThetaScalar) -> Optional[int]:
        """Smallest n >= 1 with s^n = 1, searching n <= ORDER_SEARCH_FACTOR * p"""
        if s.is_zero():
            return None
        bound = config.ORDER_SEARCH_FACTOR * self.p
        power = s
        for n in range(1, bound + 1):
            if power == self.one:
                return n
            power = power * s
        return None

    def xi_exponent(self, s: ThetaScalar) -> Optional[int]:
        """k in [0, 2p) with s = xi^k, or None"""
        for k in range(self.n):
            if self.xi_power(k) == s:
                return k
        return None


@lru_cache(maxsize=None)
def context_init(p: int) -> ScalarContext:
    """Shared, deterministic scalar context for p"""
    return ScalarContext(p)


def scalar_arith(a: ThetaScalar, b: ThetaScalar, op: str) -> ThetaScalar:
    """
    Apply one of add, sub, mul, div, pow.

    For pow, b must be a rational integer scalar.
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    if op == 'pow':
        if b.has_theta() or not b.re.is_rational() or b.re.coeffs[0].denominator != 1:
            raise ValueError("exponent must be an integer scalar")
        return a ** int(b.re.coeffs[0])
    raise ValueError(f"unknown operation: {op}")


def order_of_unity(s: ThetaScalar) -> Optional[int]:
    return s.ctx.order_of_unity(s)
