"""Complex numbers at a stated binary precision, backed by mpmath.

A BigComplex pins the working precision it was produced at; arithmetic
between two values runs at the larger of the two precisions.  Values are
immutable, so they can be shared freely between threads.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp

MIN_PRECISION = 53


@dataclass(frozen=True)
class BigComplex:
    re: mp.mpf
    im: mp.mpf
    precision: int

    def __post_init__(self):
        if self.precision < MIN_PRECISION:
            raise ValueError(f"precision must be >= {MIN_PRECISION} bits")

    # -- constructors ------------------------------------------------------

    @classmethod
    def make(cls, value, precision: int) -> BigComplex:
        """Build from int/float/complex/mpf/mpc, rounding at `precision`."""
        with mp.workprec(precision):
            z = mp.mpmathify(value)
            if isinstance(z, mp.mpc):
                return cls(+z.real, +z.imag, precision)
            return cls(+z, mp.mpf(0), precision)

    @classmethod
    def from_int(cls, value: int, precision: int) -> BigComplex:
        return cls.make(value, precision)

    # -- views -------------------------------------------------------------

    def to_mpc(self) -> mp.mpc:
        return mp.mpc(self.re, self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- arithmetic (at the larger operand precision) -----------------------

    def _binop(self, other, op) -> BigComplex:
        if isinstance(other, (int, float, mp.mpf)):
            other = BigComplex.make(other, self.precision)
        if not isinstance(other, BigComplex):
            return NotImplemented
        prec = max(self.precision, other.precision)
        with mp.workprec(prec):
            z = op(self.to_mpc(), other.to_mpc())
        return BigComplex(+z.real, +z.imag, prec)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __neg__(self) -> BigComplex:
        return BigComplex(-self.re, -self.im, self.precision)

    def __abs__(self) -> mp.mpf:
        with mp.workprec(self.precision):
            return +abs(self.to_mpc())

    def scale_int(self, c: int) -> BigComplex:
        with mp.workprec(self.precision):
            return BigComplex(+(self.re * c), +(self.im * c), self.precision)

    def reciprocal(self) -> BigComplex:
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        with mp.workprec(self.precision):
            z = 1 / self.to_mpc()
        return BigComplex(+z.real, +z.imag, self.precision)

    def int_pow(self, e: int) -> BigComplex:
        """self**e for e >= 0 by binary powering."""
        if e < 0:
            raise ValueError("int_pow takes a nonnegative exponent")
        with mp.workprec(self.precision):
            result = mp.mpc(1)
            base = self.to_mpc()
            n = e
            while n:
                if n & 1:
                    result *= base
                base *= base
                n >>= 1
        return BigComplex(+result.real, +result.imag, self.precision)

    def log(self) -> BigComplex:
        """Principal-branch complex logarithm."""
        with mp.workprec(self.precision):
            z = mp.log(self.to_mpc())
        return BigComplex(+z.real, +z.imag, self.precision)

    def distance(self, other: BigComplex) -> mp.mpf:
        return abs(self - other)


def exp_i_pi(num: int, den: int, precision: int) -> BigComplex:
    """exp(i*pi*num/den) with the angle reduced exactly in integers.

    Multiples of pi/2 come out exact (so schedules landing on 1, i, -1, -i
    really produce them), everything else is rounded at `precision`.
    """
    if den == 0:
        raise ZeroDivisionError("exp_i_pi with zero denominator")
    if den < 0:
        num, den = -num, -den
    r = num % (2 * den)
    with mp.workprec(precision):
        zero = mp.mpf(0)
        one = mp.mpf(1)
        if r % den == 0:
            return BigComplex(one if r == 0 else -one, zero, precision)
        if 2 * r == den:
            return BigComplex(zero, one, precision)
        if 2 * r == 3 * den:
            return BigComplex(zero, -one, precision)
        t = mp.mpf(r) / den
        return BigComplex(+mp.cospi(t), +mp.sinpi(t), precision)


def sin_pi_frac(num: int, den: int, precision: int) -> mp.mpf:
    """sin(pi*num/den) with exact zeros at integer multiples of pi."""
    if den == 0:
        raise ZeroDivisionError("sin_pi_frac with zero denominator")
    if den < 0:
        num, den = -num, -den
    r = num % (2 * den)
    with mp.workprec(precision):
        if r % den == 0:
            return mp.mpf(0)
        if 2 * r == den:
            return mp.mpf(1)
        if 2 * r == 3 * den:
            return mp.mpf(-1)
        return +mp.sinpi(mp.mpf(r) / den)
