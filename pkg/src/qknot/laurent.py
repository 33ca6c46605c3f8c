"""Exact arithmetic in Z[q, q^-1], the integer Laurent ring in one variable.

Polynomials are kept in canonical sparse form (exponent -> nonzero
coefficient), so structural equality is semantic equality.  All values are
immutable after construction and every operation is a pure function.
"""
from __future__ import annotations

import json
from typing import Iterable, Mapping

from .bigcomplex import BigComplex
from .errors import NotDivisibleError, ZeroPointError


class LaurentPoly:
    """A Laurent polynomial with arbitrary-precision integer coefficients.

    >>> q = LaurentPoly.q()
    >>> print((q - q**-1) * (q + q**-1))
    q^2 - q^-2
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        data: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                if not isinstance(exp, int) or isinstance(exp, bool):
                    raise TypeError(f"exponent must be int, got {exp!r}")
                if not isinstance(coeff, int) or isinstance(coeff, bool):
                    raise TypeError(f"coefficient must be int, got {coeff!r}")
                if coeff:
                    c = data.get(exp, 0) + coeff
                    if c:
                        data[exp] = c
                    else:
                        data.pop(exp, None)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_int(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    # -- basic queries -----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def degree(self) -> int:
        """Largest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        """Smallest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly()
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if not isinstance(exponent, int):
            raise TypeError("exponent must be int")
        if exponent < 0:
            if len(self._terms) == 1:
                ((e, c),) = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * exponent: c if exponent % 2 else 1})
            raise ValueError("negative powers are defined for unit monomials only")
        result = LaurentPoly.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert_q(self) -> LaurentPoly:
        """Substitute q -> q^-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- exact division ----------------------------------------------------

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Return c with self = divisor * c, exactly in Z[q, q^-1].

        Both operands are shifted by a power of q into ordinary polynomials
        with nonzero constant term; integer long division must then leave a
        zero remainder.  Raises ZeroDivisionError for a zero divisor and
        NotDivisibleError when no integral quotient exists.
        """
        if not isinstance(divisor, LaurentPoly):
            divisor = _coerce(divisor)
            if divisor is NotImplemented:
                raise TypeError("divisor must be a LaurentPoly or int")
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        va, vb = self.valuation(), divisor.valuation()
        num = _dense(self._terms, va)
        den = _dense(divisor._terms, vb)
        if len(num) < len(den):
            raise NotDivisibleError("dividend degree is below divisor degree")
        lead = den[-1]
        rem = list(num)
        quot = [0] * (len(num) - len(den) + 1)
        for i in range(len(quot) - 1, -1, -1):
            top = rem[i + len(den) - 1]
            if top == 0:
                continue
            c, r = divmod(top, lead)
            if r:
                raise NotDivisibleError(
                    "leading coefficient not divisible at step "
                    f"{i}: {top} by {lead}"
                )
            quot[i] = c
            for j, d in enumerate(den):
                rem[i + j] -= c * d
        if any(rem):
            raise NotDivisibleError("nonzero remainder", remainder=_from_dense(rem, va))
        return _from_dense(quot, va - vb)

    def divides(self, other: LaurentPoly) -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisibleError:
            return False

    # -- evaluation --------------------------------------------------------

    def eval_at(self, z: BigComplex) -> BigComplex:
        """Sum coeff * z^exponent at the precision of z.

        Exponents are evaluated by binary powering; negative exponents go
        through the reciprocal of z, so z = 0 is rejected whenever a
        negative exponent is present.
        """
        if not self._terms:
            return BigComplex.from_int(0, z.precision)
        if z.is_zero():
            if any(e < 0 for e in self._terms):
                raise ZeroPointError("evaluation at 0 with negative exponents")
            return BigComplex.from_int(self._terms.get(0, 0), z.precision)
        acc = BigComplex.from_int(0, z.precision)
        zinv = None
        for e in sorted(self._terms):
            c = self._terms[e]
            if e >= 0:
                p = z.int_pow(e)
            else:
                if zinv is None:
                    zinv = z.reciprocal()
                p = zinv.int_pow(-e)
            acc = acc + p.scale_int(c)
        return acc

    # -- serialization -----------------------------------------------------

    def to_pairs(self) -> list[list]:
        """Association list [[exponent, "coefficient"], ...], exponents ascending."""
        return [[e, str(self._terms[e])] for e in sorted(self._terms)]

    @classmethod
    def from_pairs(cls, pairs) -> LaurentPoly:
        terms: dict[int, int] = {}
        for item in pairs:
            if len(item) != 2:
                raise ValueError(f"bad serialized term {item!r}")
            exp, coeff = item
            exp = int(exp)
            coeff = int(coeff)
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} in serialized polynomial")
            if coeff:
                terms[exp] = coeff
        return cls(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_pairs(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_pairs(json.loads(text))

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _wrap(terms: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly()
    object.__setattr__(p, "_terms", terms)
    return p


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return LaurentPoly({0: value}) if value else LaurentPoly()
    return NotImplemented


def _dense(terms: Mapping[int, int], shift: int) -> list[int]:
    out = [0] * (max(terms) - shift + 1)
    for e, c in terms.items():
        out[e - shift] = c
    return out


def _from_dense(coeffs: list[int], shift: int) -> LaurentPoly:
    return LaurentPoly({i + shift: c for i, c in enumerate(coeffs) if c})
