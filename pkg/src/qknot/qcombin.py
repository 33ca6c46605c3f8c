"""Quantum integers, factorials, balanced binomials and the coefficient
families of the cyclotomic expansion.

Everything here is exact Laurent-polynomial arithmetic; nothing is ever
approximated in floating point.  The memo tables are only ever extended
(lru_cache), so concurrent readers stay consistent.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotDivisibleError
from .laurent import LaurentPoly


@dataclass(frozen=True)
class CoeffQuery:
    """Validated (color N, depth k, rank n) triple for coefficient lookups."""

    N: int
    k: int
    n: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError(f"color must be >= 0, got {self.N}")
        if not 0 <= self.k <= self.N:
            raise ValueError(f"depth must satisfy 0 <= k <= N, got k={self.k}, N={self.N}")
        if self.n < 2:
            raise ValueError(f"rank must be >= 2, got {self.n}")


def qint(m: int) -> LaurentPoly:
    """The quantum integer q^m - q^-m; odd in m, zero at m = 0."""
    if m == 0:
        return LaurentPoly.zero()
    return LaurentPoly({m: 1, -m: -1})


@lru_cache(maxsize=None)
def qfact(k: int) -> LaurentPoly:
    """Quantum factorial: the product of quantum integers 1..k, with qfact(0) = 1."""
    if k < 0:
        raise ValueError(f"quantum factorial needs k >= 0, got {k}")
    if k == 0:
        return LaurentPoly.one()
    return qfact(k - 1) * qint(k)


@lru_cache(maxsize=None)
def qbinom_shifted(n: int, k: int) -> LaurentPoly:
    """Balanced quantum binomial qfact(n-2+k) / (qfact(k) * qfact(n-2)).

    The quotient always lands back in the Laurent ring; a NotDivisibleError
    escaping from here would mean an arithmetic bug, so it is not caught.
    For n = 2 this is 1 for every k.
    """
    if n < 2:
        raise ValueError(f"rank must be >= 2, got {n}")
    if k < 0:
        raise ValueError(f"depth must be >= 0, got {k}")
    return qfact(n - 2 + k).exact_div(qfact(k) * qfact(n - 2))


@lru_cache(maxsize=None)
def cyclo_coeff(N: int, k: int, n: int) -> LaurentPoly:
    """Expansion coefficient: product of [N-j] and [N+n+j] for j = 0..k-1."""
    CoeffQuery(N, k, n)
    if k == 0:
        return LaurentPoly.one()
    return cyclo_coeff(N, k - 1, n) * qint(N - (k - 1)) * qint(N + n + (k - 1))


@lru_cache(maxsize=None)
def habiro_coeff(N: int, k: int) -> LaurentPoly:
    """Rank-two coefficient basis: product over j = 1..k of
    q^(2N) + q^(-2N) - q^(2j) - q^(-2j)."""
    if N < 1:
        raise ValueError(f"color index must be >= 1, got {N}")
    if not 0 <= k <= N:
        raise ValueError(f"depth must satisfy 0 <= k <= N, got k={k}, N={N}")
    if k == 0:
        return LaurentPoly.one()
    factor = LaurentPoly({2 * N: 1, -2 * N: 1}) - LaurentPoly({2 * k: 1, -2 * k: 1})
    return habiro_coeff(N, k - 1) * factor


@lru_cache(maxsize=None)
def tilde_coeff(N: int, k: int, n: int) -> LaurentPoly:
    """cyclo_coeff divided exactly by qfact(k).

    Laurent-integrality of this family is conjectural; NotDivisibleError is
    the reportable "counterexample found" outcome, not a crash.
    """
    CoeffQuery(N, k, n)
    if k == 0:
        return LaurentPoly.one()
    try:
        return cyclo_coeff(N, k, n).exact_div(qfact(k))
    except NotDivisibleError as exc:
        raise NotDivisibleError(
            f"tilde coefficient not Laurent-integral at N={N}, k={k}, n={n}"
        ) from exc
