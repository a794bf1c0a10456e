"""Closed-form Hilbert polynomials for the standard families of Fano manifolds.

Each generator returns a validated :class:`HilbertPolynomial` for the
fundamental divisor H.  The family-specific reducibility criteria (the
discriminant of the del Pezzo and Mukai quadratic factors, the threefold
square condition and the three fourfold square conditions) live here too,
so the generic root machinery can be cross-checked against them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .exactq import UniPoly, rational_sqrt, rational_str
from .hilbert import (
    HilbertDataError,
    HilbertPolynomial,
    from_h0,
    from_polynomial,
    ladder_poly,
    uncenter,
)


class OutsideClassificationWarning(UserWarning):
    """Parameters outside the range where the family actually exists."""


def projective_space(n: int) -> HilbertPolynomial:
    if n < 1:
        raise HilbertDataError("projective space needs n >= 1")
    P = ladder_poly(n + 1) / math.factorial(n)
    return from_polynomial(P, n, n + 1)


def quadric(n: int) -> HilbertPolynomial:
    if n < 2:
        raise HilbertDataError("quadric needs n >= 2")
    P = UniPoly([Fraction(n, 2), 1]) * ladder_poly(n) * Fraction(2, math.factorial(n))
    return from_polynomial(P, n, n)


# ---------------------------------------------------------------------------
# del Pezzo manifolds: iota = n - 1

_DEL_PEZZO_MAX_D = {3: 8, 4: 6, 5: 5, 6: 5}


@dataclass(frozen=True)
class DelPezzoData:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 3:
            raise HilbertDataError("del Pezzo data needs n >= 3 (use surface_from_K2 for n = 2)")
        if self.d < 1:
            raise HilbertDataError("degree d must be positive")

    @property
    def max_degree(self) -> int:
        return _DEL_PEZZO_MAX_D.get(self.n, 4)

    @property
    def in_classification(self) -> bool:
        return self.d <= self.max_degree


def del_pezzo_discriminant(n: int, d: int) -> Fraction:
    """Discriminant of z^2 + (n-1) z + n(n-1)/d."""
    return Fraction(n - 1, d) * ((n - 1) * d - 4 * n)


def del_pezzo_quadratic(n: int, d: int) -> UniPoly:
    return UniPoly([Fraction(n * (n - 1), d), n - 1, 1])


def del_pezzo(data: DelPezzoData) -> tuple[HilbertPolynomial, Fraction]:
    n, d = data.n, data.d
    if not data.in_classification:
        warnings.warn(
            f"no del Pezzo {n}-fold of degree {d} exists (d <= {data.max_degree} required)",
            OutsideClassificationWarning,
            stacklevel=2,
        )
    nf = math.factorial(n)
    quad = UniPoly([Fraction(1, math.factorial(n - 2)), Fraction((n - 1) * d, nf), Fraction(d, nf)])
    hp = from_polynomial(quad * ladder_poly(n - 1), n, n - 1)
    return hp, del_pezzo_discriminant(n, d)


# ---------------------------------------------------------------------------
# Mukai manifolds: iota = n - 2


@dataclass(frozen=True)
class MukaiData:
    """``d`` is H^n = (-K/(n-2))^n = 2g - 2."""

    n: int
    d: int
    g: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise HilbertDataError("Mukai data needs n >= 3")
        if self.d < 2 or self.d % 2:
            raise HilbertDataError(f"H^n = 2g - 2 must be a positive even integer, got {self.d}")
        if self.g is not None and genus_degree(self.g) != self.d:
            raise HilbertDataError(f"genus {self.g} gives H^n = {2 * self.g - 2}, not {self.d}")

    @property
    def anticanonical_degree(self) -> int:
        """(-K)^n = d (n-2)^n."""
        return self.d * (self.n - 2) ** self.n


def genus_degree(g: int) -> int:
    if g < 2:
        raise HilbertDataError("sectional genus must be at least 2")
    return 2 * g - 2


def mukai_discriminant(n: int, d: int) -> Fraction:
    """1 - 8n(n-1)(n-2)^(n-2) / (-K)^n with (-K)^n = d (n-2)^n."""
    return 1 - Fraction(8 * n * (n - 1), d * (n - 2) ** 2)


def mukai_coefficients(n: int, d: int) -> tuple[Fraction, ...]:
    """a_0..a_3 of the cubic factor R."""
    nf = math.factorial(n)
    return (
        Fraction(1, math.factorial(n - 3)),
        Fraction(d * (n - 2) ** 2, 2 * nf) + Fraction(2 * n * (n - 1), nf),
        Fraction(3 * d * (n - 2), 2 * nf),
        Fraction(d, nf),
    )


def _mukai_factored(n: int, d: int) -> UniPoly:
    delta = mukai_discriminant(n, d)
    quad = UniPoly([(n - 2) ** 2 * (1 - delta) / 4, n - 2, 1])
    lin = UniPoly([Fraction(n - 2, 2), 1])
    return quad * lin * ladder_poly(n - 2) * Fraction(d, math.factorial(n))


def mukai(data: MukaiData) -> tuple[HilbertPolynomial, Fraction]:
    n, d = data.n, data.d
    R = UniPoly(mukai_coefficients(n, d))
    P = R * ladder_poly(n - 2)
    other = _mukai_factored(n, d)
    if P != other:  # pragma: no cover - the two forms are identical
        raise AssertionError(f"Mukai constructions disagree for n={n}, d={d}")
    return from_polynomial(P, n, n - 2), mukai_discriminant(n, d)


# ---------------------------------------------------------------------------
# low dimension from intersection numbers

SURFACE_PAIRS = ((9, 3), (8, 2)) + tuple((k, 1) for k in range(1, 9))


def surface_from_K2(K2: int, iota: int) -> HilbertPolynomial:
    """del Pezzo surface of degree K2 polarized by its fundamental divisor."""
    if (K2, iota) not in SURFACE_PAIRS:
        raise HilbertDataError(f"no del Pezzo surface with K^2 = {K2} and index {iota}")
    Q = UniPoly([-Fraction(K2 - 8, 8), 0, Fraction(K2, 2 * iota * iota)])
    return from_polynomial(uncenter(Q, iota), 2, iota)


def threefold_from_K3(mK3: int, iota: int) -> HilbertPolynomial:
    """Fano threefold with (-K)^3 = mK3, via Riemann-Roch with c_2 . K = -24."""
    if mK3 < 1:
        raise HilbertDataError("(-K)^3 must be positive")
    if not 1 <= iota <= 4:
        raise HilbertDataError(f"index of a Fano threefold is 1..4, got {iota}")
    if mK3 % 2:
        raise HilbertDataError(f"(-K)^3 of a Fano threefold is even, got {mK3}")
    if mK3 % iota**3:
        raise HilbertDataError(f"(-K)^3 = {mK3} is not divisible by iota^3 = {iota**3}")
    s = Fraction(1, 24 * iota**3)
    Q = UniPoly([0, -s * iota**2 * (mK3 - 48), 0, s * 4 * mK3])
    return from_polynomial(uncenter(Q, iota), 3, iota)


def threefold_condition(mK3: int) -> Fraction:
    """1 - 48/(-K)^3: P splits over Q iff this is a rational square, over R iff >= 0."""
    return 1 - Fraction(48, mK3)


@dataclass(frozen=True)
class ChernData4:
    k: int  # K^4
    h: int  # c_2 . K^2
    iota: int = 1

    def __post_init__(self):
        if self.k <= 0:
            raise HilbertDataError("K^4 must be positive for a Fano fourfold")
        if not 1 <= self.iota <= 5:
            raise HilbertDataError(f"index of a Fano fourfold is 1..5, got {self.iota}")
        if self.k % self.iota**4:
            raise HilbertDataError(f"K^4 = {self.k} is not divisible by iota^4 = {self.iota**4}")


def fourfold_from_chern(data: ChernData4) -> HilbertPolynomial:
    k, h, i = data.k, data.h, data.iota
    s = Fraction(1, 384 * i**4)
    Q = UniPoly([s * i**4 * (k - 4 * h + 384), 0, s * 8 * i * i * (2 * h - k), 0, s * 16 * k])
    return from_polynomial(uncenter(Q, i), 4, i)


@dataclass(frozen=True)
class FourfoldConditions:
    alpha_sq: Fraction
    alpha: Fraction | None
    beta_sq: Fraction | None
    gamma_sq: Fraction | None
    q_reducible: bool
    r_reducible: bool

    def to_json(self) -> dict:
        def s(x):
            return None if x is None else rational_str(x)

        return {
            "alpha_sq": s(self.alpha_sq),
            "alpha": s(self.alpha),
            "beta_sq": s(self.beta_sq),
            "gamma_sq": s(self.gamma_sq),
            "beta": s(rational_sqrt(self.beta_sq)) if self.beta_sq is not None else None,
            "gamma": s(rational_sqrt(self.gamma_sq)) if self.gamma_sq is not None else None,
            "q_reducible": self.q_reducible,
            "r_reducible": self.r_reducible,
        }


def fourfold_conditions(k: int, h: int) -> FourfoldConditions:
    """The three rational-square conditions on (K^4, c_2 . K^2)."""
    if k <= 0:
        raise HilbertDataError("K^4 must be positive")
    D = Fraction(h * h - 96 * k)
    # k >= 2h + 2 sqrt(D), decided without square roots
    r_ok = D >= 0 and k - 2 * h >= 0 and (k - 2 * h) ** 2 >= 4 * D
    alpha = rational_sqrt(D)
    if alpha is None:
        return FourfoldConditions(D, None, None, None, False, r_ok)
    beta_sq = Fraction(k - 2 * h + 2 * alpha, k)
    gamma_sq = Fraction(k - 2 * h - 2 * alpha, k)
    q_ok = rational_sqrt(beta_sq) is not None and rational_sqrt(gamma_sq) is not None
    return FourfoldConditions(D, alpha, beta_sq, gamma_sq, q_ok, r_ok)


# ---------------------------------------------------------------------------
# Fano bundles over P^m of rank m (n = 2m - 1, iota = m)


def bundle_case2_h0(m: int, t: int) -> int:
    """h0 of S^t E for E = O(1)^(m-1) + O(2) on P^m."""
    if m < 2 or t < 0:
        raise ValueError("need m >= 2 and t >= 0")
    return sum(math.comb(t - j + m - 2, m - 2) * math.comb(t + j + m, m) for j in range(t + 1))


def bundle_case2_poly(m: int) -> HilbertPolynomial:
    h0 = [bundle_case2_h0(m, t) for t in range(m + 1)]
    return from_h0(2 * m - 1, m, h0)


def bundle_case13_poly(m: int) -> HilbertPolynomial:
    """Shared closed form for P(T_{P^m}) and the null-correlation-type case."""
    if m < 2:
        raise ValueError("need m >= 2")
    lad = ladder_poly(m)
    P = UniPoly([Fraction(m, 2), 1]) * lad * lad * Fraction(2, math.factorial(m) * math.factorial(m - 1))
    return from_polynomial(P, 2 * m - 1, m)
