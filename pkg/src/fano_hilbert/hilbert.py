"""Hilbert polynomials of Fano manifolds polarized by the fundamental divisor.

For a Fano n-fold of index ``iota`` and coindex ``c = n + 1 - iota`` the
Hilbert polynomial in ``z`` factors as::

    P(z) = R(z) * (z + 1)(z + 2)...(z + iota - 1),    deg R = c,

and the coefficients of ``R`` are fixed by the values h0(tH), t = 0..c,
divided by ``delta(t) = (t + iota - 1)! / t!``.  That system is a Vandermonde
system at the nodes 0..c, i.e. plain polynomial interpolation.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactq import (
    UniPoly,
    as_rational,
    int_eval,
    int_mul,
    poly_compose_linear,
    poly_divmod,
    primitive_integer_form,
    rational_str,
)


class HilbertDataError(ValueError):
    """Input data that cannot come from a polarized Fano manifold."""


@functools.lru_cache(maxsize=512)
def ladder_poly(iota: int) -> UniPoly:
    """The forced factor (z+1)(z+2)...(z+iota-1)."""
    p = UniPoly.constant(1)
    for j in range(1, iota):
        p = p * UniPoly([j, 1])
    return p


@dataclass(frozen=True)
class HilbertPolynomial:
    P: UniPoly
    n: int
    iota: int
    r_factor: UniPoly
    ladder: tuple[int, ...]

    @property
    def coindex(self) -> int:
        return self.n + 1 - self.iota

    @property
    def degree_Hn(self) -> Fraction:
        """H^n, read off the leading coefficient."""
        return self.P.lead * math.factorial(self.n)

    @property
    def anticanonical_degree(self) -> Fraction:
        """(-K)^n = iota^n H^n."""
        return self.degree_Hn * self.iota**self.n

    def values(self, upto: int | None = None) -> list[Fraction]:
        upto = self.coindex if upto is None else upto
        content, prim = primitive_integer_form(self.P)
        return [content * int_eval(prim, t) for t in range(upto + 1)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "iota": self.iota,
            "coindex": self.coindex,
            "coeffs": self.P.to_json(),
            "r_factor": self.r_factor.to_json(),
            "ladder": [rational_str(Fraction(x)) for x in self.ladder],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HilbertPolynomial":
        return from_polynomial(UniPoly.from_json(data["coeffs"]), int(data["n"]), int(data["iota"]))


@dataclass(frozen=True)
class H0Vector:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        if not vals:
            raise HilbertDataError("empty h0 vector")
        for v in vals:
            if isinstance(v, bool) or not isinstance(v, int):
                raise HilbertDataError(f"h0 entries must be integers, got {v!r}")
            if v < 0:
                raise HilbertDataError(f"h0 entries must be nonnegative, got {v}")
        if vals[0] != 1:
            raise HilbertDataError(f"h0(O_X) must be 1 for a Fano manifold, got {vals[0]}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> "H0Vector":
        try:
            vals = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
        except ValueError as exc:
            raise HilbertDataError(f"malformed h0 vector {text!r}") from exc
        return cls(vals)

    def __len__(self) -> int:
        return len(self.values)


def _check_dims(n: int, iota: int) -> None:
    if n < 1:
        raise HilbertDataError(f"dimension must be positive, got {n}")
    if not 1 <= iota <= n + 1:
        raise HilbertDataError(f"index must satisfy 1 <= iota <= n+1, got iota={iota}, n={n}")


def delta(t: int, iota: int) -> Fraction:
    """(t + iota - 1)! / t!, the value of the ladder product at z = t."""
    if t < 0 or iota < 1:
        raise ValueError("delta needs t >= 0 and iota >= 1")
    out = 1
    for j in range(t + 1, t + iota):
        out *= j
    return Fraction(out)


def interpolate_R(c: int, rhs: Sequence) -> tuple[Fraction, ...]:
    """Coefficients a_0..a_c with sum_j a_j t^j = rhs[t] for t = 0..c.

    Newton form at the unit nodes: the k-th divided difference is the k-th
    forward difference over k!.  Everything runs on integers after clearing
    the common denominator of ``rhs``.
    """
    if c < 0:
        raise ValueError("degree must be nonnegative")
    if len(rhs) != c + 1:
        raise ValueError(f"interpolation at {c + 1} nodes needs {c + 1} values, got {len(rhs)}")
    ys = [as_rational(y) for y in rhs]
    den = 1
    for y in ys:
        den = den * y.denominator // math.gcd(den, y.denominator)
    diffs = [y.numerator * (den // y.denominator) for y in ys]
    leading = []
    for _ in range(c + 1):
        leading.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    cfact = math.factorial(c)
    acc = [0] * (c + 1)
    falling = [1]
    kfact = 1
    for k, dk in enumerate(leading):
        if k:
            kfact *= k
            falling = int_mul(falling, [-(k - 1), 1])
        if dk:
            w = dk * (cfact // kfact)
            for i, fc in enumerate(falling):
                acc[i] += w * fc
    scale = Fraction(1, den * cfact)
    return tuple(Fraction(x) * scale for x in acc)


def assemble(r_coeffs: Sequence, n: int, iota: int) -> HilbertPolynomial:
    """Build P = (sum a_j z^j) * prod_{j=1}^{iota-1} (z + j) and validate it."""
    _check_dims(n, iota)
    c = n + 1 - iota
    if len(r_coeffs) != c + 1:
        raise HilbertDataError(
            f"expected n+2-iota = {c + 1} coefficients of R for n={n}, iota={iota}, got {len(r_coeffs)}"
        )
    R = UniPoly(r_coeffs)
    if R.degree != c:
        raise HilbertDataError(f"R must have degree {c} (leading coefficient nonzero)")
    P = R * ladder_poly(iota)
    if P(0) != 1:
        raise HilbertDataError(f"not a Fano Hilbert polynomial: P(0) = {rational_str(P(0))}")
    if P.lead <= 0:
        raise HilbertDataError("not a Fano Hilbert polynomial: leading coefficient must be positive")
    return HilbertPolynomial(P, n, iota, R, tuple(-j for j in range(1, iota)))


def from_polynomial(P: UniPoly, n: int, iota: int) -> HilbertPolynomial:
    """Wrap a closed-form P, splitting off the forced linear factors."""
    _check_dims(n, iota)
    if P.degree != n:
        raise HilbertDataError(f"degree of P is {P.degree}, expected n = {n}")
    R, rem = poly_divmod(P, ladder_poly(iota))
    if not rem.is_zero():
        raise HilbertDataError(f"P is not divisible by (z+1)...(z+{iota - 1})")
    return assemble(R.coeffs, n, iota)


def from_h0(n: int, iota: int, h0: H0Vector | Sequence[int]) -> HilbertPolynomial:
    if not isinstance(h0, H0Vector):
        h0 = H0Vector(tuple(h0))
    _check_dims(n, iota)
    c = n + 1 - iota
    if len(h0) != c + 1:
        raise HilbertDataError(f"need h0(tH) for t = 0..{c} ({c + 1} values), got {len(h0)}")
    rhs = [Fraction(v) / delta(t, iota) for t, v in enumerate(h0.values)]
    return assemble(interpolate_R(c, rhs), n, iota)


def h0_vector_of(hp: HilbertPolynomial) -> H0Vector:
    """P(0..c) as an H0Vector; fails if P is not integer valued there."""
    vals = []
    for v in hp.values():
        if v.denominator != 1:
            raise HilbertDataError(f"P takes the non-integral value {v} at a node")
        vals.append(int(v))
    return H0Vector(tuple(vals))


def serre_reflect(hp: HilbertPolynomial) -> UniPoly:
    """(-1)^n P(-z - iota)."""
    Q = poly_compose_linear(hp.P, -1, -hp.iota)
    return -Q if hp.n % 2 else Q


def center(hp: HilbertPolynomial) -> UniPoly:
    """Q(w) = P(w - iota/2)."""
    return poly_compose_linear(hp.P, 1, Fraction(-hp.iota, 2))


def uncenter(Q: UniPoly, iota: int) -> UniPoly:
    """Inverse of :func:`center`: P(z) = Q(z + iota/2)."""
    return poly_compose_linear(Q, 1, Fraction(iota, 2))


def product(hp1: HilbertPolynomial, hp2: HilbertPolynomial) -> HilbertPolynomial:
    """Hilbert polynomial of X1 x X2 polarized by the exterior product of the H's.

    Only defined for equal indices; mixed products go through plain
    polynomial multiplication with caller-chosen (n, iota).
    """
    if hp1.iota != hp2.iota:
        raise HilbertDataError(
            f"product not uniformly polarized: indices {hp1.iota} and {hp2.iota} differ"
        )
    return from_polynomial(hp1.P * hp2.P, hp1.n + hp2.n, hp1.iota)


def hyperplane_section(hp: HilbertPolynomial) -> HilbertPolynomial:
    """Smooth member of |H|: P_X(z) = P(z) - P(z - 1), index drops by one."""
    if hp.iota < 2:
        raise HilbertDataError("section not Fano with this polarization (iota = 1)")
    if hp.n < 2:
        raise HilbertDataError("hyperplane section of a curve is zero-dimensional")
    P = hp.P - poly_compose_linear(hp.P, 1, -1)
    return from_polynomial(P, hp.n - 1, hp.iota - 1)
