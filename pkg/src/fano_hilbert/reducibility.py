"""Total reducibility over Q and R, the canonical-strip checker and Hilbert-curve lines.

Everything that decides a verdict is exact.  Rational roots come from the
rational root theorem: candidates are enumerated directly when the
constant and leading coefficients of the primitive form are small, and
otherwise recovered by lifting roots modulo a prime and reconstructing the
fraction (every candidate is confirmed by exact evaluation either way).
Real-root counts use a sign-change certificate at exact sample points and
fall back on Sturm chains.  Floating point only enters :func:`numeric_roots`
and the strip check built on it.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .exactq import (
    IntPoly,
    UniPoly,
    exact_quotient,
    int_derivative,
    int_eval_homogeneous,
    int_exact_div,
    int_gcd,
    int_primitive,
    int_sign_at,
    int_signed_prem,
    poly_gcd,
    primitive_integer_form,
    rational_sqrt,
    rational_str,
)
from .hilbert import (
    HilbertPolynomial,
    center,
    from_h0,
    h0_vector_of,
    ladder_poly,
    serre_reflect,
)

DEFAULT_TOL = Fraction(1, 10**20)
DEFAULT_DPS = 60
MAX_SWEEPS = 200

# divisor enumeration is used when both |a_0| and |a_n| stay below this
_DIVISOR_LIMIT = 10**8


def default_dps() -> int:
    """Working precision in decimal digits; FANO_HILBERT_DPS overrides."""
    return int(os.environ.get("FANO_HILBERT_DPS", DEFAULT_DPS))


class RootFindingError(RuntimeError):
    """Simultaneous iteration did not reach the requested radius."""

    def __init__(self, message: str, best: list):
        super().__init__(message)
        self.best = best


# ---------------------------------------------------------------------------
# arithmetic modulo a small prime


def _primes_from(start: int):
    k = max(start, 2)
    while True:
        if k < 4 or all(k % d for d in range(2, math.isqrt(k) + 1)):
            yield k
        k += 1


def _trim_mod(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem_mod(a: list, b: list, p: int) -> list:
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim_mod(a)
    return a


def _gcd_degree_mod(a: list, b: list, p: int) -> int:
    a, b = _trim_mod(list(a)), _trim_mod(list(b))
    while b:
        a, b = b, _rem_mod(a, b, p)
    return len(a) - 1


def _squarefree_mod(f: Sequence[int], p: int) -> bool:
    fp = [c % p for c in f]
    dp = [c % p for c in int_derivative(f)]
    if not _trim_mod(dp):
        return False
    return _gcd_degree_mod(fp, dp, p) == 0


def _certify_squarefree(f: Sequence[int], attempts: int = 8) -> bool:
    """True when f is squarefree modulo a prime not dividing its lead.

    A repeated factor over Q survives reduction modulo any such prime, so a
    single success certifies squarefreeness; failure proves nothing.
    """
    lead = f[-1]
    tried = 0
    for p in _primes_from(1009):
        if lead % p == 0:
            continue
        if _squarefree_mod(f, p):
            return True
        tried += 1
        if tried >= attempts:
            return False
    return False  # pragma: no cover


def _eval_mod(f: Sequence[int], x: int, M: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % M
    return acc


def _roots_mod(f: Sequence[int], p: int) -> list[int]:
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(f):
        acc = (acc * xs + (c % p)) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


# ---------------------------------------------------------------------------
# squarefree parts


def _int_squarefree_part(f: IntPoly) -> IntPoly:
    if len(f) <= 2 or _certify_squarefree(f):
        return list(f)
    g = int_gcd(f, int_derivative(f))
    if len(g) == 1:
        return list(f)
    q = int_exact_div([c * g[-1] ** (len(f) - len(g) + 1) for c in f], g)
    return int_primitive(q)


def squarefree_part(p: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return UniPoly.constant(1)
    _, f = primitive_integer_form(p)
    s = _int_squarefree_part(f)
    return UniPoly.from_int(s, Fraction(1, s[-1]))


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime factors with multiplicities."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    out: list[tuple[UniPoly, int]] = []
    if p.degree < 1:
        return out
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = exact_quotient(f, a)
    c = exact_quotient(df, a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# rational roots


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
    return small + large[::-1]


def _is_root(f: Sequence[int], u: int, v: int) -> bool:
    return int_eval_homogeneous(f, u, v) == 0


def _candidates_by_divisors(f: IntPoly) -> list[tuple[int, int]]:
    found = []
    for v in _divisors(f[-1]):
        for u in _divisors(f[0]):
            if math.gcd(u, v) != 1:
                continue
            for s in (u, -u):
                if _is_root(f, s, v):
                    found.append((s, v))
    return found


def _rational_reconstruct(r: int, M: int, N: int, D: int) -> tuple[int, int] | None:
    r0, r1 = M, r % M
    t0, t1 = 0, 1
    while r1 > N:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > D:
        return None
    u, v = r1, t1
    if v < 0:
        u, v = -u, -v
    if math.gcd(u, v) != 1:
        return None
    return u, v


def _candidates_by_lifting(f: IntPoly) -> list[tuple[int, int]]:
    """Rational roots of a squarefree primitive f with f(0) != 0.

    A root u/v in lowest terms has v | lead and u | f(0), so it reduces to a
    simple root modulo a prime p where f stays squarefree; Newton lifting to
    p^k > 2|f(0)||lead| determines u/v uniquely by rational reconstruction.
    """
    lead, const = f[-1], f[0]
    df = int_derivative(f)
    for tries, p in enumerate(_primes_from(1009)):
        if tries >= 500:
            raise ValueError("no prime keeps the polynomial squarefree; is it squarefree over Q?")
        if lead % p == 0 or not _squarefree_mod(f, p):
            continue
        break
    bound = 2 * abs(const) * abs(lead)
    found = []
    for r in _roots_mod(f, p):
        M = p
        while M <= bound:
            M = M * M
            inv = pow(_eval_mod(df, r, M), -1, M)
            r = (r - _eval_mod(f, r, M) * inv) % M
        cand = _rational_reconstruct(r, M, abs(const), abs(lead))
        if cand is not None and _is_root(f, *cand):
            found.append(cand)
    return found


def _distinct_rational_roots_int(f: IntPoly) -> list[tuple[int, int]]:
    """Distinct nonzero rational roots (u, v) of an integer polynomial with f(0) != 0."""
    if len(f) < 2:
        return []
    s = _int_squarefree_part(f)
    if len(s) == 2:
        g = math.gcd(s[0], s[1])
        u, v = -s[0] // g, s[1] // g
        if v < 0:
            u, v = -u, -v
        return [(u, v)]
    if abs(s[0]) <= _DIVISOR_LIMIT and abs(s[-1]) <= _DIVISOR_LIMIT:
        return _candidates_by_divisors(s)
    return _candidates_by_lifting(s)


def rational_roots(p: UniPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicity, sorted increasingly."""
    if p.is_zero():
        raise ValueError("zero polynomial has every number as a root")
    _, f = primitive_integer_form(p)
    out: list[tuple[Fraction, int]] = []
    k = 0
    while f[k] == 0:
        k += 1
    if k:
        out.append((Fraction(0), k))
        f = f[k:]
    for u, v in _distinct_rational_roots_int(f):
        mult = 0
        lin = [-u, v]
        while True:
            q = int_exact_div(f, lin)
            if q is None:
                break
            f = q
            mult += 1
        out.append((Fraction(u, v), mult))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# real roots


def sturm_sequence(p: UniPoly) -> list[IntPoly]:
    """Sturm chain of the squarefree part, each term scaled by a positive constant."""
    _, f = primitive_integer_form(p)
    f = _int_squarefree_part(f)
    seq = [f, int_primitive(int_derivative(f))]
    while len(seq[-1]) > 1:
        r = int_signed_prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(int_primitive([-c for c in r]))
    return seq


def _variations(signs: list[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def cauchy_bound(f: Sequence[int]) -> Fraction:
    return 1 + Fraction(max(abs(c) for c in f[:-1]), abs(f[-1]))


def sturm_distinct_real_roots(p: UniPoly) -> int:
    """Number of distinct real roots, by Sturm's theorem."""
    if p.is_zero() or p.degree < 1:
        raise ValueError("Sturm count needs a nonconstant polynomial")
    seq = sturm_sequence(p)
    B = cauchy_bound(seq[0])
    return _variations([int_sign_at(q, -B) for q in seq]) - _variations(
        [int_sign_at(q, B) for q in seq]
    )


def _real_root_lower_bound(f: IntPoly, num: int, den: int, lo: int, hi: int) -> int:
    """Roots certified by exact signs at the grid lo/den .. hi/den, step 1/den."""
    count = 0
    last = 0
    zero_since = False
    for k in range(lo, hi + 1):
        v = int_eval_homogeneous(f, k, den)
        s = (v > 0) - (v < 0)
        if s == 0:
            count += 1
            zero_since = True
            continue
        if last and s != last and not zero_since:
            count += 1
        last, zero_since = s, False
    return count


def _samuelson_window(f: IntPoly) -> tuple[Fraction, Fraction] | None:
    """Interval holding every root when all roots are real (None: not all real)."""
    d = len(f) - 1
    an, an1, an2 = f[-1], f[-2], f[-3] if d >= 2 else 0
    mean = Fraction(-an1, d * an)
    rad = Fraction(an1 * an1) - Fraction(2 * d * an * an2, d - 1) if d >= 2 else Fraction(0)
    if rad < 0:
        return None
    # rational upper estimate of the square root, padded by one unit
    num, den = rad.numerator, rad.denominator
    root = Fraction(math.isqrt(num * den) + 1, den)
    half = Fraction(d - 1, d) * root / abs(an) + 1
    return mean - half, mean + half


def certify_all_real(p: UniPoly, max_samples: int | None = None) -> bool:
    """Exact certificate that every root of the squarefree part is real.

    Counts sign changes of the polynomial at exact rational sample points;
    d disjoint sign changes for a degree-d squarefree polynomial account
    for all of its roots.  The sampling window only steers the search (a
    real-rooted polynomial has its roots inside it), so soundness never
    depends on it.  False means "not certified", not "has complex roots".
    """
    _, f = primitive_integer_form(p)
    f = _int_squarefree_part(f)
    d = len(f) - 1
    if d <= 1:
        return True
    window = _samuelson_window(f)
    if window is None:
        return False
    lo, hi = math.floor(window[0]), math.ceil(window[1])
    cap = max_samples or (64 * d + 512)
    den = 1
    while (hi - lo) * den + 1 <= cap:
        if _real_root_lower_bound(f, 0, den, lo * den, hi * den) >= d:
            return True
        den *= 2
    return False


def count_distinct_real_roots(p: UniPoly) -> int:
    if p.is_zero() or p.degree < 1:
        raise ValueError("real root count needs a nonconstant polynomial")
    if certify_all_real(p):
        return squarefree_part(p).degree
    return sturm_distinct_real_roots(p)


def totally_reducible_R(p: UniPoly) -> bool:
    """Every root of p is real."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return True
    if certify_all_real(p):
        return True
    return sturm_distinct_real_roots(p) == squarefree_part(p).degree


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ReducibilityReport:
    degree: int
    rational_roots: tuple[tuple[Fraction, int], ...]
    q_verdict: bool
    distinct_real_roots: int
    r_verdict: bool
    residual: UniPoly

    @property
    def rational_multiplicity(self) -> int:
        return sum(m for _, m in self.rational_roots)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "rational_roots": [
                {"root": rational_str(r), "mult": m} for r, m in self.rational_roots
            ],
            "q_verdict": self.q_verdict,
            "r_verdict": self.r_verdict,
            "distinct_real_roots": self.distinct_real_roots,
            "residual": self.residual.to_json(),
        }


def analyze(p: UniPoly) -> ReducibilityReport:
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = rational_roots(p)
    residual = p
    for r, m in roots:
        residual = exact_quotient(residual, UniPoly.linear(r) ** m)
    total = sum(m for _, m in roots)
    residual_real = count_distinct_real_roots(residual) if residual.degree > 0 else 0
    residual_sqf = squarefree_part(residual).degree if residual.degree > 0 else 0
    return ReducibilityReport(
        degree=p.degree,
        rational_roots=tuple(roots),
        q_verdict=total == p.degree,
        distinct_real_roots=len(roots) + residual_real,
        r_verdict=residual_real == residual_sqf,
        residual=residual,
    )


def totally_reducible_Q(p: UniPoly) -> tuple[bool, ReducibilityReport]:
    rep = analyze(p)
    return rep.q_verdict, rep


def integer_root_profile(hp: HilbertPolynomial) -> set[int]:
    """Integer roots of P.

    P = R * (z+1)...(z+iota-1) holds exactly, so only R needs a root search;
    the ladder contributes -1..-(iota-1), each confirmed by evaluation.
    """
    if hp.r_factor * ladder_poly(hp.iota) != hp.P:
        return {int(r) for r, _ in rational_roots(hp.P) if r.denominator == 1}
    out = {-j for j in range(1, hp.iota) if hp.P(-j) == 0}
    out.update(int(r) for r, _ in rational_roots(hp.r_factor) if r.denominator == 1)
    return out


# ---------------------------------------------------------------------------
# numerical roots


@dataclass(frozen=True)
class NumericRoot:
    value: complex  # mpmath.mpc
    radius: object  # mpmath.mpf, certified inclusion radius
    multiplicity: int

    def to_json(self, digits: int = 30) -> dict:
        im = self.value.imag
        if abs(im) <= self.radius:
            im = 0
        return {
            "re": mpmath.nstr(self.value.real, digits),
            "im": mpmath.nstr(im, digits),
            "radius": mpmath.nstr(self.radius, 5),
            "mult": self.multiplicity,
        }


def _aberth(ctx, coeffs: list, eps, sweeps: int = MAX_SWEEPS):
    """Simultaneous Aberth-Ehrlich iteration; coeffs low-to-high in ``ctx``."""
    d = len(coeffs) - 1
    lead = coeffs[-1]
    dcoeffs = [i * coeffs[i] for i in range(1, d + 1)]

    def horner(cs, x):
        acc = ctx.mpc(0)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    centroid = -coeffs[d - 1] / (d * lead)
    radius = max(
        (abs(coeffs[d - i] / lead) ** (ctx.mpf(1) / i) for i in range(1, d + 1)),
        default=ctx.mpf(1),
    )
    radius = max(radius, ctx.mpf(1))
    zs = [centroid + radius * ctx.expjpi(ctx.mpf(2 * k) / d + ctx.mpf("0.37")) for k in range(d)]
    for _ in range(sweeps):
        worst = ctx.mpf(0)
        for i in range(d):
            zi = zs[i]
            fz = horner(coeffs, zi)
            if fz == 0:
                continue
            ratio = fz / horner(dcoeffs, zi)
            s = ctx.fsum(1 / (zi - zs[j]) for j in range(d) if j != i)
            w = ratio / (1 - ratio * s)
            zs[i] = zi - w
            worst = max(worst, abs(w))
        if worst < eps:
            return zs, True
    return zs, False


def _inclusion_radii(ctx, coeffs, zs):
    d = len(coeffs) - 1
    lead = coeffs[-1]
    out = []
    for i, zi in enumerate(zs):
        fz = ctx.mpc(0)
        bound = ctx.mpf(0)
        for c in reversed(coeffs):
            fz = fz * zi + c
            bound = bound * abs(zi) + abs(c)
        # rounding error of Horner, so an exact zero still gets a nonzero radius
        fz = abs(fz) + 2 * (d + 1) * ctx.eps * bound
        prod = ctx.mpc(lead)
        for j, zj in enumerate(zs):
            if j != i:
                prod *= zi - zj
        out.append(d * fz / abs(prod) if prod != 0 else ctx.inf)
    return out


def _digits_for(tol: Fraction) -> int:
    return max(1, len(str(tol.denominator)) - len(str(tol.numerator)) + 1)


def numeric_roots(p: UniPoly, tol: Fraction = DEFAULT_TOL, dps: int | None = None) -> list[NumericRoot]:
    """All complex roots with certified inclusion radius <= tol.

    Multiplicities come from the exact squarefree decomposition; Aberth
    iteration only ever sees squarefree factors.
    """
    if p.is_zero() or p.degree < 1:
        raise ValueError("numeric_roots needs a nonconstant polynomial")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    ctx = mpmath.MPContext()
    ctx.dps = max(dps or default_dps(), _digits_for(tol) + 20)
    tol_mp = ctx.mpf(tol.numerator) / tol.denominator
    out: list[NumericRoot] = []
    for factor, mult in squarefree_decomposition(p):
        coeffs = [ctx.mpf(c.numerator) / c.denominator for c in factor.coeffs]
        if factor.degree == 1:
            root = -coeffs[0] / coeffs[1]
            out.append(NumericRoot(ctx.mpc(root), ctx.mpf(0), mult))
            continue
        zs, ok = _aberth(ctx, coeffs, tol_mp / (10 * factor.degree))
        radii = _inclusion_radii(ctx, coeffs, zs)
        if not ok or max(radii) > tol_mp:
            raise RootFindingError(
                f"Aberth iteration did not reach radius {float(tol):g} within {MAX_SWEEPS} sweeps",
                best=zs,
            )
        for z, rad in zip(zs, radii):
            out.append(NumericRoot(z, rad, mult))
    out.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    return out


# ---------------------------------------------------------------------------
# narrow canonical strip


@dataclass(frozen=True)
class StripVerdict:
    root: str
    multiplicity: int
    rescaled_real: str
    status: str  # "inside" | "boundary" | "outside"
    exact: bool
    radius: str = "0"

    def to_json(self) -> dict:
        return dict(self.__dict__)


def strip_bounds(n: int) -> tuple[Fraction, Fraction]:
    return Fraction(-n, n + 1), Fraction(-1, n + 1)


def strip_check(hp: HilbertPolynomial, tol: Fraction = DEFAULT_TOL, dps: int | None = None) -> list[StripVerdict]:
    """Locate each root of P_{-K}(z) = P(iota z) against the narrow canonical strip.

    Rational roots are compared exactly; the remaining ones numerically,
    with "boundary" meaning within ``tol`` of a wall.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("empty indeterminate zone not allowed")
    lo, hi = strip_bounds(hp.n)
    out = []
    residual = hp.P
    for r, m in rational_roots(hp.P):
        residual = exact_quotient(residual, UniPoly.linear(r) ** m)
        x = r / hp.iota
        if x == lo or x == hi:
            status = "boundary"
        elif lo < x < hi:
            status = "inside"
        else:
            status = "outside"
        out.append(StripVerdict(rational_str(r), m, rational_str(x), status, True))
    if residual.degree > 0:
        ctx = mpmath.MPContext()
        ctx.dps = max(dps or default_dps(), _digits_for(tol) + 20)
        lo_f, hi_f = ctx.mpf(lo.numerator) / lo.denominator, ctx.mpf(hi.numerator) / hi.denominator
        tol_f = ctx.mpf(tol.numerator) / tol.denominator
        for root in numeric_roots(residual, tol, dps):
            x = ctx.mpf(root.value.real) / hp.iota
            if abs(x - lo_f) < tol_f or abs(x - hi_f) < tol_f:
                status = "boundary"
            elif lo_f < x < hi_f:
                status = "inside"
            else:
                status = "outside"
            out.append(
                StripVerdict(
                    mpmath.nstr(root.value, 25),
                    root.multiplicity,
                    mpmath.nstr(x, 25),
                    status,
                    False,
                    mpmath.nstr(root.radius / hp.iota, 5),
                )
            )
    return out


# ---------------------------------------------------------------------------
# Hilbert curve lines


def _fmt_coef(c: Fraction, var: str, first: bool) -> str:
    if c == 0:
        return ""
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = var if a == 1 else f"{rational_str(a)}{var}"
    return sign + body


def line_equation(r: int, iota: int, root: Fraction) -> str:
    """Text form of r*y - iota*x - root = 0."""
    s = _fmt_coef(Fraction(r), "y", True) + _fmt_coef(Fraction(-iota), "x", False)
    const = -root
    if const:
        s += ("-" if const < 0 else "+") + rational_str(abs(const))
    return s + "=0"


@dataclass(frozen=True)
class GammaLine:
    r: int
    iota: int
    root: Fraction
    multiplicity: int

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction]:
        """(y, x, 1) coefficients of r*y - iota*x - root = 0."""
        return Fraction(self.r), Fraction(-self.iota), -self.root

    @property
    def equation(self) -> str:
        return line_equation(self.r, self.iota, self.root)

    def y_at(self, x: Fraction) -> Fraction:
        return (self.iota * Fraction(x) + self.root) / self.r

    def to_json(self) -> dict:
        return {
            "equation": self.equation,
            "root": rational_str(self.root),
            "mult": self.multiplicity,
            "coefficients": [rational_str(c) for c in self.coefficients],
        }


@dataclass(frozen=True)
class GammaDecomposition:
    r: int
    iota: int
    q_lines: tuple[GammaLine, ...]
    r_extra: int
    r_extra_description: tuple[str, ...] = field(default=())

    @property
    def slope(self) -> Fraction:
        return Fraction(self.iota, self.r)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "iota": self.iota,
            "slope": rational_str(self.slope),
            "q_lines": [ln.to_json() for ln in self.q_lines],
            "r_extra": {"count": self.r_extra, "description": list(self.r_extra_description)},
        }

    def point_rows(self, xs: Sequence[Fraction]) -> list[tuple[str, str, str]]:
        """(x, y, line-id) samples of every rational line, for plotting."""
        rows = []
        for k, ln in enumerate(self.q_lines, start=1):
            for x in xs:
                rows.append((rational_str(Fraction(x)), rational_str(ln.y_at(x)), f"l{k}"))
        return rows


def _quadratic_lines(factor: UniPoly, r: int, iota: int, mult: int) -> tuple[int, list[str]]:
    a, b, c = factor.coeff(2), factor.coeff(1), factor.coeff(0)
    disc = b * b - 4 * a * c
    if disc < 0:
        return 0, []
    mid = -b / (2 * a)
    half = disc / (4 * a * a)
    base = line_equation(r, iota, mid)[:-2]
    tag = f" (x{mult})" if mult > 1 else ""
    return 2 * mult, [f"{base}∓√({rational_str(half)})=0{tag}", f"z = {rational_str(mid)} ± √({rational_str(half)})"]


def gamma_lines(hp: HilbertPolynomial, r: int) -> GammaDecomposition:
    """Parallel lines of slope iota/r into which the Hilbert curve of (X, rH) splits."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    rep = analyze(hp.P)
    lines = tuple(GammaLine(r, hp.iota, root, m) for root, m in rep.rational_roots)
    extra = 0
    desc: list[str] = []
    if rep.residual.degree > 0:
        for factor, mult in squarefree_decomposition(rep.residual):
            if factor.degree == 2:
                k, d = _quadratic_lines(factor, r, hp.iota, mult)
                extra += k
                desc.extend(d)
            else:
                k = count_distinct_real_roots(factor)
                if k:
                    extra += k * mult
                    desc.append(f"{k} real irrational line(s) of slope {rational_str(Fraction(hp.iota, r))}"
                                + (f" (x{mult})" if mult > 1 else ""))
    return GammaDecomposition(r, hp.iota, lines, extra, tuple(desc))


# ---------------------------------------------------------------------------
# structural properties of Hilbert polynomials of Fano manifolds


def structural_violations(hp: HilbertPolynomial, roundtrip: bool = True) -> list[str]:
    """Every failed structural property of ``hp`` (empty when all hold)."""
    bad = []
    P, n, iota, c = hp.P, hp.n, hp.iota, hp.coindex
    if P(0) != 1:
        bad.append("P(0) != 1")
    if P.lead <= 0 or (P.lead * math.factorial(n)).denominator != 1:
        bad.append("n! * lead(P) is not a positive integer")
    if serre_reflect(hp) != P:
        bad.append("Serre reflection does not fix P")
    Q = center(hp)
    if any(Q.coeff(i) for i in range(Q.degree + 1) if (i - n) % 2):
        bad.append("centered polynomial has terms of the wrong parity")
    if integer_root_profile(hp) != set(range(1 - iota, 0)):
        bad.append("integer roots differ from {1-iota..-1}")
    half = UniPoly([Fraction(iota, 2), 1])
    if (n % 2 or c % 2) and not half.divides(P):
        bad.append("z + iota/2 does not divide P")
    if c % 2 and n % 2 == 0 and not (half * half).divides(P):
        bad.append("(z + iota/2)^2 does not divide P")
    if roundtrip:
        try:
            if from_h0(n, iota, h0_vector_of(hp)).P != P:
                bad.append("h0 round trip does not reproduce P")
        except ValueError as exc:
            bad.append(f"h0 round trip failed: {exc}")
    return bad
