"""Exact rational scalars and dense univariate polynomials over Q.

Rationals are :class:`fractions.Fraction`; polynomials are immutable
:class:`UniPoly` values holding coefficients low-to-high.  The heavy
algorithms (products, Taylor shifts, pseudo-remainders) run on integer
coefficient lists so that big-integer arithmetic never pays for a gcd per
operation; results are converted back to Fractions once at the end.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
IntPoly = list  # list[int], index i = coefficient of z^i

Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rational_str(q: Fraction) -> str:
    """Canonical text form: ``p/q`` in lowest terms, ``p`` when q = 1."""
    return str(Fraction(q))


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if it is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def is_rational_square(q: Fraction) -> bool:
    return rational_sqrt(q) is not None


# ---------------------------------------------------------------------------
# integer coefficient lists


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def int_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def int_content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def int_primitive(a: Sequence[int]) -> IntPoly:
    """Divide by the positive content; the sign of every coefficient is kept."""
    g = int_content(a)
    if g in (0, 1):
        return list(a)
    return [c // g for c in a]


def int_derivative(a: Sequence[int]) -> IntPoly:
    return [i * a[i] for i in range(1, len(a))]


def int_eval(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def int_eval_homogeneous(a: Sequence[int], num: int, den: int) -> int:
    """den^deg(a) * a(num/den); has the sign of a(num/den) when den > 0."""
    if not a:
        return 0
    acc = a[-1]
    dpow = 1
    for c in reversed(a[:-1]):
        dpow *= den
        acc = acc * num + c * dpow
    return acc


def int_sign_at(a: Sequence[int], x: Fraction) -> int:
    """Sign of the integer polynomial ``a`` at the rational ``x``."""
    v = int_eval_homogeneous(a, x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def int_prem(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return _trim(r)
    e = len(r) - 1 - db + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[i + shift] -= lr * bc
        r.pop()
        _trim(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def int_signed_prem(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Pseudo-remainder scaled by a *positive* constant times rem(a, b)."""
    r = int_prem(a, b)
    if b[-1] < 0 and (len(a) - len(b) + 1) % 2 == 1:
        r = [-c for c in r]
    return r


def int_exact_div(a: Sequence[int], b: Sequence[int]) -> IntPoly | None:
    """a / b over Z when b divides a with integral quotient, else None."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        return [] if not _trim(r) else None
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c % lb:
            return None
        c //= lb
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                r[k + i] -= c * bc
    if any(r[:db]):
        return None
    return q


def int_taylor_compose(a: Sequence[int], u: int, v: int, s: int) -> IntPoly:
    """Integer coefficients of s^d * a((u z + v) / s), d = deg a."""
    d = len(a) - 1
    if d < 0:
        return []
    out = [a[d]]
    spow = 1
    for i in range(d - 1, -1, -1):
        spow *= s
        nxt = [0] * (len(out) + 1)
        for k, c in enumerate(out):
            if c:
                nxt[k] += c * v
                nxt[k + 1] += c * u
        nxt[0] += a[i] * spow
        out = nxt
    return _trim(out)


# ---------------------------------------------------------------------------
# the polynomial type


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``; trailing zeros are trimmed so
    the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("coeffs", "_iform")

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "_iform", None)

    def _integer_form(self) -> tuple[int, IntPoly]:
        """(D, ints) with self = ints / D; cached, the value never changes."""
        if self._iform is None:
            den = 1
            for c in self.coeffs:
                den = _lcm(den, c.denominator)
            ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
            object.__setattr__(self, "_iform", (den, ints))
        return self._iform

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self):
        return (UniPoly, (self.coeffs,))

    # constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls([c])

    @classmethod
    def z(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, root: Scalar) -> "UniPoly":
        """The monic factor ``z - root``."""
        return cls([-as_rational(root), 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "UniPoly":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls.linear(r)
        return p

    @classmethod
    def from_int(cls, coeffs: Sequence[int], scale: Fraction = Fraction(1)) -> "UniPoly":
        return cls(Fraction(c) * scale for c in coeffs)

    # basic queries ------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        if not self.coeffs:
            return Fraction(0)
        den, ints = self._integer_form()
        num = int_eval_homogeneous(ints, x.numerator, x.denominator)
        return Fraction(num, den * x.denominator ** self.degree)

    def eval_float(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            f = Fraction(other)
            return UniPoly(c * f for c in self.coeffs)
        if isinstance(other, UniPoly):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            f = 1 / Fraction(other)
            return UniPoly(c * f for c in self.coeffs)
        return NotImplemented

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "UniPoly"):
        return poly_divmod(self, other)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return poly_divmod(self, other)[1]

    def derivative(self) -> "UniPoly":
        return UniPoly(i * self.coeffs[i] for i in range(1, len(self.coeffs)))

    def monic(self) -> "UniPoly":
        return self / self.lead

    def compose_linear(self, a: Scalar, b: Scalar) -> "UniPoly":
        return poly_compose_linear(self, a, b)

    def divides(self, other: "UniPoly") -> bool:
        return poly_divmod(other, self)[1].is_zero()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # serialisation ------------------------------------------------------
    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "UniPoly":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict):
            data = data["coeffs"]
        return cls(as_rational(x) for x in data)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.to_json())})"

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(x):
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return UniPoly.constant(x)
    return NotImplemented


def format_poly(p: UniPoly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = rational_str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{rational_str(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# operations


def primitive_integer_form(p: UniPoly) -> tuple[Fraction, IntPoly]:
    """Split ``p = content * prim`` with ``prim`` integral, coprime, positive lead."""
    if p.is_zero():
        raise ValueError("zero polynomial has no primitive form")
    den, ints = p._integer_form()
    g = int_content(ints)
    if ints[-1] < 0:
        g = -g
    prim = [c // g for c in ints]
    return Fraction(g, den), prim


def poly_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    if p.is_zero() or q.is_zero():
        return UniPoly()
    cp, ip = primitive_integer_form(p)
    cq, iq = primitive_integer_form(q)
    return UniPoly.from_int(int_mul(ip, iq), cp * cq)


def poly_compose_linear(p: UniPoly, a: Scalar, b: Scalar) -> UniPoly:
    """Return ``p(a*z + b)`` exactly."""
    if p.is_zero():
        return UniPoly()
    a, b = as_rational(a), as_rational(b)
    content, prim = primitive_integer_form(p)
    s = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    u = a.numerator * (s // a.denominator)
    v = b.numerator * (s // b.denominator)
    composed = int_taylor_compose(prim, u, v, s)
    return UniPoly.from_int(composed, content / Fraction(s) ** p.degree)


def poly_divmod(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly]:
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p.coeffs)
    dq = q.degree
    if len(r) - 1 < dq:
        return UniPoly(), p
    quo = [Fraction(0)] * (len(r) - dq)
    inv = 1 / q.lead
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] * inv
        quo[k] = c
        if c:
            for i, qc in enumerate(q.coeffs):
                r[k + i] -= c * qc
    return UniPoly(quo), UniPoly(r[:dq])


def exact_quotient(p: UniPoly, q: UniPoly) -> UniPoly:
    quo, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise ValueError(f"{format_poly(q)} does not divide {format_poly(p)}")
    return quo


def int_gcd(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Primitive gcd of two nonzero integer polynomials (positive lead)."""
    a = int_primitive(a)
    b = int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = int_prem(a, b)
        a, b = b, int_primitive(r) if r else []
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q via the primitive Euclidean remainder sequence."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = int_gcd(primitive_integer_form(p)[1], primitive_integer_form(q)[1])
    return UniPoly.from_int(g, Fraction(1, g[-1]))


def binomial_poly(c: int) -> UniPoly:
    """Falling-factorial binomial z(z-1)...(z-c+1)/c! as a polynomial."""
    p = UniPoly.constant(1)
    for j in range(c):
        p = p * UniPoly([-j, 1])
    return p / math.factorial(c)
