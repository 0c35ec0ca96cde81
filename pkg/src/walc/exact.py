"""Exact arithmetic: rationals, univariate polynomials and rational functions over Q.

Rationals are ``fractions.Fraction`` (arbitrary precision, stored in lowest
terms with positive denominator, which is exactly the canonical form this
package relies on).  Polynomials are immutable coefficient tuples in ascending
degree; rational functions keep a monic denominator coprime to the numerator,
so equality is a plain field-by-field comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Union

from .errors import PoleError, ZeroPolynomialError

Rat = Fraction

Scalar = Union[int, Fraction]


def rat(text_or_num, den=None) -> Fraction:
    """Build an exact rational from an int, a Fraction, or a 'p/q' string."""
    if den is not None:
        return Fraction(text_or_num, den)
    return Fraction(text_or_num)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q: coefficients ascending, trailing zeros stripped."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly(tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return P_ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = P_ONE
        for _ in range(n):
            out = out * self
        return out

    def monic(self) -> "Poly":
        if self.is_zero or self.leading == 1:
            return self
        inv = 1 / self.leading
        return Poly(tuple(c * inv for c in self.coeffs))

    def integer_primitive(self) -> tuple[int, ...]:
        """Clear denominators and divide by the content; leading coefficient positive."""
        if self.is_zero:
            return ()
        mul = 1
        for c in self.coeffs:
            mul = lcm(mul, c.denominator)
        ints = [int(c * mul) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, abs(c))
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return tuple(ints)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*k" if c != 1 else "k")
            else:
                terms.append(f"{c}*k^{i}" if c != 1 else f"k^{i}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def _as_poly(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly((Fraction(value),))
    return NotImplemented


P_ZERO = Poly(())
P_ONE = Poly((1,))
P_X = Poly((0, 1))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Exact quotient and remainder over Q."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, a.degree - b.degree + 1)
    r = list(a.coeffs)
    db, lb = b.degree, b.leading
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        coef = r[-1] / lb
        q[shift] = coef
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= coef * bc
        r.pop()
    return Poly(tuple(q)), Poly(tuple(r))


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b)
    if not r.is_zero:
        raise ValueError("inexact polynomial division")
    return q


def _int_primitive(v: list[int]) -> list[int]:
    g = 0
    for c in v:
        g = gcd(g, abs(c))
    if g == 0:
        return v
    v = [c // g for c in v]
    if v[-1] < 0:
        v = [-c for c in v]
    return v


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # Fraction-free pseudo-remainder; keeps every intermediate coefficient integral.
    r = a[:]
    lb = b[-1]
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            return r
        shift = len(r) - len(b)
        lead = r[-1]
        r = [lb * c for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lead * bc
        r.pop()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd in Q[k], computed by a primitive pseudo-remainder sequence over Z."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    u = list(a.integer_primitive())
    v = list(b.integer_primitive())
    if len(u) < len(v):
        u, v = v, u
    while v:
        r = _int_primitive(_int_pseudo_rem(u, v))
        u, v = v, r
    return Poly(tuple(Fraction(c) for c in u)).monic()


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large


def _deflate(coeffs_desc: list[Fraction], r: Fraction) -> list[Fraction]:
    # Synthetic division by (k - r); assumes r is a root.
    out = []
    acc = Fraction(0)
    for c in coeffs_desc:
        acc = acc * r + c
        out.append(acc)
    return out[:-1]


def rational_roots(p: Poly) -> dict[Fraction, int]:
    """All rational roots of p with multiplicities.

    Denominators are cleared to a primitive integer polynomial first, then the
    rational-root theorem bounds the candidates: a root in lowest terms u/v must
    have u dividing the constant term and v dividing the leading coefficient.
    Every candidate is confirmed by exact evaluation and its multiplicity found
    by repeated synthetic division.
    """
    if p.is_zero:
        raise ZeroPolynomialError("the zero polynomial vanishes identically")
    ints = list(p.integer_primitive())
    zero_mult = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        zero_mult += 1
    roots: dict[Fraction, int] = {}
    if zero_mult:
        roots[Fraction(0)] = zero_mult
    if len(ints) <= 1:
        return roots
    stripped = Poly(tuple(Fraction(c) for c in ints))
    for u in _divisors(ints[0]):
        for v in _divisors(ints[-1]):
            if gcd(u, v) != 1:
                continue
            for cand in (Fraction(u, v), Fraction(-u, v)):
                if stripped(cand) != 0:
                    continue
                desc = list(reversed(stripped.coeffs))
                mult = 0
                while True:
                    desc = _deflate(desc, cand)
                    mult += 1
                    if not desc or Poly(tuple(reversed(desc)))(cand) != 0:
                        break
                roots[cand] = mult
    return roots


@dataclass(frozen=True)
class RationalFn:
    """Reduced ratio of polynomials in one indeterminate over Q, monic denominator."""

    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = P_ZERO, P_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree >= 1:
                num = poly_exact_div(num, g)
                den = poly_exact_div(den, g)
            lc = den.leading
            if lc != 1:
                inv = 1 / lc
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @staticmethod
    def of(num, den=1) -> "RationalFn":
        n = _as_poly(num)
        d = _as_poly(den)
        if n is NotImplemented or d is NotImplemented:
            raise TypeError("RationalFn.of expects polynomials or scalars")
        return RationalFn(n, d)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __add__(self, other) -> "RationalFn":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFn":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFn":
        return _as_ratfn(other) - self

    def __mul__(self, other) -> "RationalFn":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFn":
        return _as_ratfn(other) / self

    def __str__(self) -> str:
        if self.den == P_ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _as_ratfn(value) -> "RationalFn":
    if isinstance(value, RationalFn):
        return value
    if isinstance(value, Poly):
        return RationalFn(value, P_ONE)
    if isinstance(value, (int, Fraction)):
        return RationalFn(Poly((Fraction(value),)), P_ONE)
    return NotImplemented


RF_ZERO = RationalFn(P_ZERO, P_ONE)
RF_ONE = RationalFn(P_ONE, P_ONE)
RF_X = RationalFn(P_X, P_ONE)


def ratfn_eval(f: RationalFn, k: Scalar) -> Fraction:
    """Exact value f(k); raises PoleError at roots of the denominator."""
    d = f.den(k)
    if d == 0:
        raise PoleError(f"evaluation at pole k = {k}")
    return f.num(k) / d


def ratfn_equal(f: RationalFn, g: RationalFn) -> bool:
    """True iff f and g agree as rational functions (cross-multiplication)."""
    return f.num * g.den == g.num * f.den
