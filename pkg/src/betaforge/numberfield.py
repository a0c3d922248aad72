"""Exact arithmetic in Q(q) for a fixed real algebraic base q.

A base is described by a monic integer polynomial together with a rational
interval that isolates exactly one real root.  Field elements are rational
coefficient vectors modulo that polynomial, so equality is a coefficient
comparison and order comparisons reduce to refining the isolating interval
with exact rational interval arithmetic.  No floating point is involved in
any decision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class NotMonic(ValueError):
    """The defining polynomial is not monic."""


class NoRootInInterval(ValueError):
    """The isolating interval contains no sign change of the polynomial."""


class AmbiguousInterval(ValueError):
    """The isolating interval brackets more than one real root."""


class ReduciblePolynomial(ValueError):
    """The defining polynomial has a rational root, so it generates no field."""


class MixedFields(TypeError):
    """Operands belong to two different BaseField instances."""


RationalLike = int | Fraction

# ---------------------------------------------------------------------------
# rational polynomial helpers (coefficient lists, ascending powers)


def _sgn(r: Fraction | int) -> int:
    return (r > 0) - (r < 0)


def _poly_at(coeffs: Sequence[Fraction | int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_over_interval(
    coeffs: Sequence[Fraction | int], lo: Fraction, hi: Fraction
) -> tuple[Fraction, Fraction]:
    """Conservative enclosure of the polynomial's range over [lo, hi]."""
    vlo = vhi = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        p0, p1, p2, p3 = vlo * lo, vlo * hi, vhi * lo, vhi * hi
        vlo = min(p0, p1, p2, p3) + c
        vhi = max(p0, p1, p2, p3) + c
    return vlo, vhi


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    quot = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _trim(a):
        shift = len(a) - len(b)
        factor = a[-1] * inv_lead
        quot[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        _trim(a)
    return _trim(quot), a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend((d, n // d))
        d += 1
    return sorted(set(out))


# ---------------------------------------------------------------------------


class BaseField:
    """The field Q(q), where q is the unique real root of ``min_poly`` inside
    the rational interval ``iso``.

    ``min_poly`` is given by ascending integer coefficients and must be monic
    of degree at least 2.  Construction certifies the interval: it must
    bracket exactly one simple real root, and the polynomial must have no
    rational root (for degrees 2 and 3 that makes irreducibility over Q a
    theorem; for higher degrees it is a screen, and the interval certificate
    still pins down a single well-defined real number).

    The isolating interval only ever shrinks; every comparison made through
    it stays valid afterwards.
    """

    __slots__ = ("min_poly", "degree", "name", "_lo", "_hi", "_sign_lo", "_reduction_rows")

    def __init__(
        self,
        min_poly: Iterable[int],
        iso: tuple[RationalLike | str, RationalLike | str],
        name: str | None = None,
    ):
        coeffs = tuple(int(c) for c in min_poly)
        if len(coeffs) < 3:
            raise ValueError("defining polynomial must have degree >= 2")
        if coeffs[-1] != 1:
            raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
        self.min_poly = coeffs
        self.degree = len(coeffs) - 1
        self.name = name

        lo, hi = Fraction(iso[0]), Fraction(iso[1])
        if not lo < hi:
            raise ValueError("isolating interval is empty")

        # Rational-root screen: a rational root of a monic integer polynomial
        # is an integer dividing the constant term.
        if coeffs[0] == 0:
            raise ReduciblePolynomial("zero constant term: x divides the polynomial")
        for cand in _divisors(coeffs[0]):
            for r in (cand, -cand):
                if _poly_at(coeffs, Fraction(r)) == 0:
                    raise ReduciblePolynomial(f"rational root {r}")

        # Bracket exactly one sign change on a grid over [lo, hi].  Grid
        # points are rational, so (post-screen) the polynomial is nonzero at
        # every one of them.
        grid_n = 32
        pts = [lo + (hi - lo) * Fraction(i, grid_n) for i in range(grid_n + 1)]
        signs = [_sgn(_poly_at(coeffs, p)) for p in pts]
        crossings = [i for i in range(grid_n) if signs[i] * signs[i + 1] < 0]
        if not crossings:
            raise NoRootInInterval(f"no sign change of {coeffs} over [{lo}, {hi}]")
        if len(crossings) > 1:
            raise AmbiguousInterval(f"{len(crossings)} sign changes of {coeffs} over [{lo}, {hi}]")
        i = crossings[0]
        self._lo, self._hi = pts[i], pts[i + 1]
        self._sign_lo = signs[i]

        # Refine until the derivative is sign-definite on the interval: then
        # the bracketed root is unique and simple.
        deriv = [k * c for k, c in enumerate(coeffs)][1:]
        for _ in range(256):
            dlo, dhi = _poly_over_interval(deriv, self._lo, self._hi)
            if dlo > 0 or dhi < 0:
                break
            self._bisect()
        else:
            raise AmbiguousInterval("could not certify a simple root by refinement")

        # Rows expressing q^k (k = degree .. 2*degree-2) in the power basis;
        # monic integer polynomial, so the rows are integer vectors.
        rows = []
        row = [-c for c in coeffs[:-1]]
        rows.append(tuple(row))
        for _ in range(self.degree - 2):
            top = row[-1]
            row = [0] + row[:-1]
            row = [r + top * m for r, m in zip(row, rows[0])]
            rows.append(tuple(row))
        self._reduction_rows = tuple(rows)

    # -- isolating interval ------------------------------------------------

    def interval(self) -> tuple[Fraction, Fraction]:
        """Current isolating interval (it only ever shrinks)."""
        return self._lo, self._hi

    def _bisect(self) -> None:
        mid = (self._lo + self._hi) / 2
        s = _sgn(_poly_at(self.min_poly, mid))
        if s == 0:
            raise ReduciblePolynomial(f"rational root {mid}")
        if s == self._sign_lo:
            self._lo = mid
        else:
            self._hi = mid

    def refine(self, steps: int = 1) -> tuple[Fraction, Fraction]:
        """Halve the isolating interval ``steps`` times."""
        for _ in range(steps):
            self._bisect()
        return self.interval()

    # -- element constructors ----------------------------------------------

    def element(self, coeffs: Iterable[RationalLike]) -> "AlgebraicReal":
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            raise ValueError(f"coefficient vector longer than degree {self.degree}")
        vec.extend([Fraction(0)] * (self.degree - len(vec)))
        return AlgebraicReal(self, tuple(vec))

    def from_rational(self, r: RationalLike) -> "AlgebraicReal":
        return self.element([Fraction(r)])

    @property
    def zero(self) -> "AlgebraicReal":
        return self.from_rational(0)

    @property
    def one(self) -> "AlgebraicReal":
        return self.from_rational(1)

    @property
    def q(self) -> "AlgebraicReal":
        """The base itself as a field element."""
        return self.element([0, 1])

    def __repr__(self) -> str:
        tag = self.name or f"poly={list(self.min_poly)}"
        return f"BaseField({tag}, interval=({float(self._lo):.6g}, {float(self._hi):.6g}))"


def define_field(
    min_poly: Iterable[int],
    iso: tuple[RationalLike | str, RationalLike | str],
    name: str | None = None,
) -> BaseField:
    """Construct the field Q(q) for the unique root of ``min_poly`` in ``iso``."""
    return BaseField(min_poly, iso, name=name)


@lru_cache(maxsize=None)
def q2_field() -> BaseField:
    """Base q2: the root of x^4 = 2x^2 + x + 1 in (1.7, 1.72), ~1.7106440950."""
    return define_field((-1, -1, -2, 0, 1), (Fraction(17, 10), Fraction(43, 25)), name="q2")


@lru_cache(maxsize=None)
def qf_field() -> BaseField:
    """Base qf: the root of x^3 = 2x^2 - x + 1 in (1.7, 1.8), ~1.7548776662."""
    return define_field((-1, 1, -2, 1), (Fraction(17, 10), Fraction(9, 5)), name="qf")


@lru_cache(maxsize=None)
def golden_field() -> BaseField:
    """The golden ratio (1 + sqrt 5)/2 as a base, ~1.6180339887."""
    return define_field((-1, -1, 1), (Fraction(3, 2), Fraction(17, 10)), name="golden")


FIELD_CONSTRUCTORS = {
    "q2": q2_field,
    "qf": qf_field,
    "golden": golden_field,
}


class AlgebraicReal:
    """An element of Q(q), stored as rational coordinates in the power basis
    1, q, ..., q^(degree-1).

    Arithmetic is exact.  Ordering works by refining the field's isolating
    interval until the sign of the difference is certain; two elements are
    equal exactly when their coordinate vectors coincide.  Rationals and ints
    mix freely with elements of a field; elements of two different fields do
    not (MixedFields).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: BaseField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other) -> "AlgebraicReal | None":
        if isinstance(other, AlgebraicReal):
            if other.field is not self.field:
                raise MixedFields("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coeffs[0]

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicReal(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraicReal(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return AlgebraicReal(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        res = prod[:d]
        for k in range(d, 2 * d - 1):
            ck = prod[k]
            if ck:
                row = self.field._reduction_rows[k - d]
                for i, m in enumerate(row):
                    if m:
                        res[i] += ck * m
        return AlgebraicReal(self.field, tuple(res))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicReal":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero field element")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        # extended gcd of the coordinate polynomial and the minimal polynomial
        r0 = [Fraction(c) for c in self.field.min_poly]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            quot, rem = _poly_divmod(r0, r1)
            if not rem:
                break
            s_next = list(s0)
            s_next.extend([Fraction(0)] * (len(quot) + len(s1) - 1 - len(s_next)))
            for i, qc in enumerate(quot):
                if qc:
                    for j, sc in enumerate(s1):
                        if sc:
                            s_next[i + j] -= qc * sc
            r0, r1, s0, s1 = r1, rem, s1, _trim(s_next) or [Fraction(0)]
        if len(r1) > 1:
            # only possible when the defining polynomial is not irreducible
            raise ReduciblePolynomial("defining polynomial shares a factor with an element")
        scale = 1 / r1[0]
        return self.field.element([c * scale for c in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ---------------------------------------------------------------

    def enclosure(self) -> tuple[Fraction, Fraction]:
        """A rational interval certainly containing the value (not refined)."""
        if self.is_rational():
            return self.coeffs[0], self.coeffs[0]
        lo, hi = self.field.interval()
        return _poly_over_interval(self.coeffs, lo, hi)

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        if self.is_zero():
            return 0
        if self.is_rational():
            return _sgn(self.coeffs[0])
        while True:
            vlo, vhi = self.enclosure()
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            # the value is nonzero (nonzero coordinates of degree < deg(min_poly)),
            # so the enclosure eventually clears zero
            self.field.refine(8)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except MixedFields:
            return False
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((id(self.field), self.coeffs))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- output ----------------------------------------------------------------

    def refined_enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """An enclosure of width at most ``width`` (refines the field interval)."""
        while True:
            vlo, vhi = self.enclosure()
            if vhi - vlo <= width:
                return vlo, vhi
            self.field.refine(8)

    def to_decimal(self, digits: int = 6) -> str:
        """Correctly rounded decimal string with ``digits`` fractional digits
        (round half to even; exact for rational values)."""
        if digits < 0:
            raise ValueError("digits must be >= 0")
        if self.is_rational():
            return _round_decimal(self.coeffs[0], digits)
        while True:
            vlo, vhi = self.enclosure()
            slo = _round_decimal(vlo, digits)
            shi = _round_decimal(vhi, digits)
            if slo == shi:
                # an irrational value is never a rounding tie, so this terminates
                return slo
            self.field.refine(8)

    def __float__(self) -> float:
        vlo, vhi = self.refined_enclosure(Fraction(1, 10**17))
        return float((vlo + vhi) / 2)

    def __repr__(self) -> str:
        return f"AlgebraicReal({self!s})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            coeff = "" if (mag == 1 and i > 0) else str(mag)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = f"{coeff}q" if coeff else "q"
            else:
                term = f"{coeff}q^{i}" if coeff else f"q^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _round_decimal(r: Fraction, digits: int) -> str:
    """Round-half-even rendering of a rational with a fixed number of
    fractional digits."""
    scaled = r * 10**digits
    floor = scaled.numerator // scaled.denominator
    rem2 = 2 * (scaled - floor)  # in [0, 2)
    if rem2 > 1 or (rem2 == 1 and floor % 2 == 1):
        floor += 1
    negative = floor < 0
    mag = -floor if negative else floor
    text = str(mag).rjust(digits + 1, "0")
    if digits:
        text = f"{text[:-digits]}.{text[-digits:]}"
    return f"-{text}" if negative else text


def sign(x: AlgebraicReal) -> int:
    """Exact sign of a field element."""
    return x.sign()


def compare(x: AlgebraicReal, y: AlgebraicReal | RationalLike) -> int:
    """Exact three-way comparison: -1, 0, or 1 as x <, ==, > y."""
    o = x._coerce(y)
    if o is None:
        raise TypeError(f"cannot compare AlgebraicReal with {type(y).__name__}")
    return (x - o).sign()


def to_decimal(x: AlgebraicReal, digits: int = 6) -> str:
    """Correctly rounded decimal string of ``x`` (round half to even)."""
    return x.to_decimal(digits)
