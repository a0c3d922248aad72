"""Eventually periodic binary words and the expansion dynamics they feed.

A word is an infinite binary sequence with a finite preperiod and a
repeating period, written in a small grammar: digits 0/1, grouping with
parentheses, ``(...)^k`` for k-fold repetition, and a final ``(...)*`` for
the infinite tail.  Words are kept in canonical form (primitive period,
shortest preperiod), so two words are equal exactly when they denote the
same digit stream.

The value of a word in a base field is sum(digit_i * q^-i).  The expansion
dynamics on the domain [0, 1/(q-1)] are t0(x) = q*x and t1(x) = q*x - 1;
the region of a point decides which branches keep it inside the domain:

    low    [0, 1/q)                  only t0 stays
    switch [1/q, 1/(q(q-1))]         both t0 and t1 stay (branch point)
    high   (1/(q(q-1)), 1/(q-1)]     only t1 stays
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .numberfield import AlgebraicReal, BaseField


class WordSyntaxError(ValueError):
    """Malformed word text; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptyWordError(ValueError):
    """The text denotes no digits at all."""


class Region(Enum):
    LOW = "low"
    SWITCH = "switch"
    HIGH = "high"
    OUTSIDE = "outside"

    def __str__(self) -> str:
        return self.value


def _validate_digits(digits: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(d) for d in digits)
    if any(d not in (0, 1) for d in out):
        raise ValueError(f"digits must be 0 or 1, got {out}")
    return out


class PeriodicWord:
    """An eventually periodic binary sequence in canonical form.

    Canonical means the period is primitive (not a power of a shorter word)
    and the preperiod is as short as possible (its last digit differs from
    the period's last digit).  A finite digit string is represented with the
    all-zero tail, period "0".
    """

    __slots__ = ("preperiod", "period")

    def __init__(self, preperiod: Iterable[int] = (), period: Iterable[int] = ()):
        pre = list(_validate_digits(preperiod))
        per = list(_validate_digits(period)) or [0]

        # primitive period
        n = len(per)
        for k in range(1, n):
            if n % k == 0 and per == per[:k] * (n // k):
                per = per[:k]
                break

        # shortest preperiod: absorb trailing digits equal to the period's last
        while pre and pre[-1] == per[-1]:
            per = [per[-1]] + per[:-1]
            pre.pop()

        self.preperiod = tuple(pre)
        self.period = tuple(per)

    # -- digit access --------------------------------------------------------

    def digit(self, i: int) -> int:
        """Digit at 0-based position ``i`` of the infinite stream."""
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def digits(self, n: int) -> tuple[int, ...]:
        """The first ``n`` digits of the stream."""
        return tuple(self.digit(i) for i in range(n))

    def is_zero(self) -> bool:
        return not self.preperiod and self.period == (0,)

    # -- structure -----------------------------------------------------------

    def with_prefix(self, digits: Iterable[int]) -> "PeriodicWord":
        """The word obtained by prepending ``digits`` to this stream."""
        return PeriodicWord(_validate_digits(digits) + self.preperiod, self.period)

    def shifted(self) -> "PeriodicWord":
        """The word with its first digit removed."""
        if self.preperiod:
            return PeriodicWord(self.preperiod[1:], self.period)
        return PeriodicWord((), self.period[1:] + self.period[:1])

    def reflected(self) -> "PeriodicWord":
        """Digitwise complement (0 <-> 1)."""
        return PeriodicWord(
            tuple(1 - d for d in self.preperiod), tuple(1 - d for d in self.period)
        )

    # -- comparisons -----------------------------------------------------------

    def _cmp(self, other: "PeriodicWord") -> int:
        """Lexicographic three-way comparison of the digit streams."""
        horizon = max(len(self.preperiod), len(other.preperiod)) + math.lcm(
            len(self.period), len(other.period)
        )
        for i in range(horizon):
            a, b = self.digit(i), other.digit(i)
            if a != b:
                return -1 if a < b else 1
        return 0

    def __eq__(self, other):
        if not isinstance(other, PeriodicWord):
            return NotImplemented
        return self.preperiod == other.preperiod and self.period == other.period

    def __hash__(self):
        return hash((self.preperiod, self.period))

    def __lt__(self, other):
        if not isinstance(other, PeriodicWord):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        if not isinstance(other, PeriodicWord):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, PeriodicWord):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        if not isinstance(other, PeriodicWord):
            return NotImplemented
        return self._cmp(other) >= 0

    # -- rendering ---------------------------------------------------------------

    def __str__(self) -> str:
        pre = "".join(str(d) for d in self.preperiod)
        per = "".join(str(d) for d in self.period)
        return f"{pre}({per})*"

    def __repr__(self) -> str:
        return f"PeriodicWord({self!s})"


# ---------------------------------------------------------------------------
# grammar


def _parse_seq(text: str, i: int, depth: int) -> tuple[list[int], list[int] | None, int]:
    digits: list[int] = []
    period: list[int] | None = None
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ")":
            if depth == 0:
                raise WordSyntaxError("unbalanced ')'", i)
            return digits, period, i
        if period is not None:
            raise WordSyntaxError("nothing may follow the infinite tail", i)
        if ch in "01":
            digits.append(int(ch))
            i += 1
        elif ch == "(":
            inner_digits, inner_period, i = _parse_seq(text, i + 1, depth + 1)
            if i >= len(text) or text[i] != ")":
                raise WordSyntaxError("unclosed '('", i)
            i += 1
            if i < len(text) and text[i] == "^":
                if inner_period is not None:
                    raise WordSyntaxError("a repeated group cannot contain a tail", i)
                i += 1
                start = i
                while i < len(text) and text[i].isdigit():
                    i += 1
                if start == i:
                    raise WordSyntaxError("'^' must be followed by a repeat count", start)
                k = int(text[start:i])
                if k < 1:
                    raise WordSyntaxError("repeat count must be at least 1", start)
                digits.extend(inner_digits * k)
            elif i < len(text) and text[i] == "*":
                if inner_period is not None:
                    raise WordSyntaxError("a tail cannot contain another tail", i)
                if not inner_digits:
                    raise WordSyntaxError("empty tail", i)
                i += 1
                period = inner_digits
            else:
                digits.extend(inner_digits)
                period = inner_period
        else:
            raise WordSyntaxError(f"unexpected character {ch!r}", i)
    if depth > 0:
        raise WordSyntaxError("unclosed '('", len(text))
    return digits, period, i


def parse_word(text: str) -> PeriodicWord:
    """Parse word text: digits 0/1, ``(...)`` grouping, ``(...)^k`` repetition,
    and an optional final ``(...)*`` infinite tail.  Whitespace is ignored.
    A word without an explicit tail ends in the all-zero tail."""
    digits, period, _ = _parse_seq(text, 0, 0)
    if not digits and period is None:
        raise EmptyWordError("word text contains no digits")
    return PeriodicWord(tuple(digits), tuple(period or ()))


# ---------------------------------------------------------------------------
# values and dynamics


@lru_cache(maxsize=None)
def domain_bounds(field: BaseField) -> tuple[AlgebraicReal, AlgebraicReal, AlgebraicReal]:
    """(1/q, 1/(q(q-1)), 1/(q-1)): switch interval endpoints and the domain top."""
    q = field.q
    upper = field.one / (q - 1)
    switch_lo = field.one / q
    switch_hi = switch_lo * upper
    return switch_lo, switch_hi, upper


def _finite_value(digits: Sequence[int], field: BaseField, q_inv: AlgebraicReal) -> AlgebraicReal:
    acc = field.zero
    for d in reversed(digits):
        acc = (acc + d) * q_inv
    return acc


def eval_word(word: PeriodicWord, field: BaseField) -> AlgebraicReal:
    """The value sum(digit_i * q^-i) of the word's stream, exactly."""
    q_inv = field.q.inverse()
    pre_val = _finite_value(word.preperiod, field, q_inv)
    per_val = _finite_value(word.period, field, q_inv)
    p = len(word.period)
    tail = per_val / (field.one - q_inv**p)
    return pre_val + q_inv ** len(word.preperiod) * tail


def t0(x: AlgebraicReal) -> AlgebraicReal:
    """Branch reading digit 0: x -> q*x."""
    return x * x.field.q


def t1(x: AlgebraicReal) -> AlgebraicReal:
    """Branch reading digit 1: x -> q*x - 1."""
    return x * x.field.q - 1


def apply_digits(x: AlgebraicReal, digits: Iterable[int]) -> AlgebraicReal:
    """Apply the branches named by ``digits`` in order (no domain checks)."""
    q = x.field.q
    for d in _validate_digits(digits):
        x = x * q - d
    return x


def region(x: AlgebraicReal) -> Region:
    """Which part of the domain [0, 1/(q-1)] the point lies in."""
    switch_lo, switch_hi, upper = domain_bounds(x.field)
    if x.sign() < 0:
        return Region.OUTSIDE
    if (x - switch_lo).sign() < 0:
        return Region.LOW
    if (x - switch_hi).sign() <= 0:
        return Region.SWITCH
    if (x - upper).sign() <= 0:
        return Region.HIGH
    return Region.OUTSIDE


def reflect_point(x: AlgebraicReal) -> AlgebraicReal:
    """The involution x -> 1/(q-1) - x of the domain."""
    _, _, upper = domain_bounds(x.field)
    return upper - x


def reflect_word(word: PeriodicWord) -> PeriodicWord:
    """Digitwise complement; satisfies eval(reflect(w)) = reflect(eval(w))."""
    return word.reflected()
