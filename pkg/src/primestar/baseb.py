"""Canonical base-b numerals and the padded witness-string constructor.

A canonical numeral is a digit sequence, most significant digit first, with
no leading zero; zero itself is the single digit 0. Text form uses 0-9 then
a-z, capping the textual base at 36; the in-memory type accepts any base.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NumeralError

DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_TEXT_BASE = len(DIGIT_CHARS)

_CHAR_VALUES = {ch: i for i, ch in enumerate(DIGIT_CHARS)}


def _check_base(b: int, *, for_text: bool = False) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if for_text and b > MAX_TEXT_BASE:
        raise ValueError(f"text numerals support base <= {MAX_TEXT_BASE}, got {b}")


@dataclass(frozen=True)
class CanonicalNumeral:
    """Digit string of a non-negative integer, most significant first.

    Invariants enforced at construction: non-empty, every digit in [0, base),
    and no leading zero unless the numeral is exactly (0,).
    """

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        _check_base(self.base)
        if not self.digits:
            raise NumeralError("numeral must have at least one digit")
        for i, d in enumerate(self.digits):
            if not 0 <= d < self.base:
                raise NumeralError(
                    f"digit {d} at position {i} out of range for base {self.base}",
                    position=i,
                )
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise NumeralError("leading zero in multi-digit numeral", position=0)

    def __str__(self) -> str:
        _check_base(self.base, for_text=True)
        return "".join(DIGIT_CHARS[d] for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        acc = 0
        for d in self.digits:
            acc = acc * self.base + d
        return acc


def to_base(n: int, b: int) -> CanonicalNumeral:
    """The unique canonical numeral of n in base b."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_base(b)
    if n == 0:
        return CanonicalNumeral((0,), b)
    digits: list[int] = []
    while n:
        n, d = divmod(n, b)
        digits.append(d)
    digits.reverse()
    return CanonicalNumeral(tuple(digits), b)


def parse_digits(s: str, b: int) -> tuple[int, ...]:
    """Digit values of s over base b; rejects out-of-alphabet characters.

    Canonicality (leading zeros) is not checked here; this is the shared
    character-level validation for every text interface.
    """
    _check_base(b, for_text=True)
    digits = []
    for i, ch in enumerate(s):
        d = _CHAR_VALUES.get(ch)
        if d is None or d >= b:
            raise NumeralError(
                f"character {ch!r} at position {i} is not a base-{b} digit",
                position=i,
            )
        digits.append(d)
    return tuple(digits)


def from_base(s: str, b: int) -> int:
    """Value of a canonical base-b numeral string; validation is the job.

    Raises NumeralError naming the offending position for empty input,
    out-of-range digits, or a leading zero on a multi-digit string.
    """
    digits = parse_digits(s, b)
    if not digits:
        raise NumeralError("empty string is not a numeral")
    if len(digits) > 1 and digits[0] == 0:
        raise NumeralError("leading zero in multi-digit numeral", position=0)
    acc = 0
    for d in digits:
        acc = acc * b + d
    return acc


def witness_numeral(b: int, n: int, k: int) -> CanonicalNumeral:
    """The numeral of k * b**n + 1, built as (k)_b followed by n-1 zeros and 1.

    Concatenation and positional arithmetic agree here because k >= 1 keeps
    the leading digit nonzero and the +1 lands in the final position.
    """
    _check_base(b)
    if n < 1:
        raise ValueError(f"exponent n must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"multiplier k must be >= 1, got {k}")
    head = to_base(k, b)
    return CanonicalNumeral(head.digits + (0,) * (n - 1) + (1,), b)
