"""Membership oracles for prime numerals and their Kleene star.

Two complementary implementations live here. The per-string oracles
(``in_pb``, ``in_pb_star``) decide one string at a time with a left-to-right
dynamic program; the level tables (``membership_levels``) decide *every*
string up to a length bound at once, vectorized, which is what the bounded
Myhill-Nerode diagnostic and the DFA counterexample search consume. The two
routes are independent and cross-checked in the test suite.

The empty word belongs to the star language: the star of any language
contains the empty concatenation, and that choice is also what makes the
dynamic program's base case sound.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .baseb import CanonicalNumeral, parse_digits
from .errors import BudgetExceededError
from .numtheory import is_prime

DEFAULT_K_BUDGET = 100_000

# Cap on b**L for the exhaustive-enumeration operations (level tables and
# the Nerode diagnostic); also bounds the sieve these paths rely on.
DEFAULT_ENUMERATION_BUDGET = 2_000_000


class Language(str, Enum):
    """Selector for the two languages the oracles and the refuter speak."""

    PB = "pb"          # canonical base-b numerals of primes
    PB_STAR = "pstar"  # all finite concatenations thereof


@dataclass(frozen=True)
class PbVerdict:
    """Membership verdict for the prime-numeral language, with the cause.

    ``reason`` is "prime" for members, and distinguishes "non-canonical"
    (bad digit, empty, or leading zero) from "not-prime" for rejections.
    """

    member: bool
    reason: str


@dataclass(frozen=True)
class StarDecomposition:
    """An ordered factorization witnessing star membership.

    Every factor is a canonical prime numeral; the concatenation of the
    factors is the decided string. The empty tuple is the decomposition of
    the empty word.
    """

    factors: tuple[CanonicalNumeral, ...]
    base: int

    def concatenation(self) -> str:
        return "".join(str(f) for f in self.factors)

    def values(self) -> tuple[int, ...]:
        return tuple(f.value for f in self.factors)


@dataclass(frozen=True)
class FbResult:
    """Smallest k with k * base**exponent + 1 prime, plus the scan evidence."""

    base: int
    exponent: int
    k_star: int
    prime_found: int
    composite_prefix_checked: int


@lru_cache(maxsize=1 << 16)
def _is_prime_value(v: int) -> bool:
    return is_prime(v).is_prime


def classify_pb(s: str, b: int) -> PbVerdict:
    """Membership in the prime-numeral language, never raising on bad text."""
    try:
        digits = parse_digits(s, b)
    except ValueError:
        return PbVerdict(False, "non-canonical")
    if not digits or (len(digits) > 1 and digits[0] == 0):
        return PbVerdict(False, "non-canonical")
    value = 0
    for d in digits:
        value = value * b + d
    if _is_prime_value(value):
        return PbVerdict(True, "prime")
    return PbVerdict(False, "not-prime")


def in_pb(s: str, b: int) -> bool:
    """True iff s is the canonical base-b numeral of a prime."""
    return classify_pb(s, b).member


def in_pb_star(s: str, b: int) -> tuple[bool, StarDecomposition | None]:
    """Decide whether s splits into canonical prime numerals.

    Dynamic program over cut positions: a position is reachable iff some
    earlier reachable position starts a usable factor ending here, where a
    usable factor has a nonzero first digit and a prime value. Candidate
    values are built by single digit-appends, and each (start, end) substring
    is tested exactly once per call.

    On success the returned decomposition is the canonical one: fewest
    factors, ties broken by the shorter first factor, recursively.
    """
    digits = parse_digits(s, b)
    length = len(digits)
    if length == 0:
        return True, StarDecomposition((), b)

    # cuts[i] = sorted end positions j such that digits[i:j] is a usable factor
    cuts: list[list[int]] = [[] for _ in range(length)]
    for i in range(length):
        if digits[i] == 0:
            continue
        v = 0
        for j in range(i + 1, length + 1):
            v = v * b + digits[j - 1]
            if _is_prime_value(v):
                cuts[i].append(j)

    infinity = length + 1
    # suffix_count[i] = fewest factors covering digits[i:], or infinity
    suffix_count = [infinity] * (length + 1)
    suffix_count[length] = 0
    for i in range(length - 1, -1, -1):
        best = infinity
        for j in cuts[i]:
            if suffix_count[j] + 1 < best:
                best = suffix_count[j] + 1
        suffix_count[i] = best

    if suffix_count[0] >= infinity:
        return False, None

    factors: list[CanonicalNumeral] = []
    pos = 0
    remaining = suffix_count[0]
    while pos < length:
        for j in cuts[pos]:  # ascending, so the shortest valid factor wins
            if suffix_count[j] == remaining - 1:
                factors.append(CanonicalNumeral(tuple(digits[pos:j]), b))
                pos = j
                remaining -= 1
                break
    return True, StarDecomposition(tuple(factors), b)


def compute_fb(b: int, n: int, k_budget: int = DEFAULT_K_BUDGET) -> FbResult:
    """Scan k = 1, 2, ... for the first prime of the form k * b**n + 1.

    Termination within any finite budget is not guaranteed (the scan's
    well-definedness rests on primes existing in the arithmetic progression
    1 mod b**n); exhausting k_budget raises a budget error that reports how
    far the scan got and never claims nonexistence.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if n < 1:
        raise ValueError(f"exponent n must be >= 1, got {n}")
    if k_budget < 1:
        raise ValueError(f"k_budget must be >= 1, got {k_budget}")
    power = b**n
    candidate = 1
    for k in range(1, k_budget + 1):
        candidate += power
        if _is_prime_value(candidate):
            return FbResult(b, n, k, candidate, k - 1)
    raise BudgetExceededError(
        f"no prime k * {b}**{n} + 1 found for k <= {k_budget}",
        budget="k_budget", limit=k_budget, base=b, exponent=n,
        composites_checked=k_budget,
    )


# --- bounded exhaustive tables -------------------------------------------
#
# Strings of length L over digits 0..b-1 are indexed by rank: the digit
# string read as a base-b integer, leading zeros allowed. levels[L][rank]
# is the membership bit for that string; rank arithmetic replaces string
# concatenation (rank(uw) = rank(u) * b**len(w) + rank(w)).

_star_cache: dict[int, dict] = {}
_star_cache_lock = threading.Lock()


def _sieve_mask(limit: int) -> np.ndarray:
    """Boolean primality mask for values in [0, limit)."""
    mask = np.ones(max(limit, 2), dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit - 1) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return mask


def _check_enumeration_budget(b: int, depth: int, budget: int) -> None:
    if b**depth > budget:
        raise BudgetExceededError(
            f"{b}**{depth} exceeds enumeration budget {budget}",
            budget="enumeration_budget", limit=budget, base=b, depth=depth,
        )


def _star_levels(b: int, depth: int) -> list[np.ndarray]:
    with _star_cache_lock:
        entry = _star_cache.setdefault(b, {"levels": None, "mask": None})
        if entry["levels"] is None:
            entry["levels"] = [np.array([True])]  # the empty word
        levels: list[np.ndarray] = entry["levels"]
        if len(levels) <= depth and (entry["mask"] is None or len(entry["mask"]) < b**depth):
            entry["mask"] = _sieve_mask(b**depth)
        mask = entry["mask"]
        while len(levels) <= depth:
            ell = len(levels)
            size = b**ell
            rr = np.arange(size, dtype=np.int64)
            val = np.zeros(size, dtype=np.int64)
            member = np.zeros(size, dtype=bool)
            pw = 1
            # Suffix starting at pos is a usable factor iff its first digit
            # is nonzero, the prefix before it is in the star, and its value
            # is prime; peel digits from the right so val and the prefix
            # rank are maintained in lockstep.
            for pos in range(ell - 1, -1, -1):
                d = rr % b
                rr //= b
                val += d * pw
                pw *= b
                member |= (d != 0) & levels[pos][rr] & mask[val]
            levels.append(member)
        return levels[: depth + 1]


def _pb_levels(b: int, depth: int) -> list[np.ndarray]:
    mask = _sieve_mask(b**depth) if depth >= 1 else np.zeros(2, dtype=bool)
    levels = [np.array([False])]  # the empty word is not a numeral
    for ell in range(1, depth + 1):
        size = b**ell
        member = mask[:size].copy()
        if ell > 1:
            member[: b ** (ell - 1)] = False  # leading zero
        levels.append(member)
    return levels


def membership_levels(
    b: int,
    language: Language,
    depth: int,
    *,
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> list[np.ndarray]:
    """Membership bits for every string of length <= depth, rank-indexed.

    Star tables are cached per base and extended in place on deeper calls,
    so repeated consumers (counterexample search, the Nerode diagnostic)
    share one computation.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    _check_enumeration_budget(b, depth, enumeration_budget)
    if language == Language.PB_STAR:
        return _star_levels(b, depth)
    return _pb_levels(b, depth)


def nerode_lower_bound(
    b: int,
    language: Language,
    length_bound: int,
    *,
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int:
    """States any DFA needs to agree with the language on strings <= a bound.

    For each split point, prefixes of length <= split get an acceptance
    signature: the oracle's answer on every extension short enough to keep
    the whole string within the bound. Distinct signatures must sit in
    distinct states of any agreeing DFA, so the largest distinct-signature
    count over all splits is a valid lower bound. Exact, no approximation;
    non-decreasing in the length bound.
    """
    levels = membership_levels(
        b, language, length_bound, enumeration_budget=enumeration_budget
    )
    best = 1
    for split in range(length_bound + 1):
        rows: set[bytes] = set()
        for j in range(split + 1):
            ext_sizes = [b**e for e in range(length_bound - split + 1)]
            for u in range(b**j):
                sig = b"".join(
                    levels[j + e][u * size : (u + 1) * size].tobytes()
                    for e, size in enumerate(ext_sizes)
                )
                rows.add(sig)
        best = max(best, len(rows))
    return best
