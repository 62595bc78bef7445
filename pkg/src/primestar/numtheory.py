"""Arbitrary-precision number-theoretic primitives.

Everything here is a pure function of its arguments, operating on Python's
native big integers. The one place trust enters the picture is primality:
below 2**64 the answer is deterministic (fixed Miller-Rabin witness sets),
above it the answer is a Baillie-PSW probable-prime verdict reinforced by
extra Miller-Rabin rounds, and the verdict says so explicitly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from .errors import BudgetExceededError

# Verdicts below this value are deterministic; at or above it they are
# probable-prime only (Baillie-PSW has no known counterexample, but also no
# proof). The witness tiers below actually cover far more than 2**64; the
# boundary is pinned here so the reported trust level never depends on which
# tier happened to apply.
DETERMINISTIC_LIMIT = 2**64

# Extra random-base Miller-Rabin rounds layered on top of Baillie-PSW for
# values at or above DETERMINISTIC_LIMIT.
DEFAULT_PROBABLE_ROUNDS = 16

# multiplicative_order walks the cyclic group directly, so cap the modulus.
DEFAULT_ORDER_BOUND = 10**8

# Largest n for which factorial(n) will materialize n! in full.
DEFAULT_FACTORIAL_BOUND = 10**5

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# (bound, witnesses): Miller-Rabin with these witnesses is deterministic for
# all n below the bound (Pomerance/Selfridge/Wagstaff and Jaeschke style
# verified sets). The last tier extends past 2**64.
_MR_TIERS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1662803)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


class Certainty(str, Enum):
    DETERMINISTIC = "deterministic"
    PROBABLE = "probable"


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality test plus the trust level it carries.

    ``rounds`` counts the random-base Miller-Rabin rounds consumed (0 on the
    purely deterministic paths). A ``False`` verdict is always deterministic:
    a failed round is a compositeness proof, so only "probable prime" carries
    residual uncertainty.
    """

    is_prime: bool
    certainty: Certainty
    rounds: int = 0


def _check_natural(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value}")


def _mr_composite_witness(n: int, a: int, d: int, s: int) -> bool:
    """True iff base a proves n composite (n - 1 = d * 2**s, d odd)."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test, Selfridge parameters (P=1, Q=(1-D)/4).

    Assumes n is odd, n >= 3, and not divisible by any small prime.
    """
    if math.isqrt(n) ** 2 == n:
        return False
    d_param = 5
    while True:
        j = _jacobi(d_param % n, n)
        if j == 0:
            # Shares a factor with n; n was already screened for small
            # factors, so this means composite.
            return False
        if j == -1:
            break
        d_param = -(d_param + 2) if d_param > 0 else -(d_param - 2)
    q = (1 - d_param) // 4

    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    # Binary ladder for U_d, V_d with Q^k carried along. P = 1 throughout.
    u, v, qk = 1, 1, q % n
    for bit in bin(d)[3:]:
        # Index doubling: U_2k = U_k V_k, V_2k = V_k^2 - 2 Q^k.
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            # Index +1; halving mod odd n via parity fixup.
            u, v = u + v, v + d_param * u
            if u % 2:
                u += n
            if v % 2:
                v += n
            u = (u // 2) % n
            v = (v // 2) % n
            qk = qk * q % n

    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if v == 0:
            return True
    return False


def is_prime(
    n: int,
    *,
    rounds: int = DEFAULT_PROBABLE_ROUNDS,
    seed: int | None = None,
) -> PrimalityVerdict:
    """Primality verdict for an arbitrary-precision non-negative integer.

    Below 2**64 the verdict is deterministic. At or above, the test is
    Baillie-PSW followed by ``rounds`` Miller-Rabin rounds whose bases are
    drawn from a PRNG seeded by (seed, n), so results are reproducible for
    fixed arguments. False verdicts are exact either way.
    """
    _check_natural("n", n)
    deterministic = n < DETERMINISTIC_LIMIT

    if n < 2:
        return PrimalityVerdict(False, Certainty.DETERMINISTIC)
    for p in _SMALL_PRIMES:
        if n == p:
            return PrimalityVerdict(True, Certainty.DETERMINISTIC)
        if n % p == 0:
            return PrimalityVerdict(False, Certainty.DETERMINISTIC)

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if deterministic:
        for bound, witnesses in _MR_TIERS:
            if n < bound:
                break
        for a in witnesses:
            if _mr_composite_witness(n, a, d, s):
                return PrimalityVerdict(False, Certainty.DETERMINISTIC)
        return PrimalityVerdict(True, Certainty.DETERMINISTIC)

    # Baillie-PSW: Miller-Rabin base 2, then strong Lucas. A failure at any
    # stage is a compositeness proof, so False verdicts stay deterministic;
    # only the True verdict above the limit is merely probable.
    if _mr_composite_witness(n, 2, d, s):
        return PrimalityVerdict(False, Certainty.DETERMINISTIC)
    if not _strong_lucas_prp(n):
        return PrimalityVerdict(False, Certainty.DETERMINISTIC)

    # String seeds hash via sha512, so draws are stable across interpreter
    # runs (tuple seeds would go through randomized hash()).
    rng = random.Random(str(n) if seed is None else f"{seed}:{n}")
    for used in range(1, rounds + 1):
        a = rng.randrange(2, n - 1)
        if _mr_composite_witness(n, a, d, s):
            return PrimalityVerdict(False, Certainty.DETERMINISTIC, used)
    return PrimalityVerdict(True, Certainty.PROBABLE, rounds)


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m by square-and-multiply; requires m >= 1."""
    _check_natural("base", base)
    _check_natural("exp", exp)
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    return pow(base, exp, m)


def multiplicative_order(b: int, m: int, *, order_bound: int = DEFAULT_ORDER_BOUND) -> int:
    """Smallest d >= 1 with b**d = 1 (mod m); requires m >= 2, gcd(b, m) = 1.

    The group is walked one multiplication at a time, which is exact and
    cheap whenever the order is small; the modulus itself is capped by
    ``order_bound`` since the walk can take up to m - 1 steps.
    """
    _check_natural("b", b)
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(b, m) != 1:
        raise ValueError(f"gcd({b}, {m}) != 1, multiplicative order undefined")
    if m > order_bound:
        raise BudgetExceededError(
            f"modulus {m} exceeds order-search bound {order_bound}",
            budget="order_bound", limit=order_bound, modulus=m,
        )
    x = b % m
    d = 1
    while x != 1:
        x = x * b % m
        d += 1
    return d


def factorial(n: int, *, factorial_bound: int = DEFAULT_FACTORIAL_BOUND) -> int:
    """n! exactly; refuses n beyond the materialization budget."""
    _check_natural("n", n)
    if n > factorial_bound:
        raise BudgetExceededError(
            f"factorial({n}) exceeds materialization bound {factorial_bound}",
            budget="factorial_bound", limit=factorial_bound, n=n,
        )
    return math.factorial(n)


def factorial_mod(n: int, m: int) -> int:
    """n! mod m, running the product in the residue ring; requires m >= 1.

    When m <= n the modulus itself divides the product and the answer is 0
    without any multiplication, which is what keeps residue arithmetic viable
    for factorials far beyond the materialization budget.
    """
    _check_natural("n", n)
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    if m <= n:
        return 0
    acc = 1
    for i in range(2, n + 1):
        acc = acc * i % m
        if acc == 0:
            break
    return acc
