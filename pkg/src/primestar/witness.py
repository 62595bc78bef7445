"""Compositeness certificates and witness families.

Two routes establish that some exponent N makes every k * b**N + 1 composite
for k up to a target K. The certificate route takes N = (bK)! + 1 and
exhibits the divisor bk + 1 for each k, using only residue arithmetic, so it
works even when N is far too large to write down. The search route scans
small exponents until the first prime multiplier exceeds K, which is what
yields strings short enough to pump.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .baseb import CanonicalNumeral, witness_numeral
from .errors import BudgetExceededError
from .numtheory import (
    DEFAULT_ORDER_BOUND,
    factorial_mod,
    mod_pow,
    multiplicative_order,
)
from .primelang import DEFAULT_K_BUDGET, compute_fb

# proposition_N materializes (bK)! + 1 only while the value stays small
# enough to be used as a literal exponent downstream.
DEFAULT_MATERIALIZE_BOUND = 10**6

DEFAULT_N_LIMIT = 100


@dataclass(frozen=True)
class FactorialExponent:
    """The exponent (bK)! + 1, symbolic via bK, materialized when small.

    ``value`` is None beyond the materialization budget; residue arithmetic
    through :meth:`residue` works either way.
    """

    bK: int
    value: int | None = None

    @property
    def form(self) -> str:
        return f"({self.bK})!+1"

    def residue(self, m: int) -> int:
        """((bK)! + 1) mod m without materializing the factorial."""
        return (factorial_mod(self.bK, m) + 1) % m


@dataclass(frozen=True)
class CompositenessCertificate:
    """A claim that modulus = base*k + 1 properly divides k * base**N + 1.

    N is the factorial exponent (bK)! + 1, carried symbolically. ``order``
    and ``residue`` are the claimed multiplicative order of base modulo the
    modulus and the claimed N mod order; a certificate is a claim, not a
    trusted cache, so verification recomputes both.
    """

    base: int
    K: int
    bK: int
    k: int
    modulus: int
    order: int
    residue: int

    def exponent(self) -> FactorialExponent:
        return FactorialExponent(self.bK)

    def to_json_dict(self) -> dict[str, str]:
        return {
            "b": str(self.base),
            "K": str(self.K),
            "N_form": f"({self.bK})!+1",
            "bK": str(self.bK),
            "k": str(self.k),
            "m": str(self.modulus),
            "d": str(self.order),
            "r": str(self.residue),
        }

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "CompositenessCertificate":
        try:
            return cls(
                base=int(obj["b"]),
                K=int(obj["K"]),
                bK=int(obj["bK"]),
                k=int(obj["k"]),
                modulus=int(obj["m"]),
                order=int(obj["d"]),
                residue=int(obj["r"]),
            )
        except KeyError as exc:
            raise ValueError(f"certificate JSON missing field {exc}") from exc


@dataclass(frozen=True)
class CertificateCheck:
    """Verification outcome; ``violated`` names the first failed invariant."""

    valid: bool
    violated: str | None = None


@dataclass(frozen=True)
class HardExponentResult:
    """Smallest exponent found whose first prime multiplier exceeds K."""

    base: int
    K: int
    N: int
    fb_at_N: int
    scan_log: tuple[tuple[int, int], ...]


def proposition_N(
    b: int, K: int, *, materialize_bound: int = DEFAULT_MATERIALIZE_BOUND
) -> FactorialExponent:
    """The exponent (bK)! + 1, which forces k * b**N + 1 composite for k <= K.

    Materialized when the value fits the budget; otherwise symbolic, which
    is all the residue arithmetic downstream ever needs.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    bk = b * K
    acc = 1
    for i in range(2, bk + 1):
        acc *= i
        if acc + 1 > materialize_bound:
            return FactorialExponent(bk, None)
    return FactorialExponent(bk, acc + 1)


def divisor_certificate(
    b: int, K: int, k: int, *, order_bound: int = DEFAULT_ORDER_BOUND
) -> CompositenessCertificate:
    """Certificate that b*k + 1 divides k * b**N + 1 for N = (bK)! + 1.

    The order d of b modulo bk + 1 is at most bk <= bK, so d divides (bK)!
    and the huge exponent reduces to N mod d, computed in the residue ring.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if not 1 <= k <= K:
        raise ValueError(f"k must satisfy 1 <= k <= K, got k={k}, K={K}")
    m = b * k + 1
    d = multiplicative_order(b, m, order_bound=order_bound)
    r = (factorial_mod(b * K, d) + 1) % d
    return CompositenessCertificate(
        base=b, K=K, bK=b * K, k=k, modulus=m, order=d, residue=r
    )


def verify_certificate(c: CompositenessCertificate) -> CertificateCheck:
    """Re-derive every certificate invariant from scratch.

    No stored field is trusted: the order and residue are recomputed and
    the divisibility congruence is re-checked. Returns the first violated
    invariant by name. A modulus beyond the order-search bound raises the
    usual budget error rather than guessing.
    """
    ok_shape = (
        c.base >= 2
        and c.K >= 1
        and 1 <= c.k <= c.K
        and c.bK == c.base * c.K
        and c.order >= 1
        and 0 <= c.residue < c.order
    )
    if not ok_shape:
        return CertificateCheck(False, "shape")
    if math.gcd(c.base, c.modulus) != 1:
        return CertificateCheck(False, "coprimality")
    if c.modulus != c.base * c.k + 1:
        return CertificateCheck(False, "modulus")
    d = multiplicative_order(c.base, c.modulus)
    if c.order != d or d > c.base * c.k or mod_pow(c.base, c.order, c.modulus) != 1:
        return CertificateCheck(False, "order")
    if (c.k * mod_pow(c.base, c.residue, c.modulus) + 1) % c.modulus != 0:
        return CertificateCheck(False, "divisibility")
    if c.residue != (factorial_mod(c.bK, c.order) + 1) % c.order:
        return CertificateCheck(False, "residue")
    # modulus >= 3 and, since N = (bK)!+1 >= 3, modulus <= k*b*b < k*b**N + 1.
    if not (c.modulus >= 3 and c.modulus <= c.k * c.base * c.base):
        return CertificateCheck(False, "properness")
    return CertificateCheck(True, None)


def smallest_hard_N(
    b: int,
    K: int,
    n_limit: int = DEFAULT_N_LIMIT,
    k_budget: int = DEFAULT_K_BUDGET,
) -> HardExponentResult:
    """Scan exponents for the first n with first prime multiplier above K.

    Unlike the factorial-exponent construction this needs primality
    enumeration, but it finds desk-scale exponents. Exhausting n_limit
    raises a budget error carrying the scan log; existence itself is not in
    doubt, only the bound was too small.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    log: list[tuple[int, int]] = []
    for n in range(1, n_limit + 1):
        fb = compute_fb(b, n, k_budget)
        log.append((n, fb.k_star))
        if fb.k_star > K:
            return HardExponentResult(b, K, n, fb.k_star, tuple(log))
    raise BudgetExceededError(
        f"no n <= {n_limit} with first prime multiplier above {K} for base {b}",
        budget="n_limit", limit=n_limit, base=b, K=K, scan_log=tuple(log),
    )


def lemma_witnesses(
    b: int, n: int, k_budget: int = DEFAULT_K_BUDGET
) -> list[CanonicalNumeral]:
    """All strings (k)_b 0^(n-1) 1 for k below the first prime multiplier.

    Each represents k * b**n + 1 with every k' * b**n + 1 composite for
    k' <= k, so no suffix of it can be a prime numeral and the whole string
    sits outside the star language.
    """
    fb = compute_fb(b, n, k_budget)
    return [witness_numeral(b, n, k) for k in range(1, fb.k_star)]
