"""DFA counterexample search and mechanized pumping refutations.

No finite automaton recognizes the prime-numeral language or its star; this
module makes that concrete in two ways. ``find_counterexample`` takes any
complete DFA and hunts, in length-then-lexicographic order, for the first
string where it disagrees with the membership oracle. ``pumping_refutation``
takes a claimed pumping length p, builds a star member long enough that
every legal xyz decomposition pumps down (i = 0) to a string the oracle
rejects, and records the exhaustive verdict table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baseb import DIGIT_CHARS, MAX_TEXT_BASE, parse_digits, witness_numeral
from .errors import DfaFormatError
from .primelang import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_K_BUDGET,
    Language,
    in_pb,
    in_pb_star,
    membership_levels,
)
from .witness import DEFAULT_N_LIMIT, smallest_hard_N


@dataclass(frozen=True)
class DfaSpec:
    """A complete DFA over the digit alphabet 0..base-1.

    ``transitions[state][digit]`` is the successor state; the table is total
    and every index is validated at construction.
    """

    base: int
    state_count: int
    start_state: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.state_count < 1:
            raise ValueError(f"state_count must be >= 1, got {self.state_count}")
        if not 0 <= self.start_state < self.state_count:
            raise ValueError(f"start state {self.start_state} out of range")
        for q in self.accepting:
            if not 0 <= q < self.state_count:
                raise ValueError(f"accepting state {q} out of range")
        if len(self.transitions) != self.state_count:
            raise ValueError("transition table must have one row per state")
        for q, row in enumerate(self.transitions):
            if len(row) != self.base:
                raise ValueError(f"state {q} must have one transition per digit")
            for target in row:
                if not 0 <= target < self.state_count:
                    raise ValueError(f"transition target {target} out of range")


@dataclass(frozen=True)
class Counterexample:
    """Shortest string (in length-then-lex order) where DFA and oracle split."""

    string: str
    dfa_verdict: bool
    oracle_verdict: bool
    length: int

    def to_json_dict(self) -> dict:
        return {
            "found": True,
            "string": self.string,
            "length": self.length,
            "dfa_verdict": self.dfa_verdict,
            "oracle_verdict": self.oracle_verdict,
        }


@dataclass(frozen=True)
class PumpRow:
    """One xyz decomposition and the oracle's verdicts on its pumps.

    Pumping down (i = 0) is the refuting direction and must be rejected;
    the i = 2 pump is recorded as supplementary evidence with no claimed
    outcome.
    """

    x: str
    y: str
    z: str
    pumped_down: str
    pumped_down_in_star: bool
    pumped_up: str
    pumped_up_in_star: bool

    def to_json_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "xz": self.pumped_down,
            "xz_in_star": self.pumped_down_in_star,
            "xyyz": self.pumped_up,
            "xyyz_in_star": self.pumped_up_in_star,
        }


@dataclass(frozen=True)
class PumpingRefutation:
    """Evidence that no pumping length p works for the star language.

    ``witness`` is in the star, is longer than p, and every decomposition
    x y z with |xy| <= p, |y| >= 1 has xz outside the star: rows cover all
    p(p+1)/2 of them.
    """

    base: int
    pumping_length: int
    N: int
    fb_at_N: int
    witness: str
    witness_in_star: bool
    rows: tuple[PumpRow, ...]

    @property
    def refutes(self) -> bool:
        return self.witness_in_star and all(
            not row.pumped_down_in_star for row in self.rows
        )

    def to_json_dict(self) -> dict:
        return {
            "base": self.base,
            "pumping_length": self.pumping_length,
            "N": str(self.N),
            "fb_at_N": str(self.fb_at_N),
            "witness": self.witness,
            "witness_in_star": self.witness_in_star,
            "refutes": self.refutes,
            "rows": [row.to_json_dict() for row in self.rows],
        }


def _parse_int_token(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise DfaFormatError(
            f"line {lineno}: expected integer for {what}, got {token!r}", line=lineno
        ) from None


def parse_dfa(text: str) -> DfaSpec:
    """Parse the line-oriented DFA format.

    Header lines ``base b``, ``states m``, ``start i``, ``accept i1 i2 ...``
    (list may be empty), then exactly m*b lines ``trans state digit target``.
    ``#`` starts a comment line; blank lines are ignored. Errors carry the
    offending line number.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))

    def expect(index: int, keyword: str, argc: int | None) -> tuple[int, list[str]]:
        if index >= len(rows):
            raise DfaFormatError(f"unexpected end of input, missing {keyword!r} line")
        lineno, tokens = rows[index]
        if tokens[0] != keyword:
            raise DfaFormatError(
                f"line {lineno}: expected {keyword!r}, got {tokens[0]!r}", line=lineno
            )
        if argc is not None and len(tokens) != argc + 1:
            raise DfaFormatError(
                f"line {lineno}: {keyword!r} takes {argc} argument(s)", line=lineno
            )
        return lineno, tokens

    lineno, tokens = expect(0, "base", 1)
    base = _parse_int_token(tokens[1], lineno, "base")
    lineno, tokens = expect(1, "states", 1)
    state_count = _parse_int_token(tokens[1], lineno, "state count")
    lineno, tokens = expect(2, "start", 1)
    start = _parse_int_token(tokens[1], lineno, "start state")
    lineno, tokens = expect(3, "accept", None)
    accepting = frozenset(
        _parse_int_token(t, lineno, "accepting state") for t in tokens[1:]
    )

    if base < 2:
        raise DfaFormatError(f"base must be >= 2, got {base}")
    if state_count < 1:
        raise DfaFormatError(f"state count must be >= 1, got {state_count}")

    table: list[list[int | None]] = [[None] * base for _ in range(state_count)]
    expected = state_count * base
    trans_rows = rows[4:]
    if len(trans_rows) != expected:
        raise DfaFormatError(
            f"expected {expected} 'trans' lines, found {len(trans_rows)}",
            line=trans_rows[expected][0] if len(trans_rows) > expected else None,
        )
    for lineno, tokens in trans_rows:
        if tokens[0] != "trans" or len(tokens) != 4:
            raise DfaFormatError(
                f"line {lineno}: expected 'trans <state> <digit> <target>'",
                line=lineno,
            )
        q = _parse_int_token(tokens[1], lineno, "state")
        d = _parse_int_token(tokens[2], lineno, "digit")
        t = _parse_int_token(tokens[3], lineno, "target")
        if not 0 <= q < state_count:
            raise DfaFormatError(f"line {lineno}: state {q} out of range", line=lineno)
        if not 0 <= d < base:
            raise DfaFormatError(f"line {lineno}: digit {d} out of range", line=lineno)
        if not 0 <= t < state_count:
            raise DfaFormatError(f"line {lineno}: target {t} out of range", line=lineno)
        if table[q][d] is not None:
            raise DfaFormatError(
                f"line {lineno}: duplicate transition for state {q} digit {d}",
                line=lineno,
            )
        table[q][d] = t
    for q, row in enumerate(table):
        for d, target in enumerate(row):
            if target is None:
                raise DfaFormatError(
                    f"incomplete transition table: state {q} digit {d} undefined"
                )

    try:
        return DfaSpec(
            base=base,
            state_count=state_count,
            start_state=start,
            accepting=accepting,
            transitions=tuple(tuple(row) for row in table),  # type: ignore[arg-type]
        )
    except ValueError as exc:
        raise DfaFormatError(str(exc)) from exc


def render_dfa(dfa: DfaSpec) -> str:
    """Inverse of parse_dfa; round-trips through the text format."""
    lines = [
        f"base {dfa.base}",
        f"states {dfa.state_count}",
        f"start {dfa.start_state}",
        "accept " + " ".join(str(q) for q in sorted(dfa.accepting)),
    ]
    for q, row in enumerate(dfa.transitions):
        for d, t in enumerate(row):
            lines.append(f"trans {q} {d} {t}")
    return "\n".join(lines).rstrip() + "\n"


def dfa_accepts(dfa: DfaSpec, s: str) -> bool:
    """Run the DFA from its start state; accept iff the final state accepts."""
    state = dfa.start_state
    for d in parse_digits(s, dfa.base):
        state = dfa.transitions[state][d]
    return state in dfa.accepting


def _oracle_membership(s: str, b: int, language: Language) -> bool:
    if language == Language.PB:
        return in_pb(s, b)
    return in_pb_star(s, b)[0]


def _rank_to_string(rank: int, length: int, b: int) -> str:
    digits = []
    for _ in range(length):
        rank, d = divmod(rank, b)
        digits.append(DIGIT_CHARS[d])
    return "".join(reversed(digits))


def find_counterexample(
    dfa: DfaSpec,
    language: Language,
    max_len: int,
    *,
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> Counterexample | None:
    """First string (length-then-lex) where the DFA disagrees with the oracle.

    Exhausting max_len returns None, which is a statement about the explored
    budget, never a claim of equivalence. The returned verdicts are re-derived
    through the per-string oracle and a fresh DFA run, independently of the
    bulk tables used for the scan.
    """
    if dfa.base > MAX_TEXT_BASE:
        raise ValueError(f"counterexample search supports base <= {MAX_TEXT_BASE}")
    if max_len < 0:
        raise ValueError(f"max_len must be >= 0, got {max_len}")
    levels = membership_levels(
        dfa.base, language, max_len, enumeration_budget=enumeration_budget
    )
    accept_mask = np.zeros(dfa.state_count, dtype=bool)
    accept_mask[list(dfa.accepting)] = True
    trans = np.array(dfa.transitions, dtype=np.int64)

    states = np.array([dfa.start_state], dtype=np.int64)
    for length in range(max_len + 1):
        disagree = accept_mask[states] != levels[length]
        if disagree.any():
            rank = int(np.argmax(disagree))
            w = _rank_to_string(rank, length, dfa.base)
            return Counterexample(
                string=w,
                dfa_verdict=dfa_accepts(dfa, w),
                oracle_verdict=_oracle_membership(w, dfa.base, language),
                length=length,
            )
        if length < max_len:
            # children of rank i are ranks i*b + digit, in digit order
            states = trans[states].reshape(-1)
    return None


def pumping_refutation(
    b: int,
    p: int,
    n_limit: int = DEFAULT_N_LIMIT,
    k_budget: int = DEFAULT_K_BUDGET,
) -> PumpingRefutation:
    """Refute pumping length p for the star language over base b.

    Finds the first exponent N whose first prime multiplier f exceeds b**p,
    takes the witness (f)_b 0^(N-1) 1 (a prime numeral, hence in the star),
    and checks every decomposition with |xy| <= p, |y| >= 1: removing y
    always yields k * b**N + 1 for some k below f, or a leading-zero string,
    so the oracle rejects every pumped-down row.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if p < 1:
        raise ValueError(f"pumping length must be >= 1, got {p}")
    hard = smallest_hard_N(b, b**p, n_limit, k_budget)
    s = str(witness_numeral(b, hard.N, hard.fb_at_N))
    s_in_star, _ = in_pb_star(s, b)

    rows = []
    for i in range(0, p):
        for j in range(i + 1, p + 1):
            x, y, z = s[:i], s[i:j], s[j:]
            down = x + z
            up = x + y + y + z
            rows.append(
                PumpRow(
                    x=x,
                    y=y,
                    z=z,
                    pumped_down=down,
                    pumped_down_in_star=in_pb_star(down, b)[0],
                    pumped_up=up,
                    pumped_up_in_star=in_pb_star(up, b)[0],
                )
            )
    return PumpingRefutation(
        base=b,
        pumping_length=p,
        N=hard.N,
        fb_at_N=hard.fb_at_N,
        witness=s,
        witness_in_star=s_in_star,
        rows=tuple(rows),
    )
