"""Hand-built DFA texts for the refuter tests.

All candidates claim (wrongly) to recognize the star language; the trie
machine is the strongest, agreeing with it on every string up to a chosen
depth before going flat. Texts are built here independently of the library's
parser and renderer.
"""

from __future__ import annotations

from oracles import DIGITS, all_strings, oracle_in_pb_star

ACCEPT_ALL = """\
# one accepting sink
base 2
states 1
start 0
accept 0
trans 0 0 0
trans 0 1 0
"""

REJECT_ALL = """\
base 2
states 1
start 0
accept
trans 0 0 0
trans 0 1 0
"""

ENDS_IN_ONE = """\
# state 1 <=> last digit seen was 1
base 2
states 2
start 0
accept 1
trans 0 0 0
trans 0 1 1
trans 1 0 0
trans 1 1 1
"""

VALUE_DIVISIBLE_BY_3 = """\
# state = numeral value mod 3; empty string sits at 0
base 2
states 3
start 0
accept 0
trans 0 0 0
trans 0 1 1
trans 1 0 2
trans 1 1 0
trans 2 0 1
trans 2 1 2
"""

EVEN_LENGTH = """\
base 2
states 2
start 0
accept 0
trans 0 0 1
trans 0 1 1
trans 1 0 0
trans 1 1 0
"""


def trie_dfa_text(b: int, depth: int, member) -> str:
    """A DFA agreeing with ``member`` on every string of length <= depth.

    One state per string up to the depth (a trie) plus a rejecting sink for
    anything longer, so every disagreement sits at depth + 1 or deeper.
    """
    order = [s for length in range(depth + 1) for s in all_strings(b, length)]
    index = {s: i for i, s in enumerate(order)}
    dead = len(order)
    lines = [f"base {b}", f"states {dead + 1}", "start 0"]
    lines.append("accept " + " ".join(str(index[s]) for s in order if member(s)))
    for s in order:
        for d in range(b):
            lines.append(f"trans {index[s]} {d} {index.get(s + DIGITS[d], dead)}")
    for d in range(b):
        lines.append(f"trans {dead} {d} {dead}")
    return "\n".join(lines) + "\n"


def star_trie_text(depth: int) -> str:
    return trie_dfa_text(2, depth, lambda s: oracle_in_pb_star(s, 2))


CORPUS = {
    "accept_all": ACCEPT_ALL,
    "reject_all": REJECT_ALL,
    "ends_in_one": ENDS_IN_ONE,
    "value_divisible_by_3": VALUE_DIVISIBLE_BY_3,
    "even_length": EVEN_LENGTH,
}
