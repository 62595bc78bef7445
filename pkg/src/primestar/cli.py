"""Command-line front end.

Every library operation is a subcommand. Output is JSON by default
(``--format human`` for prose/tables); all unbounded integers in JSON are
decimal strings. Exit codes: 0 = computed affirmative, 1 = computed
negative (non-member, invalid certificate, non-canonical numeral),
2 = usage error, 3 = budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .baseb import from_base, parse_digits, to_base
from .errors import BudgetExceededError, DfaFormatError, NumeralError
from .numtheory import DEFAULT_ORDER_BOUND, DEFAULT_PROBABLE_ROUNDS, is_prime
from .primelang import (
    DEFAULT_ENUMERATION_BUDGET,
    DEFAULT_K_BUDGET,
    Language,
    classify_pb,
    compute_fb,
    in_pb_star,
    nerode_lower_bound,
)
from .refuter import find_counterexample, parse_dfa, pumping_refutation
from .witness import (
    DEFAULT_N_LIMIT,
    CompositenessCertificate,
    divisor_certificate,
    lemma_witnesses,
    smallest_hard_N,
    verify_certificate,
)

_LANGUAGES = {lang.value: lang for lang in Language}


def _emit(args: argparse.Namespace, payload, human: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(human)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cmd_encode(args: argparse.Namespace) -> int:
    numeral = to_base(args.n, args.base)
    _emit(
        args,
        {"base": args.base, "value": str(args.n), "numeral": str(numeral)},
        str(numeral),
    )
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    digits = parse_digits(args.string, args.base)  # bad characters -> usage
    if not digits or (len(digits) > 1 and digits[0] == 0):
        reason = "empty string" if not digits else "leading zero"
        _emit(
            args,
            {
                "base": args.base,
                "string": args.string,
                "canonical": False,
                "reason": reason,
            },
            f"not a canonical numeral: {reason}",
        )
        return 1
    value = from_base(args.string, args.base)
    _emit(
        args,
        {
            "base": args.base,
            "string": args.string,
            "canonical": True,
            "value": str(value),
        },
        str(value),
    )
    return 0


def _cmd_is_prime(args: argparse.Namespace) -> int:
    verdict = is_prime(args.n, rounds=args.rounds, seed=args.seed)
    _emit(
        args,
        {
            "n": str(args.n),
            "is_prime": verdict.is_prime,
            "certainty": verdict.certainty.value,
            "rounds": verdict.rounds,
        },
        f"{args.n} is {'prime' if verdict.is_prime else 'not prime'}"
        f" ({verdict.certainty.value})",
    )
    return 0 if verdict.is_prime else 1


def _cmd_in_p(args: argparse.Namespace) -> int:
    verdict = classify_pb(args.string, args.base)
    _emit(
        args,
        {
            "base": args.base,
            "string": args.string,
            "member": verdict.member,
            "reason": verdict.reason,
        },
        f"{'member' if verdict.member else 'not a member'} ({verdict.reason})",
    )
    return 0 if verdict.member else 1


def _cmd_in_pstar(args: argparse.Namespace) -> int:
    member, decomposition = in_pb_star(args.string, args.base)
    factors = (
        [str(f) for f in decomposition.factors] if decomposition is not None else None
    )
    if member:
        human = "member: " + (" . ".join(factors) if factors else "(empty word)")
    else:
        human = "not a member"
    _emit(
        args,
        {
            "base": args.base,
            "string": args.string,
            "member": member,
            "factors": factors,
        },
        human,
    )
    return 0 if member else 1


def _cmd_fb(args: argparse.Namespace) -> int:
    result = compute_fb(args.base, args.n, args.k_budget)
    _emit(
        args,
        {"k_star": str(result.k_star), "prime_found": str(result.prime_found)},
        f"f_{args.base}({args.n}) = {result.k_star}"
        f" (prime found: {result.prime_found})",
    )
    return 0


def _cmd_hard_n(args: argparse.Namespace) -> int:
    result = smallest_hard_N(args.base, args.K, args.n_limit, args.k_budget)
    _emit(
        args,
        {
            "base": result.base,
            "K": str(result.K),
            "N": str(result.N),
            "fb_at_N": str(result.fb_at_N),
            "scan_log": [[str(n), str(f)] for n, f in result.scan_log],
        },
        f"N = {result.N} (f_{result.base}({result.N}) = {result.fb_at_N}"
        f" > {result.K})",
    )
    return 0


def _cmd_lemma_witnesses(args: argparse.Namespace) -> int:
    witnesses = lemma_witnesses(args.base, args.n, args.k_budget)
    strings = [str(w) for w in witnesses]
    _emit(
        args,
        {"base": args.base, "n": str(args.n), "witnesses": strings},
        "\n".join(strings) if strings else "(empty family)",
    )
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    certificates = [
        divisor_certificate(args.base, args.K, k, order_bound=args.order_bound)
        for k in range(1, args.K + 1)
    ]
    payload = [c.to_json_dict() for c in certificates]
    lines = [
        f"k = {c.k}: modulus {c.modulus} divides {c.k}*{c.base}^N + 1"
        f" (order {c.order}, residue {c.residue})"
        for c in certificates
    ]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_verify_cert(args: argparse.Namespace) -> int:
    text = _read_source(args.source)
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise ValueError("expected a certificate object or an array of them")
    results = []
    all_valid = True
    for entry in data:
        if not isinstance(entry, dict):
            raise ValueError("expected a certificate object or an array of them")
        cert = CompositenessCertificate.from_json_dict(entry)
        check = verify_certificate(cert)
        all_valid &= check.valid
        results.append(
            {"k": str(cert.k), "valid": check.valid, "violated": check.violated}
        )
    lines = [
        f"k = {r['k']}: " + ("valid" if r["valid"] else f"INVALID ({r['violated']})")
        for r in results
    ]
    _emit(args, results, "\n".join(lines))
    return 0 if all_valid else 1


def _human_refutation_table(refutation) -> str:
    headers = ("x", "y", "z", "xz", "xz in star", "xyyz in star")
    rows = [
        (
            row.x or "(empty)",
            row.y,
            row.z,
            row.pumped_down,
            "yes" if row.pumped_down_in_star else "no",
            "yes" if row.pumped_up_in_star else "no",
        )
        for row in refutation.rows
    ]
    widths = [
        max(len(headers[i]), *(len(r[i]) for r in rows)) if rows else len(headers[i])
        for i in range(len(headers))
    ]

    def fmt(cells) -> str:
        return " | ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells))

    lines = [
        f"witness s = {refutation.witness}"
        f" (N = {refutation.N}, f_b(N) = {refutation.fb_at_N},"
        f" in star: {'yes' if refutation.witness_in_star else 'no'})",
        fmt(headers),
        "-+-".join("-" * w for w in widths),
    ]
    lines.extend(fmt(r) for r in rows)
    lines.append(
        "refuted: every pumped-down string leaves the star"
        if refutation.refutes
        else "NOT refuted"
    )
    return "\n".join(lines)


def _cmd_pump_refute(args: argparse.Namespace) -> int:
    refutation = pumping_refutation(args.base, args.p, args.n_limit, args.k_budget)
    _emit(args, refutation.to_json_dict(), _human_refutation_table(refutation))
    return 0 if refutation.refutes else 1


def _cmd_refute_dfa(args: argparse.Namespace) -> int:
    dfa = parse_dfa(_read_source(args.source))
    language = _LANGUAGES[args.language]
    found = find_counterexample(
        dfa, language, args.max_len, enumeration_budget=args.enumeration_budget
    )
    if found is None:
        _emit(
            args,
            {"found": False, "max_len": args.max_len},
            f"no disagreement on strings of length <= {args.max_len}"
            " (not a claim of equivalence)",
        )
        return 3
    _emit(
        args,
        found.to_json_dict(),
        f"counterexample: {found.string!r} (length {found.length},"
        f" dfa says {found.dfa_verdict}, oracle says {found.oracle_verdict})",
    )
    return 0


def _cmd_nerode_bound(args: argparse.Namespace) -> int:
    bound = nerode_lower_bound(
        args.base,
        _LANGUAGES[args.language],
        args.L,
        enumeration_budget=args.enumeration_budget,
    )
    _emit(
        args,
        {
            "base": args.base,
            "language": args.language,
            "length_bound": args.L,
            "lower_bound": bound,
        },
        f"any DFA needs >= {bound} states"
        f" (strings of length <= {args.L} examined)",
    )
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    from .report import generate_report  # defers the matplotlib import

    manifest = generate_report(
        args.base,
        args.out,
        n_max=args.n_max,
        pumping_length=args.p,
        l_max=args.l_max,
        k_budget=args.k_budget,
        enumeration_budget=args.enumeration_budget,
    )
    human = "\n".join(f"{key}: {value}" for key, value in manifest.items())
    _emit(args, manifest, human)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "human"),
        default="json",
        help="output mode (default: json)",
    )

    parser = argparse.ArgumentParser(
        prog="primestar",
        description="Empirical toolkit around prime numerals, their Kleene star, "
        "and why no finite automaton recognizes either.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("encode", _cmd_encode, "canonical numeral of a non-negative integer")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("n", type=int)

    p = add("decode", _cmd_decode, "value of a canonical numeral (exit 1 if not)")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("string")

    p = add("is-prime", _cmd_is_prime, "primality verdict (exit 1 if composite)")
    p.add_argument("n", type=int)
    p.add_argument("--rounds", type=int, default=DEFAULT_PROBABLE_ROUNDS)
    p.add_argument("--seed", type=int, default=None)

    p = add("in-p", _cmd_in_p, "prime-numeral membership (exit 1 if not)")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("string")

    p = add("in-pstar", _cmd_in_pstar, "star membership with decomposition")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("string")

    p = add("fb", _cmd_fb, "smallest k with k*b^n + 1 prime")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-budget", type=int, default=DEFAULT_K_BUDGET)

    p = add("hard-n", _cmd_hard_n, "first exponent whose multiplier exceeds K")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--n-limit", type=int, default=DEFAULT_N_LIMIT)
    p.add_argument("--k-budget", type=int, default=DEFAULT_K_BUDGET)

    p = add("lemma-witnesses", _cmd_lemma_witnesses, "non-members below the multiplier")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-budget", type=int, default=DEFAULT_K_BUDGET)

    p = add("certify", _cmd_certify, "compositeness certificates for k = 1..K")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--order-bound", type=int, default=DEFAULT_ORDER_BOUND)

    p = add("verify-cert", _cmd_verify_cert, "check certificates from file or stdin")
    p.add_argument("source", help="path to certificate JSON, or - for stdin")

    p = add("pump-refute", _cmd_pump_refute, "refute a pumping length for the star")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-limit", type=int, default=DEFAULT_N_LIMIT)
    p.add_argument("--k-budget", type=int, default=DEFAULT_K_BUDGET)

    p = add("refute-dfa", _cmd_refute_dfa, "first string where a DFA is wrong")
    p.add_argument("source", help="path to DFA file, or - for stdin")
    p.add_argument("--language", choices=sorted(_LANGUAGES), required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument(
        "--enumeration-budget", type=int, default=DEFAULT_ENUMERATION_BUDGET
    )

    p = add("nerode-bound", _cmd_nerode_bound, "state lower bound from short strings")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--language", choices=sorted(_LANGUAGES), required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument(
        "--enumeration-budget", type=int, default=DEFAULT_ENUMERATION_BUDGET
    )

    p = add("report", _cmd_report, "write CSV tables and figures for one base")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--l-max", type=int, default=10)
    p.add_argument("--k-budget", type=int, default=DEFAULT_K_BUDGET)
    p.add_argument(
        "--enumeration-budget", type=int, default=DEFAULT_ENUMERATION_BUDGET
    )

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # decimal I/O of big integers is the contract
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (NumeralError, DfaFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    console_main()
