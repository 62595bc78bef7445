import io
import json

import pytest

from dfa_corpus import ACCEPT_ALL, star_trie_text
from primestar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_encode_decode_round_trip(capsys):
    code, out = run(capsys, "encode", "--base", "2", "97", "--format", "human")
    assert code == 0 and out.strip() == "1100001"

    code, payload = run_json(capsys, "decode", "--base", "2", "1100001")
    assert code == 0
    assert payload["value"] == "97" and payload["canonical"] is True


def test_decode_non_canonical_exits_1(capsys):
    code, payload = run_json(capsys, "decode", "--base", "2", "01")
    assert code == 1
    assert payload["canonical"] is False and payload["reason"] == "leading zero"


def test_decode_bad_character_is_usage_error(capsys):
    assert main(["decode", "--base", "2", "21"]) == 2


def test_is_prime_exit_codes(capsys):
    code, payload = run_json(capsys, "is-prime", "97")
    assert code == 0 and payload["is_prime"] is True
    assert payload["certainty"] == "deterministic"

    code, payload = run_json(capsys, "is-prime", "100")
    assert code == 1 and payload["is_prime"] is False


def test_in_p(capsys):
    assert run_json(capsys, "in-p", "--base", "10", "37")[0] == 0
    code, payload = run_json(capsys, "in-p", "--base", "10", "35")
    assert code == 1 and payload["reason"] == "not-prime"


def test_in_pstar_known_strings(capsys):
    code, payload = run_json(capsys, "in-pstar", "--base", "2", "100001")
    assert code == 1 and payload["member"] is False

    code, payload = run_json(capsys, "in-pstar", "--base", "2", "1111")
    assert code == 0 and payload["factors"] == ["11", "11"]


def test_fb_known_value(capsys):
    code, payload = run_json(capsys, "fb", "--base", "2", "--n", "5")
    assert code == 0
    assert payload == {"k_star": "3", "prime_found": "97"}


def test_fb_budget_exhaustion_exits_3(capsys):
    assert main(["fb", "--base", "2", "--n", "3", "--k-budget", "1"]) == 3


def test_hard_n(capsys):
    code, payload = run_json(capsys, "hard-n", "--base", "2", "--K", "4")
    assert code == 0
    assert (payload["N"], payload["fb_at_N"]) == ("9", "15")
    assert payload["scan_log"][-1] == ["9", "15"]


def test_lemma_witnesses(capsys):
    code, payload = run_json(capsys, "lemma-witnesses", "--base", "2", "--n", "5")
    assert code == 0
    assert payload["witnesses"] == ["100001", "1000001"]


def test_certify_verify_round_trip(capsys, tmp_path):
    code, out = run(capsys, "certify", "--base", "2", "--K", "3")
    assert code == 0
    path = tmp_path / "certs.json"
    path.write_text(out)

    code, payload = run_json(capsys, "verify-cert", str(path))
    assert code == 0
    assert [r["valid"] for r in payload] == [True, True, True]


def test_verify_cert_from_stdin(capsys, monkeypatch):
    code, out = run(capsys, "certify", "--base", "10", "--K", "2")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, payload = run_json(capsys, "verify-cert", "-")
    assert code == 0 and all(r["valid"] for r in payload)


def test_verify_cert_tampered_field(capsys, tmp_path):
    code, out = run(capsys, "certify", "--base", "2", "--K", "1")
    certs = json.loads(out)
    certs[0]["r"] = "0"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(certs))

    code, payload = run_json(capsys, "verify-cert", str(path))
    assert code == 1
    assert payload[0]["valid"] is False
    assert payload[0]["violated"] == "divisibility"


def test_verify_cert_accepts_single_object(capsys, tmp_path):
    code, out = run(capsys, "certify", "--base", "3", "--K", "1")
    single = json.loads(out)[0]
    path = tmp_path / "one.json"
    path.write_text(json.dumps(single))
    code, payload = run_json(capsys, "verify-cert", str(path))
    assert code == 0 and len(payload) == 1


def test_verify_cert_usage_errors(capsys, tmp_path):
    assert main(["verify-cert", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert main(["verify-cert", str(bad)]) == 2
    bad.write_text("[42]")
    assert main(["verify-cert", str(bad)]) == 2


def test_pump_refute_json(capsys):
    code, payload = run_json(capsys, "pump-refute", "--base", "2", "--p", "2")
    assert code == 0
    assert payload["witness"] == "1111000000001"
    assert payload["refutes"] is True
    assert len(payload["rows"]) == 3


def test_pump_refute_human_table(capsys):
    code, out = run(
        capsys, "pump-refute", "--base", "2", "--p", "1", "--format", "human"
    )
    assert code == 0
    assert "witness s = 1100001" in out
    assert "x" in out and "|" in out
    assert "100001" in out
    assert "refuted" in out


def test_refute_dfa_finds_counterexample(capsys, tmp_path):
    path = tmp_path / "accept_all.dfa"
    path.write_text(ACCEPT_ALL)
    code, payload = run_json(
        capsys, "refute-dfa", str(path), "--language", "pstar", "--max-len", "4"
    )
    assert code == 0
    assert payload["string"] == "0" and payload["found"] is True


def test_refute_dfa_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(ACCEPT_ALL))
    code, payload = run_json(
        capsys, "refute-dfa", "-", "--language", "pb", "--max-len", "4"
    )
    assert code == 0 and payload["string"] == ""


def test_refute_dfa_none_within_budget_exits_3(capsys, tmp_path):
    path = tmp_path / "trie.dfa"
    path.write_text(star_trie_text(4))
    code, payload = run_json(
        capsys, "refute-dfa", str(path), "--language", "pstar", "--max-len", "4"
    )
    assert code == 3
    assert payload == {"found": False, "max_len": 4}


def test_refute_dfa_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.dfa"
    path.write_text("base 2\nstates 1\nstart 5\naccept\ntrans 0 0 0\ntrans 0 1 0\n")
    assert main(["refute-dfa", str(path), "--language", "pb", "--max-len", "2"]) == 2


def test_nerode_bound(capsys):
    code, payload = run_json(
        capsys, "nerode-bound", "--base", "2", "--language", "pstar", "--L", "1"
    )
    assert code == 0 and payload["lower_bound"] == 2


def test_usage_errors():
    assert main([]) == 2
    assert main(["no-such-command"]) == 2
    assert main(["fb", "--n", "5"]) == 2  # missing --base
    assert main(["fb", "--base", "2", "--n", "not-a-number"]) == 2


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    assert main(["pump-refute", "--help"]) == 0
