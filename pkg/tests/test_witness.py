import dataclasses
import json

import pytest

from oracles import brute_fb, naive_factorial_mod, oracle_in_pb_star
from primestar.errors import BudgetExceededError
from primestar.primelang import in_pb_star
from primestar.witness import (
    CompositenessCertificate,
    divisor_certificate,
    lemma_witnesses,
    proposition_N,
    smallest_hard_N,
    verify_certificate,
)


def test_proposition_N_materializes_small_cases():
    exponent = proposition_N(2, 1)
    assert (exponent.bK, exponent.value) == (2, 3)
    assert exponent.form == "(2)!+1"
    assert proposition_N(2, 2).value == 25


def test_proposition_N_goes_symbolic():
    exponent = proposition_N(10, 3)
    assert exponent.value is None
    assert exponent.bK == 30
    assert exponent.form == "(30)!+1"
    # Residues still work: 30! = 0 mod 7, so (30)!+1 = 1 mod 7.
    assert exponent.residue(7) == 1
    assert exponent.residue(2) == (naive_factorial_mod(30, 2) + 1) % 2


def test_divisor_certificate_known_values():
    c = divisor_certificate(2, 1, 1)
    assert (c.modulus, c.order, c.residue) == (3, 2, 1)
    c = divisor_certificate(2, 2, 2)
    assert (c.modulus, c.order, c.residue) == (5, 4, 1)
    c = divisor_certificate(10, 1, 1)
    assert (c.modulus, c.order, c.residue) == (11, 2, 1)


def test_certificates_verify_across_grid():
    for b in (2, 3, 10):
        for K in (1, 2, 3):
            for k in range(1, K + 1):
                check = verify_certificate(divisor_certificate(b, K, k))
                assert check.valid, (b, K, k, check.violated)


def test_certificate_divides_materialized_value():
    # b=2, K=1, k=1: N = 2!+1 = 3 and the certified divisor 3 divides
    # 1 * 2**3 + 1 = 9 by direct full-width division.
    c = divisor_certificate(2, 1, 1)
    N = proposition_N(2, 1).value
    assert N == 3
    assert (c.k * c.base**N + 1) % c.modulus == 0

    # Same full-width check wherever N materializes and stays small; (10, 1)
    # is already symbolic since 10! + 1 exceeds the materialization budget.
    for b, K in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2)):
        N = proposition_N(b, K).value
        assert N is not None
        for k in range(1, K + 1):
            c = divisor_certificate(b, K, k)
            assert (k * b**N + 1) % c.modulus == 0, (b, K, k)


def test_verify_names_first_violated_invariant():
    good = divisor_certificate(2, 1, 1)

    tampered = dataclasses.replace(good, residue=0)
    check = verify_certificate(tampered)
    assert not check.valid and check.violated == "divisibility"

    tampered = dataclasses.replace(good, modulus=6)  # gcd(2, 6) != 1
    check = verify_certificate(tampered)
    assert not check.valid and check.violated == "coprimality"

    tampered = dataclasses.replace(good, modulus=9)  # coprime, wrong modulus
    check = verify_certificate(tampered)
    assert not check.valid and check.violated == "modulus"

    tampered = dataclasses.replace(good, order=4, residue=3)
    check = verify_certificate(tampered)
    assert not check.valid and check.violated == "order"

    tampered = dataclasses.replace(good, k=0)
    check = verify_certificate(tampered)
    assert not check.valid and check.violated == "shape"


def test_certificate_json_round_trip():
    for b, K, k in ((2, 1, 1), (2, 3, 2), (10, 3, 3)):
        c = divisor_certificate(b, K, k)
        blob = json.dumps(c.to_json_dict())
        again = CompositenessCertificate.from_json_dict(json.loads(blob))
        assert again == c
        assert verify_certificate(again).valid


def test_certificate_json_values_are_strings():
    payload = divisor_certificate(2, 2, 1).to_json_dict()
    assert set(payload) == {"b", "K", "N_form", "bK", "k", "m", "d", "r"}
    assert all(isinstance(v, str) for v in payload.values())
    assert payload["N_form"] == "(4)!+1"


def test_certificate_json_missing_field():
    payload = divisor_certificate(2, 1, 1).to_json_dict()
    del payload["m"]
    with pytest.raises(ValueError):
        CompositenessCertificate.from_json_dict(payload)


def test_smallest_hard_N_known_scans():
    result = smallest_hard_N(2, 1, 20, 100)
    assert (result.N, result.fb_at_N) == (3, 2)

    result = smallest_hard_N(2, 4, 20, 100)
    assert (result.N, result.fb_at_N) == (9, 15)
    # Every exponent scanned before N stayed at or below the threshold.
    assert all(f <= 4 for n, f in result.scan_log if n < result.N)
    assert result.scan_log[-1] == (9, 15)
    assert [n for n, _ in result.scan_log] == list(range(1, 10))


def test_smallest_hard_N_budget_carries_log():
    with pytest.raises(BudgetExceededError) as err:
        smallest_hard_N(2, 10**6, n_limit=3)
    assert len(err.value.details["scan_log"]) == 3


def test_lemma_witnesses_known_families():
    assert [str(w) for w in lemma_witnesses(2, 5)] == ["100001", "1000001"]
    assert lemma_witnesses(2, 4) == []
    assert lemma_witnesses(10, 1) == []


def test_lemma_witnesses_values_and_rejection():
    for b, n in ((2, 5), (2, 9), (3, 3), (10, 2)):
        witnesses = lemma_witnesses(b, n)
        assert len(witnesses) == brute_fb(b, n) - 1
        for k, w in enumerate(witnesses, start=1):
            assert w.value == k * b**n + 1
            assert not in_pb_star(str(w), b)[0]
            assert not oracle_in_pb_star(str(w), b)
