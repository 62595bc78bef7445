import random

import pytest

from primestar.baseb import (
    CanonicalNumeral,
    from_base,
    parse_digits,
    to_base,
    witness_numeral,
)
from primestar.errors import NumeralError


def test_known_encodings():
    assert str(to_base(0, 2)) == "0"
    assert str(to_base(97, 2)) == "1100001"
    assert str(to_base(97, 10)) == "97"
    assert str(to_base(255, 16)) == "ff"
    assert str(to_base(35, 36)) == "z"


def test_round_trip_many_bases():
    rng = random.Random(3)
    for _ in range(300):
        b = rng.randrange(2, 37)
        n = rng.randrange(0, 10**12)
        numeral = to_base(n, b)
        assert numeral.value == n
        assert from_base(str(numeral), b) == n
        # Independent cross-check against the built-in parser.
        assert int(str(numeral), b) == n


def test_parse_digits_positions():
    assert parse_digits("102", 3) == (1, 0, 2)
    assert parse_digits("", 2) == ()
    with pytest.raises(NumeralError) as err:
        parse_digits("12x1", 10)
    assert err.value.position == 2
    with pytest.raises(NumeralError) as err:
        parse_digits("19", 8)
    assert err.value.position == 1


def test_from_base_rejects_non_canonical():
    with pytest.raises(NumeralError):
        from_base("", 2)
    with pytest.raises(NumeralError) as err:
        from_base("01", 2)
    assert err.value.position == 0
    assert from_base("0", 2) == 0  # the one canonical leading-zero case


def test_numeral_invariants():
    with pytest.raises(NumeralError):
        CanonicalNumeral((), 2)
    with pytest.raises(NumeralError):
        CanonicalNumeral((2,), 2)
    with pytest.raises(NumeralError):
        CanonicalNumeral((0, 1), 2)
    with pytest.raises(ValueError):
        CanonicalNumeral((1,), 1)
    assert len(CanonicalNumeral((1, 0, 1), 2)) == 3


def test_big_base_numerals_exist_but_do_not_render():
    numeral = to_base(1000, 100)  # in-memory numerals allow any base >= 2
    assert numeral.digits == (10, 0)
    assert numeral.value == 1000
    with pytest.raises(ValueError):
        str(numeral)


def test_witness_numeral_shape_and_value():
    w = witness_numeral(2, 5, 3)
    assert str(w) == "1100001"
    assert w.value == 3 * 2**5 + 1

    w = witness_numeral(10, 1, 1)
    assert str(w) == "11"

    # Concatenation (k)_b 0^(n-1) 1 and the arithmetic k*b^n + 1 agree.
    for b in (2, 3, 10, 16):
        for n in range(1, 6):
            for k in range(1, 8):
                w = witness_numeral(b, n, k)
                assert w == to_base(k * b**n + 1, b)


def test_witness_numeral_preconditions():
    with pytest.raises(ValueError):
        witness_numeral(2, 0, 1)
    with pytest.raises(ValueError):
        witness_numeral(2, 3, 0)
