import random

import pytest

from hullforge import MonomialTransform
from hullforge.errors import ParseError
from hullforge.formats import (format_code, format_witness, parse_code,
                               parse_witness)

from helpers import (F4, F8, SMALL_FIELDS, ex31, ex41, random_code,
                     random_nonzero_vector, random_permutation)

EX31_TEXT = """q=5 p=5 m=1
n=7 k=3
1 0 0 0 0 2 0
0 1 0 2 2 0 4
0 0 1 1 3 0 3
"""


def test_parse_golden_file():
    code = parse_code(EX31_TEXT)
    assert code == ex31()


def test_format_parse_roundtrip_random():
    rng = random.Random(113)
    for _ in range(50):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(1, 7)
        k = rng.randint(1, n)
        code = random_code(rng, spec, n, k)
        assert parse_code(format_code(code)) == code


def test_extension_field_modulus_line():
    code = random_code(random.Random(1), F8, 5, 2)
    text = format_code(code)
    assert "modulus=1,1,0,1" in text
    assert parse_code(text) == code
    # omitted modulus line defaults to the same lexicographically
    # smallest irreducible
    stripped = "\n".join(ln for ln in text.splitlines()
                         if not ln.startswith("modulus="))
    assert parse_code(stripped) == code


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_code("q=5 p=5 m=1\nn=7 k=3\n1 0 0 0 0 2\n")
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        parse_code("q=5 p=5 m=1\nn=2 k=1\n1 x\n")
    assert err.value.line == 3 and err.value.column == 2
    with pytest.raises(ParseError):
        parse_code("q=6 p=6 m=1\nn=2 k=1\n1 1\n")
    with pytest.raises(ParseError):
        parse_code("q=25 p=5 m=1\nn=2 k=1\n1 1\n")  # q != p^m
    with pytest.raises(ParseError):
        parse_code("q=5 p=5 m=1\nmodulus=0,1\nn=2 k=1\n1 1\n")
    with pytest.raises(ParseError):
        parse_code("")
    with pytest.raises(ParseError):
        parse_code("q=5 p=5 m=1\nn=2 k=1\n1 1\n2 2\n")  # trailing rows
    with pytest.raises(ParseError):
        parse_code("q=5 p=5 m=1\nn=2 k=2\n1 0\n2 0\n")  # rank < k


def test_entry_out_of_range():
    with pytest.raises(ParseError) as err:
        parse_code("q=4 p=2 m=2\nn=3 k=1\n1 5 0\n")
    assert err.value.line == 3


def test_witness_roundtrip():
    rng = random.Random(127)
    for _ in range(30):
        spec = rng.choice(SMALL_FIELDS)
        n = rng.randint(1, 7)
        t = MonomialTransform(random_permutation(rng, n),
                              random_nonzero_vector(rng, spec, n))
        claims = {"h": rng.randint(0, 3), "n": n}
        t2, claims2 = parse_witness(format_witness(t, claims))
        assert t2 == t and claims2 == claims


def test_witness_parse_errors():
    with pytest.raises(ParseError):
        parse_witness("a=1 2 3\n")  # missing sigma
    with pytest.raises(ParseError):
        parse_witness("sigma=1 2\na=1 0\n")  # zero scaling
    with pytest.raises(ParseError):
        parse_witness("sigma=1 1\na=1 1\n")  # not a permutation
    with pytest.raises(ParseError):
        parse_witness("sigma=1 2\na=1 1\nclaim_x=3\n")
    with pytest.raises(ParseError):
        parse_witness("sigma=1 2\na=1 1\nwhatever\n")


def test_pure_lcd_golden_file_text():
    text = format_code(ex41())
    assert text.splitlines()[0] == "q=5 p=5 m=1"
    assert parse_code(text) == ex41()
