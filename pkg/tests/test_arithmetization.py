import numpy as np
import pytest

from scripts.arithmetization import (
    InvalidCodeError, PlanePoint, Tag, decode, decode_term, diag, encode, encode_term, instance_at_code,
    is_code, liar, pair, quote, section_indices, sub_code, sub_total, unpair,
)
from scripts.generators import FormulaGenerator
from scripts.satisfaction import NATURALS, TruthStatus, eval_nat, eval_term
from scripts.syntax import (
    ARITHMETIC, ARITHMETIC_CODED, App, Const, Eq, FreeVariableError, Not, Numeral, Var, free_vars, numeral,
    parse_formula, substitute,
)


def test_pairing():
    assert [pair(0, 0), pair(1, 0), pair(0, 1), pair(2, 0), pair(1, 1)] == [0, 1, 2, 3, 4]
    assert unpair(4) == PlanePoint(1, 1)
    assert all(unpair(pair(a, b)) == (a, b) for a in range(20) for b in range(20))
    with pytest.raises(ValueError):
        pair(-1, 0)


def test_code_layout():
    phi = Eq(Const("0"), Const("0"))
    record = bytes([0x01, Tag.EQ, Tag.CONST, 1, ord("0"), Tag.CONST, 1, ord("0")])
    assert encode(phi) == int.from_bytes(record, "big")


def test_numeral_payload_is_length_prefixed():
    record = bytes([0x01, Tag.NUMERAL, 2, 0x01, 0x00])
    assert encode_term(Numeral(256)) == int.from_bytes(record, "big")
    assert decode_term(int.from_bytes(record, "big")) == Numeral(256)


@pytest.mark.parametrize("text", [
    "0 = 0",
    "forall x. exists y. x < y",
    "~(x + 1 = y * 12345678901234567890)",
    "sub(x, pair(y, 1)) = 0 -> x = 0 | exists v7. v7 < x",
])
def test_decode_inverts_encode(text):
    phi = parse_formula(text, ARITHMETIC_CODED)
    assert decode(encode(phi)) == phi


def test_codes_are_distinct():
    texts = ["0 = 0", "0 = 1", "1 = 0", "0 < 1", "~0 = 0", "exists x. x = 0", "forall x. x = 0",
             "exists y. y = 0", "2 = 0", "1 + 1 = 0"]
    codes = {encode(parse_formula(t)) for t in texts}
    assert len(codes) == len(texts)


@pytest.mark.parametrize("code", [0, 1, 2, 0x0104, 0x01FF])
def test_malformed_codes(code):
    with pytest.raises(InvalidCodeError):
        decode(code)
    assert not is_code(code)


def test_trailing_bytes_are_rejected():
    code = encode(parse_formula("0 = 0"))
    with pytest.raises(InvalidCodeError, match="trailing"):
        decode(code * 256)


def test_decode_against_a_signature():
    code = encode(parse_formula("sub(0, 0) = 0", ARITHMETIC_CODED))
    assert is_code(code)
    assert not is_code(code, ARITHMETIC)


def test_error_names_the_node():
    # conjunction whose right operand is cut off
    record = bytes([0x01, Tag.AND, Tag.EQ, Tag.CONST, 1, ord("0"), Tag.CONST, 1, ord("0")])
    with pytest.raises(InvalidCodeError) as excinfo:
        decode(int.from_bytes(record, "big"))
    assert excinfo.value.path == "root.right"


def test_sub_code():
    phi = parse_formula("x = 0")
    assert sub_code(encode(phi), 5) == encode(Eq(Numeral(5), Const("0")))
    closed = parse_formula("0 = 0")
    assert sub_code(encode(closed), 5) == encode(closed)
    assert sub_total(7, 3) == 7


def test_quote():
    phi = parse_formula("0 = 0")
    assert quote(phi) == numeral(encode(phi))


@pytest.mark.parametrize("text", ["x = x", "exists y. x = y + y", "x < 10"])
def test_diagonal_term_denotes_the_code(text):
    phi = parse_formula(text, ARITHMETIC_CODED)
    psi = substitute(phi, 0, App("sub", (Var(0), Var(0))))
    code = encode(psi)
    sigma = diag(phi)
    assert sigma == substitute(psi, 0, numeral(code))
    assert eval_term(NATURALS, App("sub", (numeral(code), numeral(code)))) == encode(sigma)


def test_liar_negates():
    phi = parse_formula("x = x", ARITHMETIC_CODED)
    sigma = liar(phi)
    assert isinstance(sigma, Not)
    assert instance_at_code(phi, sigma) == Eq(quote(sigma), quote(sigma))


def test_diag_needs_exactly_v0():
    with pytest.raises(FreeVariableError):
        diag(parse_formula("0 = 0"))
    with pytest.raises(FreeVariableError):
        liar(parse_formula("x = y"))


def test_section_indices():
    assert section_indices(0, 10) == [(0, 0), (1, 2), (2, 5), (3, 9)]
    assert section_indices(2, 3) == []
    assert section_indices(1, 8) == [(0, 1), (1, 4)]


def test_pairing_is_a_bijection():
    n = np.arange(100_001)
    points = np.array([unpair(int(k)) for k in n])
    a, b = points[:, 0], points[:, 1]
    assert np.array_equal((a + b) * (a + b + 1) // 2 + b, n)
    assert all(pair(int(x), int(y)) == k for k, (x, y) in zip(range(0, 100_001, 997), points[::997]))
    side = 300
    A, B = np.meshgrid(np.arange(side), np.arange(side), indexing="ij")
    inside = A + B < side
    values = np.array([pair(int(x), int(y)) for x, y in zip(A[inside], B[inside])])
    assert np.array_equal(np.sort(values), np.arange(side * (side + 1) // 2))


@pytest.mark.parametrize("seed", range(5))
def test_sub_code_agrees_with_substitution(seed):
    gen = FormulaGenerator(ARITHMETIC, seed=seed)
    rng = np.random.default_rng(seed)
    for _ in range(10):
        phi = gen.formula(4, (0, 1))
        n = int(rng.integers(0, 10**6))
        expected = substitute(phi, 0, numeral(n)) if 0 in free_vars(phi) else phi
        assert sub_code(encode(phi), n) == encode(expected)
        assert decode(sub_code(encode(phi), n)) == expected


@pytest.mark.parametrize("seed", range(3))
def test_neighbouring_numbers_decode_strictly(seed):
    gen = FormulaGenerator(ARITHMETIC_CODED, seed=seed)
    for _ in range(30):
        sigma = gen.formula(4, (0, 1, 2), term_depth=2)
        neighbour = encode(sigma) + 1
        if is_code(neighbour):
            assert decode(neighbour) != sigma
            assert encode(decode(neighbour)) == neighbour
        else:
            with pytest.raises(InvalidCodeError):
                decode(neighbour)


@pytest.mark.parametrize("text, expected", [
    ("x = x", TruthStatus.TRUE),
    ("x < 10", TruthStatus.FALSE),
    ("~(x = 0)", TruthStatus.TRUE),
    ("x = 0 | 1 < x", TruthStatus.TRUE),
])
def test_diagonal_sentence_is_a_fixed_point(text, expected):
    phi = parse_formula(text, ARITHMETIC_CODED)
    sigma = diag(phi)
    assert eval_nat(sigma).status is expected
    assert eval_nat(instance_at_code(phi, sigma)).status is expected
