"""
Goedel coding, Cantor pairing, substitution on codes and the diagonal construction.

A code is the big-endian integer of a byte record that starts with the marker byte
0x01.  Every node is written as its tag byte followed by its payload:

    tag  node        payload
    0    variable    index
    1    constant    name
    2    application name, argument count, argument records
    3    numeral     value (at least 2)
    4    equation    left term record, right term record
    5    relation    name, argument count, argument records
    6    negation    body record
    7    conjunction left record, right record
    8    disjunction left record, right record
    9    implication left record, right record
    10   exists      variable index, body record
    11   forall      variable index, body record

Naturals are a varint byte length followed by the big-endian bytes (no leading zero
byte); names are a varint byte length followed by UTF-8.  Tags are frozen: changing
them changes every code.  Records grow linearly with the tree, which keeps diagonal
sentences small enough to evaluate.
"""
import logging
from enum import IntEnum
from functools import lru_cache
from math import isqrt
from typing import List, NamedTuple, NewType, Optional, Tuple

from scripts.syntax import (
    And, App, Const, Eq, Exists, Forall, Formula, FreeVariableError, Implies, Not, Numeral,
    Or, Rel, SYMBOL_RE, Signature, Term, Var, check_formula, free_vars, numeral, substitute,
)
from scripts.utils import log_decorator

logger = logging.getLogger(__name__)

GoedelCode = NewType("GoedelCode", int)
MARKER = 0x01


class InvalidCodeError(ValueError):
    def __init__(self, message: str, path: str = "root"):
        self.path = path
        super().__init__(f"invalid code at {path}: {message}")


class Tag(IntEnum):
    VAR = 0
    CONST = 1
    APP = 2
    NUMERAL = 3
    EQ = 4
    REL = 5
    NOT = 6
    AND = 7
    OR = 8
    IMPLIES = 9
    EXISTS = 10
    FORALL = 11


_BINARY = {And: Tag.AND, Or: Tag.OR, Implies: Tag.IMPLIES}
_BINARY_NODES = {tag: cls for cls, tag in _BINARY.items()}


# pairing

class PlanePoint(NamedTuple):
    row: int
    col: int


def pair(a: int, b: int) -> int:
    """Cantor pairing (a + b)(a + b + 1)/2 + b."""
    if a < 0 or b < 0:
        raise ValueError("pair is defined on naturals")
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(n: int) -> PlanePoint:
    if n < 0:
        raise ValueError("unpair is defined on naturals")
    w = (isqrt(8 * n + 1) - 1) // 2
    col = n - w * (w + 1) // 2
    return PlanePoint(w - col, col)


# encoding

def _write_varint(out: bytearray, n: int) -> None:
    while True:
        low = n & 0x7F
        n >>= 7
        if n:
            out.append(low | 0x80)
        else:
            out.append(low)
            return


def _write_nat(out: bytearray, n: int) -> None:
    size = (n.bit_length() + 7) // 8
    _write_varint(out, size)
    out.extend(n.to_bytes(size, "big"))


def _write_name(out: bytearray, name: str) -> None:
    raw = name.encode("utf-8")
    _write_varint(out, len(raw))
    out.extend(raw)


def _write_term(out: bytearray, t: Term) -> None:
    if isinstance(t, Var):
        out.append(Tag.VAR)
        _write_nat(out, t.index)
    elif isinstance(t, Const):
        out.append(Tag.CONST)
        _write_name(out, t.name)
    elif isinstance(t, Numeral):
        out.append(Tag.NUMERAL)
        _write_nat(out, t.value)
    else:
        out.append(Tag.APP)
        _write_name(out, t.name)
        _write_varint(out, len(t.args))
        for arg in t.args:
            _write_term(out, arg)


def _write_formula(out: bytearray, phi: Formula) -> None:
    if isinstance(phi, Eq):
        out.append(Tag.EQ)
        _write_term(out, phi.left)
        _write_term(out, phi.right)
    elif isinstance(phi, Rel):
        out.append(Tag.REL)
        _write_name(out, phi.name)
        _write_varint(out, len(phi.args))
        for arg in phi.args:
            _write_term(out, arg)
    elif isinstance(phi, Not):
        out.append(Tag.NOT)
        _write_formula(out, phi.body)
    elif isinstance(phi, (And, Or, Implies)):
        out.append(_BINARY[type(phi)])
        _write_formula(out, phi.left)
        _write_formula(out, phi.right)
    else:
        out.append(Tag.EXISTS if isinstance(phi, Exists) else Tag.FORALL)
        _write_nat(out, phi.var)
        _write_formula(out, phi.body)


def _finish(out: bytearray) -> GoedelCode:
    return GoedelCode(int.from_bytes(bytes(out), "big"))


def encode_term(t: Term) -> GoedelCode:
    out = bytearray([MARKER])
    _write_term(out, t)
    return _finish(out)


def encode(phi: Formula) -> GoedelCode:
    """The Goedel code of phi; injective on formulas."""
    out = bytearray([MARKER])
    _write_formula(out, phi)
    return _finish(out)


def quote(phi: Formula) -> Term:
    """The numeral of phi's code."""
    return numeral(encode(phi))


# decoding

class _Reader:
    """Strict reader: every accepted record is the unique encoding of its result."""

    def __init__(self, code: int):
        if code < 0:
            raise InvalidCodeError("codes are natural numbers")
        data = code.to_bytes((code.bit_length() + 7) // 8, "big")
        if not data or data[0] != MARKER:
            raise InvalidCodeError("missing record marker")
        self.data = data
        self.pos = 1

    def byte(self, path: str) -> int:
        if self.pos >= len(self.data):
            raise InvalidCodeError("record ends early", path)
        value = self.data[self.pos]
        self.pos += 1
        return value

    def varint(self, path: str) -> int:
        value, shift = 0, 0
        while True:
            b = self.byte(path)
            value |= (b & 0x7F) << shift
            shift += 7
            if not b & 0x80:
                if b == 0 and shift > 7:
                    raise InvalidCodeError("non-minimal length", path)
                return value

    def nat(self, path: str) -> int:
        size = self.varint(path)
        if self.pos + size > len(self.data):
            raise InvalidCodeError("record ends early", path)
        raw = self.data[self.pos:self.pos + size]
        if size and raw[0] == 0:
            raise InvalidCodeError("non-minimal natural", path)
        self.pos += size
        return int.from_bytes(raw, "big")

    def name(self, path: str) -> str:
        size = self.varint(path)
        if self.pos + size > len(self.data):
            raise InvalidCodeError("record ends early", path)
        try:
            text = self.data[self.pos:self.pos + size].decode("utf-8")
        except UnicodeDecodeError:
            raise InvalidCodeError("symbol name is not UTF-8", path) from None
        if not SYMBOL_RE.match(text):
            raise InvalidCodeError(f"{text!r} is not a symbol name", path)
        self.pos += size
        return text

    def args(self, path: str) -> Tuple[Term, ...]:
        count = self.varint(path)
        if count == 0:
            raise InvalidCodeError("application without arguments", path)
        return tuple(self.term(f"{path}.args[{i}]") for i in range(count))

    def term(self, path: str) -> Term:
        tag = self.byte(path)
        if tag == Tag.VAR:
            return Var(self.nat(path))
        if tag == Tag.CONST:
            return Const(self.name(path))
        if tag == Tag.APP:
            name = self.name(path)
            return App(name, self.args(path))
        if tag == Tag.NUMERAL:
            value = self.nat(path)
            if value < 2:
                raise InvalidCodeError("numeral node below 2", path)
            return Numeral(value)
        raise InvalidCodeError(f"tag {tag} is not a term tag", path)

    def formula(self, path: str) -> Formula:
        tag = self.byte(path)
        if tag == Tag.EQ:
            return Eq(self.term(f"{path}.left"), self.term(f"{path}.right"))
        if tag == Tag.REL:
            name = self.name(path)
            return Rel(name, self.args(path))
        if tag == Tag.NOT:
            return Not(self.formula(f"{path}.body"))
        if tag in _BINARY_NODES:
            return _BINARY_NODES[tag](self.formula(f"{path}.left"), self.formula(f"{path}.right"))
        if tag in (Tag.EXISTS, Tag.FORALL):
            var = self.nat(path)
            body = self.formula(f"{path}.body")
            return Exists(var, body) if tag == Tag.EXISTS else Forall(var, body)
        raise InvalidCodeError(f"tag {tag} is not a formula tag", path)

    def done(self) -> None:
        if self.pos != len(self.data):
            raise InvalidCodeError("trailing bytes after the record")


def decode_term(c: int) -> Term:
    reader = _Reader(c)
    t = reader.term("root")
    reader.done()
    return t


def decode(c: int, sig: Optional[Signature] = None) -> Formula:
    """
    Inverse of encode.  Raises InvalidCodeError naming the first malformed node;
    with a signature, the decoded formula must also be well formed over it.
    """
    reader = _Reader(c)
    phi = reader.formula("root")
    reader.done()
    if sig is not None:
        check_formula(phi, sig)
    return phi


def is_code(c: int, sig: Optional[Signature] = None) -> bool:
    try:
        decode(c, sig)
    except ValueError:
        return False
    return True


# substitution on codes

@lru_cache(maxsize=512)
def sub_code(c: int, n: int) -> GoedelCode:
    """encode(substitute(decode(c), v0, numeral(n))); c itself when v0 is not free."""
    phi = decode(c)
    if 0 not in free_vars(phi):
        return GoedelCode(c)
    return encode(substitute(phi, 0, numeral(n)))


def sub_total(c: int, n: int) -> int:
    """The interpretation of the function symbol sub over the naturals: c on non-codes."""
    try:
        return sub_code(c, n)
    except InvalidCodeError:
        return c


# diagonalization

def _require_v0(phi: Formula) -> None:
    if free_vars(phi) != frozenset((0,)):
        names = sorted(free_vars(phi))
        raise FreeVariableError(f"expected exactly the free variable v0, found {names}")


@log_decorator
def diag(phi: Formula) -> Formula:
    """
    The diagonal sentence of phi(v0).

    psi(v0) := phi(sub(v0, v0)) and sigma := psi(N) for N the code of psi, so the
    term sub(N, N) in sigma denotes the code of sigma itself.
    """
    _require_v0(phi)
    psi = substitute(phi, 0, App("sub", (Var(0), Var(0))))
    return substitute(psi, 0, numeral(encode(psi)))


@log_decorator
def liar(phi: Formula) -> Formula:
    """diag(~phi): a sentence whose truth value is the negation of phi at its own code."""
    _require_v0(phi)
    return diag(Not(phi))


def instance_at_code(phi: Formula, sigma: Formula) -> Formula:
    """phi(numeral(code of sigma))."""
    return substitute(phi, 0, quote(sigma))


def section_indices(n: int, length: int) -> List[Tuple[int, int]]:
    """(k, position) pairs of row n that fall inside a bit string of the given length."""
    out = []
    k = 0
    while True:
        position = pair(n, k)
        if position >= length:
            return out
        out.append((k, position))
        k += 1
