"""Text and JSON forms of symmetric functions and tensors.

Expression grammar (ASCII, whitespace ignored)::

    expr   ::= ['+'|'-'] term (('+'|'-') term)*
    term   ::= factor ('*' factor)*
    factor ::= integer ['/' integer] | basis '[' [integer (',' integer)*] ']'
    basis  ::= 'm' | 'e' | 'h' | 'p' | 's'

A term with several basis factors is their product. The result keeps the
basis when every factor uses the same one, otherwise it is expressed in s.
"""
import json
from fractions import Fraction

from .birig import TensorElem
from .errors import DomainError, ParseError
from .partitions import Partition
from .symfunc import BASES, SymFunc, constant, format_coeff, mul, scale


class _Parser:
    def __init__(self, src, cap):
        self.src = src
        self.pos = 0
        self.cap = cap
        self.bases = set()

    def offset(self):
        return len(self.src[: self.pos].encode("utf-8"))

    def fail(self, message, expected=None):
        raise ParseError(message, self.offset(), expected)

    def skip(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer", "digit")
        return int(self.src[start:self.pos])

    def factor(self):
        ch = self.peek()
        if ch.isdigit():
            value = Fraction(self.integer())
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.fail("zero denominator")
                value /= den
            return value
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isalpha():
                self.pos += 1
            tag = self.src[start:self.pos]
            if tag not in BASES:
                self.pos = start
                self.fail(f"unknown basis {tag!r}", "one of m, e, h, p, s")
            if self.peek() != "[":
                self.fail("expected '['", "[")
            self.pos += 1
            parts = []
            if self.peek() != "]":
                parts.append(self.integer())
                while self.peek() == ",":
                    self.pos += 1
                    parts.append(self.integer())
            if self.peek() != "]":
                self.fail("expected ']'", "] or ,")
            bracket = self.pos
            self.pos += 1
            if any(k == 0 for k in parts) or any(a < b for a, b in zip(parts, parts[1:])):
                self.pos = bracket
                self.fail(f"{parts} is not a partition (parts must be positive and weakly decreasing)")
            self.bases.add(tag)
            return SymFunc(tag, {Partition(parts): 1}, cap=self.cap)
        if ch == "":
            self.fail("unexpected end of input", "term")
        self.fail(f"unexpected character {ch!r}", "term")

    def term(self):
        coeff = Fraction(1)
        elem = None
        while True:
            f = self.factor()
            if isinstance(f, Fraction):
                coeff *= f
            else:
                elem = f if elem is None else mul(elem, f)
            if self.peek() != "*":
                break
            self.pos += 1
        if elem is None:
            return constant(coeff, "s", cap=self.cap)
        return scale(coeff, elem)

    def expr(self):
        terms = []
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.src[self.pos] == "-" else 1
            self.pos += 1
        terms.append((sign, self.term()))
        while True:
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.fail(f"unexpected character {ch!r}", "+, - or end of input")
            self.pos += 1
            terms.append((-1 if ch == "-" else 1, self.term()))
        basis = next(iter(self.bases)) if len(self.bases) == 1 else "s"
        total = SymFunc(basis, {}, cap=self.cap)
        for sign, t in terms:
            total = total + (t if sign > 0 else -t)
        return total.to_basis(basis)


def parse_expression(src, cap=None):
    """Parse text such as ``3*s[2,1] - p[4] + 1``."""
    return _Parser(src, cap).expr()


def render(f, basis=None):
    return str(f if basis is None else f.to_basis(basis))


# JSON -----------------------------------------------------------------------


def symfunc_to_json(f):
    return {
        "basis": f.basis,
        "terms": [{"partition": list(lam), "coeff": format_coeff(c)} for lam, c in f.items()],
    }


def symfunc_from_json(data, cap=None):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        basis = data["basis"]
        terms = {Partition(t["partition"]): Fraction(t["coeff"]) for t in data["terms"]}
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed symmetric-function JSON: {exc}") from None
    return SymFunc(basis, terms, cap=cap)


def tensor_to_json(t):
    return {
        "bases": list(t.bases),
        "terms": [{"partitions": [list(lam) for lam in key], "coeff": format_coeff(c)} for key, c in t.items()],
    }


def tensor_from_json(data, cap=None):
    if isinstance(data, str):
        data = json.loads(data)
    try:
        terms = {tuple(Partition(p) for p in t["partitions"]): Fraction(t["coeff"]) for t in data["terms"]}
        return TensorElem(data["bases"], terms, cap=cap)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed tensor JSON: {exc}") from None


def scalar_to_json(value):
    return {"value": format_coeff(value)}


def scalar_from_json(data):
    return Fraction(data["value"])
