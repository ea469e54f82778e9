"""Text syntax for field elements.

Grammar (standard precedence, left associative):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-'* power
    power   := atom ('^' exponent)?
    atom    := INTEGER | 'q' | '(' expr ')'
    exponent:= INTEGER | '(' INTEGER ('/' '2')? ')'

Half-integer exponents (q^(1/2), q^(-3/2), ...) are only meaningful on q
itself; in numeric mode they additionally require q to be a perfect
square of a rational.  Every canonical string the library emits parses
back to the same scalar.
"""

from __future__ import annotations

import re
from .qfield import Field

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([q])|([+\-*/^()]))")


class FieldParseError(ValueError):
    """Parse failure; carries the offending position and token text."""

    def __init__(self, message: str, pos: int, token: str):
        super().__init__(f"{message} at position {pos}: {token!r}")
        self.pos = pos
        self.token = token


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        i, n = 0, len(text)
        while i < n:
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN_RE.match(text, i)
            if m is None:
                raise FieldParseError("unexpected character", i, text[i])
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("q", "q", m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
            i = m.end()
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("end", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok


class _Parser:
    def __init__(self, text: str, field: Field):
        self.tk = _Tokenizer(text)
        self.field = field

    def parse(self):
        value = self.expr()
        kind, tok, pos = self.tk.peek()
        if kind != "end":
            raise FieldParseError("trailing input", pos, tok)
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, tok, _ = self.tk.peek()
            if kind == "op" and tok in "+-":
                self.tk.next()
                rhs = self.term()
                value = value + rhs if tok == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, tok, pos = self.tk.peek()
            if kind == "op" and tok in "*/":
                self.tk.next()
                rhs = self.unary()
                if tok == "*":
                    value = value * rhs
                else:
                    if not rhs:
                        raise FieldParseError("division by zero", pos, tok)
                    value = value / rhs
            else:
                return value

    def unary(self):
        negate = False
        while True:
            kind, tok, _ = self.tk.peek()
            if kind == "op" and tok == "-":
                self.tk.next()
                negate = not negate
            else:
                break
        value = self.power()
        return -value if negate else value

    def power(self):
        base, is_q = self.atom()
        kind, tok, pos = self.tk.peek()
        if not (kind == "op" and tok == "^"):
            return base
        self.tk.next()
        num, halved = self.exponent()
        if halved:
            if not is_q:
                raise FieldParseError(
                    "half-integer exponents are only allowed on q", pos, tok
                )
            return self.field.q_half_pow(num)
        if num < 0 and not base:
            raise FieldParseError("negative power of zero", pos, tok)
        return base ** num

    def exponent(self) -> tuple[int, bool]:
        """Returns (k, halved): the exponent is k if not halved, else k/2."""
        kind, tok, pos = self.tk.next()
        if kind == "int":
            return int(tok), False
        if kind == "op" and tok == "(":
            sign = 1
            kind, tok, pos = self.tk.next()
            if kind == "op" and tok == "-":
                sign = -1
                kind, tok, pos = self.tk.next()
            if kind != "int":
                raise FieldParseError("expected integer exponent", pos, tok)
            k = sign * int(tok)
            halved = False
            kind, tok, pos = self.tk.next()
            if kind == "op" and tok == "/":
                kind, tok, pos = self.tk.next()
                if kind != "int" or tok != "2":
                    raise FieldParseError("only halves are allowed in exponents", pos, tok)
                halved = True
                kind, tok, pos = self.tk.next()
            if not (kind == "op" and tok == ")"):
                raise FieldParseError("expected ')' after exponent", pos, tok)
            return k, halved
        raise FieldParseError("expected exponent", pos, tok)

    def atom(self):
        """Returns (scalar, parsed-exactly-the-generator-q)."""
        kind, tok, pos = self.tk.next()
        if kind == "int":
            return self.field.scalar(int(tok)), False
        if kind == "q":
            return self.field.q, True
        if kind == "op" and tok == "(":
            value = self.expr()
            kind, tok, pos = self.tk.next()
            if not (kind == "op" and tok == ")"):
                raise FieldParseError("expected ')'", pos, tok)
            return value, False
        raise FieldParseError("expected a number, q or '('", pos, tok)


def parse_scalar(text: str, field: Field):
    """Parse a field-element string to a canonical scalar."""
    if not text.strip():
        raise FieldParseError("empty expression", 0, "")
    try:
        return _Parser(text, field).parse()
    except ZeroDivisionError:
        raise FieldParseError("division by zero", len(text), text) from None
