"""Recursive-descent parser for scalars and elements of k_q[x, y].

Grammar (whitespace ignored)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ['^' ['-'] nat]
    atom   := nat | 'x' | 'y' | 'q' | 'z' | '(' expr ')'

Products are formed in k_q[x, y], so ``x*y`` parses to q*y*x.  Division and
negative powers are allowed only for scalars.  ``z`` is the primitive root
of unity generating the coefficient field (only useful for extended fields).
"""

import re

from .errors import ModeError, ParseError
from .qalgebra import Automorphism, QElem

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(src):
    toks = []
    pos = 0
    n = len(src)
    while pos < n:
        m = _TOKEN.match(src, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src, field):
        self.src = src
        self.field = field
        self.toks = _tokenize(src)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            got = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {value!r}, got {got}", tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return out

    def expr(self):
        tok = self.peek()
        sign = 1
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        out = self.term()
        if sign < 0:
            out = -out
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                out = out + rhs if tok[1] == "+" else out - rhs
            else:
                return out

    def term(self):
        out = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "*/":
                self.take()
                rhs = self.factor()
                if tok[1] == "*":
                    out = out * rhs
                else:
                    if not rhs.is_scalar():
                        raise ParseError("division by a non-scalar", tok[2])
                    c = rhs.coefficient(0, 0)
                    if not c:
                        raise ParseError("division by zero", tok[2])
                    out = out.scale(c.inverse())
            else:
                return out

    def factor(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if not (tok[0] == "op" and tok[1] == "^"):
            return base
        self.take()
        neg = False
        if self.peek()[:2] == ("op", "-"):
            self.take()
            neg = True
        tok = self.take()
        if tok[0] != "num":
            raise ParseError("exponent must be a natural number", tok[2])
        e = int(tok[1])
        if neg:
            if not base.is_scalar() or not base:
                raise ParseError("negative powers need a nonzero scalar base", tok[2])
            return QElem.scalar(self.field, base.coefficient(0, 0) ** (-e))
        return base**e

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        F = self.field
        if kind == "num":
            return QElem.scalar(F, int(val))
        if kind == "name":
            if val == "x":
                return QElem.x(F)
            if val == "y":
                return QElem.y(F)
            if val == "q":
                return QElem.scalar(F, F.q)
            if val == "z":
                return QElem.scalar(F, F.generator)
            raise ParseError(f"unknown name {val!r}", pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_expr(src, field):
    """Parse an element of k_q[x, y] over ``field``."""
    return _Parser(src, field).parse()


def parse_scalar(src, field):
    """Parse a coefficient-field literal such as ``(q^2-1)/(q+1)``."""
    a = parse_expr(src, field)
    if not a.is_scalar():
        raise ParseError(f"{src!r} is not a scalar")
    return a.coefficient(0, 0)


def _split_top_level(s, sep=","):
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_automorphism(src, field):
    """``toric:<mu1>,<mu2>`` or ``flip:<mu1>,<mu2>``."""
    kind, sep, rest = src.partition(":")
    kind = kind.strip().lower()
    if not sep or kind not in ("toric", "flip"):
        raise ParseError(f"automorphism must look like toric:a,b or flip:a,b, got {src!r}")
    parts = _split_top_level(rest)
    if len(parts) != 2:
        raise ParseError(f"automorphism needs two scalars, got {src!r}")
    mu1, mu2 = (parse_scalar(p, field) for p in parts)
    if not mu1 or not mu2:
        raise ParseError("automorphism scalars must be nonzero")
    if kind == "flip":
        if not field.is_minus_one:
            raise ModeError("flip automorphisms need --field cyclotomic:2 (q = -1)")
        return Automorphism.flip(field, mu1, mu2)
    return Automorphism.toric(field, mu1, mu2)


def parse_field_mode(src):
    """``generic`` or ``cyclotomic:<t>`` (t >= 2)."""
    from .coeffield import generic_field, root_of_unity_field

    s = src.strip().lower()
    if s == "generic":
        return generic_field()
    kind, sep, t = s.partition(":")
    if kind == "cyclotomic" and sep:
        try:
            n = int(t)
        except ValueError:
            raise ParseError(f"bad root-of-unity order {t!r}") from None
        if n < 2:
            raise ModeError("root-of-unity order must be at least 2")
        return root_of_unity_field(n)
    raise ParseError(f"field must be 'generic' or 'cyclotomic:<t>', got {src!r}")


__all__ = ["parse_automorphism", "parse_expr", "parse_field_mode", "parse_scalar"]
