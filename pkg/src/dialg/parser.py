"""Text format for identities: parsing, printing, identity files.

Products must be parenthesized except for a single binary product at the top
of a term, since nonassociative products admit no precedence convention::

    signature: dialgebra
    # comments start with '#'
    left-assoc: (x -| y) -| z - x -| (y -| z) = 0
    dicom(x, y) - (x -| y) + (y |- x)

Operators: ``*`` plain product, ``-|`` left product, ``|-`` right product.
Macros (``com``, ``dicom``, ``as``, ``al``, ``ax``, ``ar``, ``J``, ``L``, ``S``,
``St``) stay symbolic inside :class:`Identity` until its polynomial is needed.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from .terms import (
    ALGEBRA,
    DIALGEBRA,
    LEFT,
    MACROS,
    PLAIN,
    RIGHT,
    Call,
    Expr,
    Lin,
    Poly,
    Prod,
    Slot,
    Term,
    Var,
    expand_macros,
    is_leaf,
)

OPS = (PLAIN, LEFT, RIGHT)
SIGNATURES = (ALGEBRA, DIALGEBRA)


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<op>-\||\|-|[*+\-/(),=])"
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), col0 + pos))
        pos = m.end()
    toks.append(_Tok("eof", "", col0 + pos))
    return toks


class _Parser:
    def __init__(self, text: str, line: int = 1, col0: int = 1):
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.line = line

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok.col)

    def expect(self, text: str) -> _Tok:
        tok = self.next()
        if tok.text != text:
            self.error(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok)
        return tok

    def identity(self) -> Expr:
        lhs = self.expr()
        if self.peek().text == "=":
            self.next()
            rhs = self.expr()
            lhs = Lin(((Fraction(1), lhs), (Fraction(-1), rhs)))
        if self.peek().kind != "eof":
            self.error(f"unexpected {self.peek().text!r}")
        return lhs

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.peek().text in ("+", "-"):
            sign = -1 if self.next().text == "-" else 1
        while True:
            c, e = self.term()
            if e is not None:
                terms.append((sign * c, e))
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("+", "-"):
                self.next()
                sign = -1 if tok.text == "-" else 1
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Lin(tuple(terms))

    def rational(self) -> Fraction:
        num = int(self.next().text)
        if self.peek().text == "/":
            self.next()
            tok = self.next()
            if tok.kind != "num":
                self.error("expected a denominator", tok)
            den = int(tok.text)
            if den == 0:
                self.error("zero denominator", tok)
            return Fraction(num, den)
        return Fraction(num)

    def term(self) -> tuple[Fraction, Expr | None]:
        if self.peek().kind != "num":
            return Fraction(1), self.product()
        c = self.rational()
        tok = self.peek()
        if tok.text == "*":
            self.next()
            return c, self.product()
        if tok.text == "(" or tok.kind == "ident":
            return c, self.product()
        if c != 0:
            self.error("a constant term must be 0", tok)
        return c, None

    def product(self) -> Expr:
        left = self.factor()
        tok = self.peek()
        if tok.kind == "op" and tok.text in OPS:
            self.next()
            right = self.factor()
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text in OPS:
                self.error("ambiguous unparenthesized product; add parentheses", nxt)
            return Prod(tok.text, left, right)
        return left

    def factor(self) -> Expr:
        tok = self.next()
        if tok.text == "(":
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind == "ident":
            if self.peek().text == "(":
                return self.call(tok)
            return Var(tok.text)
        self.error(f"expected a variable, macro or '(' but found {tok.text or 'end of input'!r}", tok)

    def call(self, name: _Tok) -> Expr:
        macro = MACROS.get(name.text)
        if macro is None:
            self.error(f"unknown macro {name.text!r}", name)
        self.expect("(")
        args = [self.expr()]
        while self.peek().text == ",":
            self.next()
            args.append(self.expr())
        self.expect(")")
        if len(args) != macro.arity:
            self.error(f"macro {name.text} takes {macro.arity} arguments, got {len(args)}", name)
        return Call(name.text, tuple(args))


def _expr_signatures(e) -> set[str]:
    if isinstance(e, Var):
        return set()
    if isinstance(e, Prod):
        own = {ALGEBRA if e.op == PLAIN else DIALGEBRA}
        return own | _expr_signatures(e.left) | _expr_signatures(e.right)
    if isinstance(e, Call):
        out = {MACROS[e.name].signature}
        for a in e.args:
            out |= _expr_signatures(a)
        return out
    if isinstance(e, Lin):
        out = set()
        for _, sub in e.terms:
            out |= _expr_signatures(sub)
        return out
    return set()


class Identity:
    """A polynomial asserted to vanish identically, with an optional label.

    ``body`` is either an expression (macros unexpanded) or a ready :class:`Poly`.
    """

    def __init__(self, body, label: str | None = None, text: str | None = None):
        self.expr = body
        self.label = label
        self.text = text

    @cached_property
    def poly(self) -> Poly:
        return expand_macros(self.expr, canonical_form=False)

    @property
    def signature(self) -> str | None:
        if isinstance(self.expr, Poly):
            fam = self.expr.family()
            return fam if fam in SIGNATURES else fam
        sigs = _expr_signatures(self.expr)
        return sigs.pop() if len(sigs) == 1 else None

    @property
    def is_multilinear(self) -> bool:
        return self.poly.is_multilinear()

    def __repr__(self):
        return f"Identity({self.label!r}: {to_text(self.poly)})"


@dataclass
class IdentityFile:
    signature: str | None
    identities: list[Identity] = field(default_factory=list)

    def __getitem__(self, label: str) -> Identity:
        for ident in self.identities:
            if ident.label == label:
                return ident
        raise KeyError(label)

    def __iter__(self):
        return iter(self.identities)

    def __len__(self):
        return len(self.identities)

    @property
    def labels(self) -> list[str]:
        return [i.label for i in self.identities]


def parse_expr(text: str, line: int = 1, col0: int = 1) -> Expr:
    return _Parser(text, line, col0).identity()


def parse_identity(text: str, label: str | None = None) -> Identity:
    return Identity(parse_expr(text), label=label, text=text.strip())


def parse_poly(text: str) -> Poly:
    """Parse and expand one identity; the result is not canonicalized."""
    return parse_identity(text).poly


_LABEL = re.compile(r"^\s*([A-Za-z0-9_.'\-]+)\s*:")


def parse(text: str) -> IdentityFile:
    """Parse an identity file: optional ``signature:`` header, then labeled lines."""
    signature = None
    out = IdentityFile(None)
    seen: set[str] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _LABEL.match(body)
        label = m.group(1) if m else None
        rest_col = (m.end() if m else 0) + 1
        rest = body[m.end():] if m else body
        if first and label == "signature":
            signature = rest.strip()
            if signature not in SIGNATURES:
                raise ParseError(f"unknown signature {signature!r}", lineno, rest_col)
            first = False
            continue
        first = False
        if label is None:
            label = str(len(out.identities) + 1)
        if label in seen:
            raise ParseError(f"duplicate label {label!r}", lineno, 1)
        seen.add(label)
        expr = parse_expr(rest, lineno, rest_col)
        sigs = _expr_signatures(expr)
        if len(sigs) > 1:
            raise ParseError("identity mixes algebra and dialgebra operations", lineno, rest_col)
        if signature and sigs and sigs != {signature}:
            raise ParseError(f"identity is not in the declared signature {signature}", lineno, rest_col)
        out.identities.append(Identity(expr, label=label, text=rest.strip()))
    if signature is None:
        sigs = set()
        for ident in out.identities:
            sigs |= _expr_signatures(ident.expr)
        signature = sigs.pop() if len(sigs) == 1 else None
    out.signature = signature
    return out


def load(path) -> IdentityFile:
    return parse(Path(path).read_text(encoding="utf-8"))


# -- printing ----------------------------------------------------------------

def term_to_text(t: Term) -> str:
    """Fully parenthesized text of a term, without outer parentheses."""
    if is_leaf(t):
        return t
    op = t[0]
    if isinstance(op, Slot):
        sub = "" if op.j is None else f"_{op.j}"
        return "{" + ", ".join(term_to_text(c) for c in t[1:]) + "}" + sub
    parts = [term_to_text(c) if is_leaf(c) or isinstance(c[0], Slot) else f"({term_to_text(c)})" for c in t[1:]]
    sep = "*" if op == PLAIN else f" {op} "
    return sep.join(parts)


def to_text(p: Poly) -> str:
    """Print a polynomial; a lone monomial with coefficient 1 is not wrapped."""
    items = p.sorted_items()
    if not items:
        return "0"
    if len(items) == 1 and items[0][1] == 1:
        return term_to_text(items[0][0])
    out = []
    for k, (t, c) in enumerate(items):
        body = term_to_text(t)
        if not is_leaf(t) and not isinstance(t[0], Slot):
            body = f"({body})"
        mag = abs(c)
        piece = body if mag == 1 else f"{mag} * {body}"
        if k == 0:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {piece}")
    return " ".join(out)


def term_to_json(t: Term):
    if is_leaf(t):
        return t
    op = t[0]
    tag = {"op": "slot", "n": op.n, "j": op.j} if isinstance(op, Slot) else {"op": op}
    return {**tag, "args": [term_to_json(c) for c in t[1:]]}


def poly_to_json(p: Poly, label: str | None = None) -> dict:
    return {
        "label": label,
        "signature": p.family(),
        "monomials": [{"coef": str(c), "tree": term_to_json(t)} for t, c in p.sorted_items()],
    }


def file_to_json(f: IdentityFile) -> str:
    doc = {
        "schema": 1,
        "signature": f.signature,
        "identities": [poly_to_json(i.poly, i.label) for i in f.identities],
    }
    return json.dumps(doc, indent=2)


def file_to_text(f: IdentityFile) -> str:
    lines = []
    if f.signature:
        lines.append(f"signature: {f.signature}")
    lines += [f"{i.label}: {to_text(i.poly)}" for i in f.identities]
    return "\n".join(lines) + "\n"
