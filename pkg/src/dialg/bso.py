"""Bremner-Sanchez-Ortega expansion of a multilinear operation into dialgebra operations."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .terms import (
    LEFT,
    PLAIN,
    RIGHT,
    Poly,
    SignatureError,
    Term,
    canonical,
    degree,
    is_leaf,
    leaves,
    rename,
    sort_vars,
)


class BSOError(ValueError):
    pass


def _expand_term(t: Term, x: str) -> Term:
    pos = leaves(t).index(x)

    def go(s, lo):
        if is_leaf(s):
            return s
        op, u, v = s
        if op != PLAIN:
            raise SignatureError(f"BSO input must be a plain polynomial, found {op!r}")
        du = degree(u)
        if lo <= pos < lo + du:
            tag = LEFT
        elif lo + du <= pos < lo + degree(s):
            tag = RIGHT
        else:
            tag = LEFT if pos < lo else RIGHT
        return (tag, go(u, lo), go(v, lo + du))

    return go(t, 0)


def arguments(p: Poly) -> list[str]:
    return sort_vars(p.variables())


def bso_expand(p: Poly, i, args=None) -> Poly:
    """Make argument ``i`` (1-based index into ``args``, or a variable name) the center.

    ``args`` defaults to the variables in sorted order (x, y, z, t, ...).
    """
    if not p.is_multilinear():
        raise BSOError("BSO input must be multilinear")
    fam = p.family()
    if fam not in (None, "algebra"):
        raise SignatureError(f"BSO input must be a plain polynomial, got {fam}")
    args = list(args) if args is not None else arguments(p)
    x = i if isinstance(i, str) else args[i - 1] if 1 <= i <= len(args) else None
    if x is None or x not in args:
        raise BSOError(f"no argument {i!r} among {args}")
    return canonical(Poly((_expand_term(t, x), c) for t, c in p.items()))


@dataclass(frozen=True)
class Relation:
    """``outputs[target] == sign * outputs[source]`` with variables renamed by ``mapping``."""

    target: int
    source: int
    mapping: tuple[tuple[str, str], ...]
    sign: int

    def describe(self, args) -> str:
        m = dict(self.mapping)
        lhs = f"w{self.target + 1}({', '.join(args)})"
        rhs = f"w{self.source + 1}({', '.join(m[a] for a in args)})"
        return f"{lhs} = {'-' if self.sign < 0 else ''}{rhs}"


@dataclass
class BSOFamily:
    args: list[str]
    outputs: list[Poly]
    relations: list[Relation]


def bso_family(p: Poly, args=None) -> BSOFamily:
    """All n expansions of ``p`` and the renaming relations among them."""
    args = list(args) if args is not None else arguments(p)
    outs = [bso_expand(p, k, args) for k in range(1, len(args) + 1)]
    rels = []
    for t in range(1, len(outs)):
        found = None
        for s in range(t):
            for perm in itertools.permutations(args):
                m = dict(zip(args, perm))
                r = canonical(rename(outs[s], m))
                if r == outs[t] or r == -outs[t]:
                    found = Relation(t, s, tuple(m.items()), 1 if r == outs[t] else -1)
                    break
            if found:
                break
        if found:
            rels.append(found)
    return BSOFamily(args, outs, rels)
