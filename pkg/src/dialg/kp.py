"""Kolesnikov-Pozhidaev transform: identities of algebras to identities of dialgebras.

Each original operation ``{-,...,-}`` is split into n subscripted copies
``{-,...,-}_j``.  Binary outputs use ``-|`` for subscript 1 and ``|-`` for 2;
n-ary outputs keep :class:`~dialg.terms.Slot` tags.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .parser import Identity
from .terms import (
    LEFT,
    PLAIN,
    RIGHT,
    Poly,
    SignatureError,
    Slot,
    Term,
    canonical,
    degree,
    is_leaf,
    leaves,
    rename,
    sort_vars,
)

DEFAULT_NAMES = "xyztuvws"


class KPError(ValueError):
    pass


@dataclass
class KPIdentity:
    central: str
    identity: Identity
    duplicate_of: str | None = None


@dataclass
class KPResult:
    zero_identities: list[Identity]
    kp_identities: list[KPIdentity] = field(default_factory=list)

    def polys(self) -> list[Poly]:
        return [k.identity.poly for k in self.kp_identities]

    def __getitem__(self, central: str) -> Identity:
        for k in self.kp_identities:
            if k.central == central:
                return k.identity
        raise KeyError(central)


def _split_tag(j: int, n: int):
    if n == 2:
        return LEFT if j == 1 else RIGHT
    return Slot(j, n)


def _input_arity(p: Poly) -> int:
    arities = set()
    for t in p.monomials():
        stack = [t]
        while stack:
            s = stack.pop()
            if is_leaf(s):
                continue
            op = s[0]
            if op == PLAIN:
                arities.add(2)
            elif isinstance(op, Slot) and op.j is None:
                arities.add(op.n)
            else:
                raise SignatureError(f"KP input must use one unsubscripted operation, found {op!r}")
            stack.extend(s[1:])
    if len(arities) > 1:
        raise SignatureError(f"KP input mixes operations of arities {sorted(arities)}")
    return arities.pop() if arities else 2


def zero_identities(n: int, dedupe: bool = True) -> list[Identity]:
    """The 0-identities of n subscripted n-ary operations.

    Operation j with operation k in argument i (i != j) equals operation j with
    operation l in that argument.  Pairs with k = l are trivial and skipped;
    ``dedupe`` keeps one of each pair of identities equal up to sign.
    """
    if n < 2:
        raise KPError(f"the 0-identities need n >= 2, got {n}")
    out: list[Identity] = []
    seen: set = set()
    for i, j in itertools.permutations(range(1, n + 1), 2):
        for k, l in itertools.permutations(range(1, n + 1), 2):
            names = iter(DEFAULT_NAMES if 2 * n - 1 <= len(DEFAULT_NAMES) else [f"a{m}" for m in range(2 * n - 1)])
            outer = [None] * n
            for pos in range(n):
                if pos == i - 1:
                    inner = [next(names) for _ in range(n)]
                else:
                    outer[pos] = next(names)

            def build(sub):
                args = [(_split_tag(sub, n), *inner) if pos == i - 1 else outer[pos] for pos in range(n)]
                return (_split_tag(j, n), *args)

            p = Poly({build(k): 1, build(l): -1})
            key = frozenset((t, c) for t, c in p.items())
            neg = frozenset((t, -c) for t, c in p.items())
            if dedupe and (key in seen or neg in seen):
                continue
            seen.add(key)
            out.append(Identity(p, label=f"zero[i={i},j={j},k={k},l={l}]"))
    return out


def _kp_term(t: Term, central: str, n: int) -> Term:
    """Apply the subscript rule to every operation of one monomial."""
    ls = leaves(t)
    pos = ls.index(central)

    def go(s, lo):
        if is_leaf(s):
            return s
        kids = []
        j = None
        off = lo
        for arg, ch in enumerate(s[1:], 1):
            d = degree(ch)
            if off <= pos < off + d:
                j = arg  # the central argument occurs in argument j
            kids.append(go(ch, off))
            off += d
        if j is None:
            j = 1 if pos < lo else n  # central lies to the left / right of this operation
        return (_split_tag(j, n), *kids)

    return go(t, 0)


def kp_identity(identity, central: str) -> Identity:
    """The KP identity of a multilinear identity for one choice of central variable."""
    ident = identity if isinstance(identity, Identity) else Identity(identity)
    p = ident.poly
    n = _input_arity(p)
    if not p.is_multilinear():
        raise KPError("KP input must be multilinear; linearize it first")
    out = []
    for t, c in p.items():
        if central not in leaves(t):
            raise KPError(f"central variable {central} is missing from a monomial")
        out.append((_kp_term(t, central, n), c))
    label = f"{ident.label}[{central}]" if ident.label else None
    return Identity(Poly(out), label=label)


def _equal_up_to_renaming(p: Poly, q: Poly) -> bool:
    vs = p.variables()
    if vs != q.variables():
        return False
    cq = canonical(q)
    for perm in itertools.permutations(vs):
        r = canonical(rename(p, dict(zip(vs, perm))))
        if r == cq or r == -cq:
            return True
    return False


def kp_transform(identity, centrals=None) -> KPResult:
    """All KP identities of a multilinear identity, plus the 0-identities.

    Central variables default to every variable in sorted order.  Outputs equal
    to an earlier one up to renaming and sign are kept and marked.
    """
    ident = identity if isinstance(identity, Identity) else Identity(identity)
    p = ident.poly
    n = _input_arity(p)
    centrals = list(centrals) if centrals is not None else sort_vars(p.variables())
    result = KPResult(zero_identities(n))
    for v in centrals:
        k = kp_identity(ident, v)
        dup = next(
            (prev.central for prev in result.kp_identities if _equal_up_to_renaming(k.poly, prev.identity.poly)),
            None,
        )
        result.kp_identities.append(KPIdentity(v, k, dup))
    return result
