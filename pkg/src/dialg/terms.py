"""Terms, monomials and polynomials over one-operation algebras and dialgebras.

A term is either a variable name (``str``) or a tuple ``(op, child, ..., child)``.
The operation tag ``op`` is one of

* ``"*"``  the product of a one-operation (plain) algebra,
* ``"-|"`` the left dialgebra product,
* ``"|-"`` the right dialgebra product,
* a :class:`Slot` for a generic n-ary operation, optionally subscripted.

Tuples are hashable and compare structurally, which is all a monomial needs.
Polynomials are :class:`Poly` objects: sparse maps from terms to ``Fraction``.
Nothing here normalizes implicitly; :func:`canonicalize` computes the normal form
modulo the bar identities (free 0-dialgebra), and callers decide when to use it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Union

PLAIN = "*"
LEFT = "-|"
RIGHT = "|-"

ALGEBRA = "algebra"
DIALGEBRA = "dialgebra"


class SignatureError(ValueError):
    """Operation tags of different signatures were mixed."""


class MacroError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Slot:
    """Tag of a generic n-ary operation ``{-,...,-}_j`` (``j is None``: no subscript)."""

    j: int | None
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n-ary operation needs n >= 2, got {self.n}")
        if self.j is not None and not 1 <= self.j <= self.n:
            raise ValueError(f"subscript {self.j} out of range 1..{self.n}")


Term = Union[str, tuple]
Coefficient = Union[int, Fraction]


# -- variables ---------------------------------------------------------------

VAR_ORDER = "abcdexyztuvws"


def var_key(name: str):
    """Sort key for variable names: a..e, then x y z t u v w s, then the rest."""
    i = VAR_ORDER.find(name) if len(name) == 1 else -1
    return (0, i, "") if i >= 0 else (1, 0, name)


def sort_vars(names: Iterable[str]) -> list[str]:
    return sorted(set(names), key=var_key)


def fresh_vars(used: Iterable[str], count: int) -> list[str]:
    used = set(used)
    out = []
    k = 1
    while len(out) < count:
        name = f"_{k}"
        if name not in used:
            out.append(name)
        k += 1
    return out


# -- term structure ----------------------------------------------------------

def is_leaf(t: Term) -> bool:
    return isinstance(t, str)


def arity(op) -> int:
    return op.n if isinstance(op, Slot) else 2


def node(op, *children: Term) -> tuple:
    if len(children) != arity(op):
        raise ValueError(f"operation {op!r} takes {arity(op)} arguments, got {len(children)}")
    return (op, *children)


def leaves(t: Term) -> tuple[str, ...]:
    if is_leaf(t):
        return (t,)
    return tuple(itertools.chain.from_iterable(leaves(c) for c in t[1:]))


def degree(t: Term) -> int:
    if is_leaf(t):
        return 1
    return sum(degree(c) for c in t[1:])


def operations(t: Term) -> Iterator:
    if not is_leaf(t):
        yield t[0]
        for c in t[1:]:
            yield from operations(c)


def _op_family(op) -> str:
    if op == PLAIN:
        return ALGEBRA
    if op in (LEFT, RIGHT):
        return DIALGEBRA
    if isinstance(op, Slot):
        return f"nary:{op.n}"
    raise SignatureError(f"unknown operation tag {op!r}")


def family(t: Term) -> str | None:
    """Signature of a term: ``"algebra"``, ``"dialgebra"``, ``"nary:<n>"``, or None for a leaf."""
    fams = {_op_family(op) for op in operations(t)}
    if len(fams) > 1:
        raise SignatureError(f"mixed signatures {sorted(fams)} in one term")
    return fams.pop() if fams else None


def is_multilinear_term(t: Term) -> bool:
    ls = leaves(t)
    return len(set(ls)) == len(ls)


def subscript(op) -> int:
    if op == LEFT:
        return 1
    if op == RIGHT:
        return 2
    if isinstance(op, Slot) and op.j is not None:
        return op.j
    raise SignatureError(f"operation {op!r} carries no direction")


def _tag(j: int, like) -> object:
    if isinstance(like, Slot):
        return Slot(j, like.n)
    return LEFT if j == 1 else RIGHT


def center_index(t: Term) -> int:
    """0-based leaf position reached by following every product symbol inward."""
    pos = 0
    while not is_leaf(t):
        j = subscript(t[0])
        pos += sum(degree(c) for c in t[1:j])
        t = t[j]
    return pos


def center(t: Term) -> str:
    return leaves(t)[center_index(t)]


def point_toward(t: Term, c: int, like=LEFT) -> Term:
    """Retag every operation of ``t`` so that it points toward leaf position ``c``.

    A node containing position ``c`` in argument j gets subscript j; a node lying
    entirely to the right of ``c`` gets subscript 1, one to the left gets n.
    ``like`` fixes the family (a binary dialgebra tag or a Slot of the arity).
    """

    def go(t, lo):
        if is_leaf(t):
            return t
        op = t[0]
        proto = op if isinstance(op, Slot) else like
        n = len(t) - 1
        kids = []
        here = None
        off = lo
        for j, ch in enumerate(t[1:], 1):
            d = degree(ch)
            if off <= c < off + d:
                here = j
            kids.append(go(ch, off))
            off += d
        if here is None:
            here = 1 if c < lo else n
        return (_tag(here, proto), *kids)

    return go(t, 0)


def canonicalize(t: Term) -> Term:
    """Normal form of a term modulo the bar identities (0-identities for n-ary tags).

    The class of a monomial is determined by its shape, leaf sequence and center;
    the representative has every operation symbol pointing toward the center.
    Plain terms are returned unchanged.
    """
    fam = family(t)
    if fam is None or fam == ALGEBRA:
        return t
    return point_toward(t, center_index(t))


def erase_tags(t: Term, op=PLAIN) -> Term:
    """Replace every operation tag by ``op`` (binary) or an unsubscripted Slot (n-ary)."""
    if is_leaf(t):
        return t
    tag = Slot(None, t[0].n) if isinstance(t[0], Slot) else op
    return (tag, *(erase_tags(c, op) for c in t[1:]))


# -- shapes ------------------------------------------------------------------

def shape(t: Term):
    """Tree skeleton: 0 for a leaf, a tuple of child skeletons for a node."""
    if is_leaf(t):
        return 0
    return tuple(shape(c) for c in t[1:])


def fill(sh, names: Iterable[str], op=PLAIN) -> Term:
    it = iter(names)

    def go(s):
        if s == 0:
            return next(it)
        return (op, *(go(c) for c in s))

    return go(sh)


@lru_cache(maxsize=None)
def binary_shapes(n: int) -> tuple:
    """Binary tree skeletons with n leaves.

    Larger left factors come first; right factors run in reverse order.  In
    degree 4 this gives ((ab)c)d, (a(bc))d, (ab)(cd), a(b(cd)), a((bc)d).
    """
    if n == 1:
        return (0,)
    out = []
    for k in range(n - 1, 0, -1):
        for left in binary_shapes(k):
            for right in reversed(binary_shapes(n - k)):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def _shape_index(n: int) -> dict:
    return {s: i for i, s in enumerate(binary_shapes(n))}


def monomial_key(t: Term):
    """Deterministic order: degree, shape index, center, variables, then tags."""
    d = degree(t)
    sh = shape(t)
    idx = _shape_index(d).get(sh, -1) if d <= 8 else -1
    try:
        c = center_index(t)
    except SignatureError:
        c = -1
    tags = tuple(str(op) for op in operations(t))
    return (d, idx, repr(sh) if idx < 0 else "", c, tuple(var_key(v) for v in leaves(t)), tags)


# -- polynomials ---------------------------------------------------------------

class Poly:
    """Finite rational linear combination of terms; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, Coefficient] | Iterable[tuple[Term, Coefficient]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict = {}
        for t, c in items:
            c = d.get(t, 0) + Fraction(c)
            if c:
                d[t] = c
            else:
                d.pop(t, None)
        self._terms = d

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({name: 1})

    @classmethod
    def monomial(cls, t: Term, coef: Coefficient = 1) -> "Poly":
        return cls({t: coef})

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, t: Term) -> Fraction:
        return self._terms.get(t, Fraction(0))

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: monomial_key(kv[0]))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(itertools.chain(self._terms.items(), other._terms.items()))

    def __sub__(self, other: "Poly") -> "Poly":
        return Poly(itertools.chain(self._terms.items(), ((t, -c) for t, c in other._terms.items())))

    def __neg__(self) -> "Poly":
        return Poly({t: -c for t, c in self._terms.items()})

    def __mul__(self, k: Coefficient) -> "Poly":
        if isinstance(k, Poly):
            return NotImplemented
        return Poly({t: c * k for t, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        from .parser import to_text

        return f"Poly({to_text(self)!r})"

    def __str__(self):
        from .parser import to_text

        return to_text(self)

    @property
    def degree(self) -> int:
        return max((degree(t) for t in self._terms), default=0)

    def variables(self) -> list[str]:
        return sort_vars(v for t in self._terms for v in leaves(t))

    def is_homogeneous(self) -> bool:
        return len({tuple(sorted(leaves(t))) for t in self._terms}) <= 1

    def is_multilinear(self) -> bool:
        return all(is_multilinear_term(t) for t in self._terms) and self.is_homogeneous()

    def family(self) -> str | None:
        fams = {family(t) for t in self._terms} - {None}
        if len(fams) > 1:
            raise SignatureError(f"mixed signatures {sorted(fams)} in one polynomial")
        return fams.pop() if fams else None

    def map_terms(self, fn: Callable[[Term], "Poly"]) -> "Poly":
        out: list = []
        for t, c in self._terms.items():
            out.extend((s, c * d) for s, d in fn(t).items())
        return Poly(out)


def var(name: str) -> Poly:
    return Poly.var(name)


def as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (str, tuple)):
        return Poly.monomial(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


def product(op, *factors) -> Poly:
    """Multilinear extension of the operation ``op`` to polynomial arguments."""
    polys = [as_poly(f) for f in factors]
    if len(polys) != arity(op):
        raise ValueError(f"operation {op!r} takes {arity(op)} arguments, got {len(polys)}")
    out = []
    for combo in itertools.product(*(p.items() for p in polys)):
        c = Fraction(1)
        for _, k in combo:
            c *= k
        out.append(((op, *(t for t, _ in combo)), c))
    return Poly(out)


def mul(p, q) -> Poly:
    return product(PLAIN, p, q)


def lprod(p, q) -> Poly:
    """p ⊣ q"""
    return product(LEFT, p, q)


def rprod(p, q) -> Poly:
    """p ⊢ q"""
    return product(RIGHT, p, q)


def canonical(p: Poly) -> Poly:
    """Collect ``p`` in the free 0-dialgebra (bar-identity normal form)."""
    return Poly((canonicalize(t), c) for t, c in p.items())


def rename(p: Poly, mapping: Mapping[str, str]) -> Poly:
    """Rename variables; tags and centers are untouched, so canonical stays canonical."""

    def go(t):
        if is_leaf(t):
            return mapping.get(t, t)
        return (t[0], *(go(c) for c in t[1:]))

    return Poly((go(t), c) for t, c in p.items())


def substitute(p: Poly, assignment: Mapping[str, object], canonical_form: bool = True) -> Poly:
    """Simultaneous substitution of polynomials for variables.

    Variables missing from ``assignment`` are left in place.  The result is
    canonicalized when it lives in a dialgebra or n-ary signature.
    """
    images = {v: as_poly(x) for v, x in assignment.items()}

    def go(t) -> Poly:
        if is_leaf(t):
            return images.get(t, Poly.var(t))
        return product(t[0], *(go(c) for c in t[1:]))

    out = p.map_terms(go)
    out.family()
    if canonical_form:
        out = canonical(out)
    return out


def collapse_right_anticommutative(p: Poly) -> Poly:
    """Rewrite a dialgebra polynomial in one product using u⊣v = uv and u⊢v = -vu."""

    def go(t):
        if is_leaf(t):
            return 1, t
        op, u, v = t
        su, u = go(u)
        sv, v = go(v)
        if op == LEFT:
            return su * sv, (PLAIN, u, v)
        if op == RIGHT:
            return -su * sv, (PLAIN, v, u)
        raise SignatureError(f"collapse expects a dialgebra polynomial, found {op!r}")

    out = []
    for t, c in p.items():
        s, u = go(t)
        out.append((u, s * c))
    return Poly(out)


def linearize(p: Poly) -> Poly:
    """Full polarization: every variable of multiplicity m is split into m fresh ones.

    Each monomial is replaced by the sum over all ways of assigning the fresh
    variables to the occurrences.  Fresh names are ``x1, x2, ...`` for ``x``
    when free, otherwise ``_k`` placeholders.
    """
    used = set(p.variables())
    mult: dict[str, int] = {}
    for t in p.monomials():
        for v in set(leaves(t)):
            mult[v] = max(mult.get(v, 0), leaves(t).count(v))
    for v in sort_vars(mult):
        m = mult[v]
        if m < 2:
            continue
        names = [f"{v}{i}" for i in range(1, m + 1)]
        if used & set(names):
            names = fresh_vars(used, m)
        used |= set(names)
        p = _polarize(p, v, names)
    return p


def _polarize(p: Poly, v: str, names: list[str]) -> Poly:
    out = []
    for t, c in p.items():
        k = leaves(t).count(v)
        if k == 0:
            continue
        if k != len(names):
            raise ValueError(f"variable {v} has nonuniform multiplicity; split the polynomial first")
        for perm in itertools.permutations(names):
            it = iter(perm)

            def go(s):
                if is_leaf(s):
                    return next(it) if s == v else s
                return (s[0], *(go(ch) for ch in s[1:]))

            out.append((go(t), c))
    return Poly(out)


# -- macros ------------------------------------------------------------------

def commutator(x, y) -> Poly:
    return mul(x, y) - mul(y, x)


def dicommutator(x, y) -> Poly:
    return lprod(x, y) - rprod(y, x)


def associator(x, y, z) -> Poly:
    return mul(mul(x, y), z) - mul(x, mul(y, z))


def left_associator(x, y, z) -> Poly:
    return lprod(lprod(x, y), z) - lprod(x, lprod(y, z))


def inner_associator(x, y, z) -> Poly:
    return lprod(rprod(x, y), z) - rprod(x, lprod(y, z))


def right_associator(x, y, z) -> Poly:
    return rprod(rprod(x, y), z) - rprod(x, rprod(y, z))


def jacobian(x, y, z) -> Poly:
    return mul(mul(x, y), z) + mul(mul(y, z), x) + mul(mul(z, x), y)


def dijacobian(x, y, z) -> Poly:
    """(xy)z - x(yz) - (xz)y"""
    return mul(mul(x, y), z) - mul(x, mul(y, z)) - mul(mul(x, z), y)


def s_function(x, y, z) -> Poly:
    return associator(x, y, z) + associator(y, z, x) + associator(z, x, y)


def s_tilde(x, y, z) -> Poly:
    return left_associator(x, y, z) + right_associator(y, z, x) + inner_associator(z, x, y)


@dataclass(frozen=True)
class Macro:
    arity: int
    fn: Callable[..., Poly]
    signature: str


MACROS: dict[str, Macro] = {
    "com": Macro(2, commutator, ALGEBRA),
    "dicom": Macro(2, dicommutator, DIALGEBRA),
    "as": Macro(3, associator, ALGEBRA),
    "al": Macro(3, left_associator, DIALGEBRA),
    "ax": Macro(3, inner_associator, DIALGEBRA),
    "ar": Macro(3, right_associator, DIALGEBRA),
    "J": Macro(3, jacobian, ALGEBRA),
    "L": Macro(3, dijacobian, ALGEBRA),
    "S": Macro(3, s_function, ALGEBRA),
    "St": Macro(3, s_tilde, DIALGEBRA),
}


def call_macro(name: str, *args) -> Poly:
    try:
        m = MACROS[name]
    except KeyError:
        raise MacroError(f"unknown macro {name!r}") from None
    if len(args) != m.arity:
        raise MacroError(f"macro {name} takes {m.arity} arguments, got {len(args)}")
    return m.fn(*(as_poly(a) for a in args))


# -- expressions with unexpanded macros ---------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Prod:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Lin:
    """Rational combination ``sum(c * e)``; the empty combination is zero."""

    terms: tuple = ()


Expr = Union[Var, Prod, Call, Lin]


def expand_macros(e: Expr, canonical_form: bool = True) -> Poly:
    """Evaluate an expression tree, replacing macros by their definitions."""

    def go(e) -> Poly:
        if isinstance(e, Var):
            return Poly.var(e.name)
        if isinstance(e, Prod):
            return product(e.op, go(e.left), go(e.right))
        if isinstance(e, Call):
            return call_macro(e.name, *(go(a) for a in e.args))
        if isinstance(e, Lin):
            out = Poly()
            for c, sub in e.terms:
                out = out + go(sub) * c
            return out
        if isinstance(e, Poly):
            return e
        raise TypeError(f"not an expression: {e!r}")

    p = go(e)
    p.family()
    return canonical(p) if canonical_form else p
