"""Multilinear identity spaces and the symmetric-group action on them.

Three ambient spaces are supported, keyed by short names:

``plain``      free nonassociative algebra, one product ``*``
``dialgebra``  free 0-dialgebra (monomials up to the bar identities)
``ra``         free right-anticommutative algebra, x(yz) + x(zy) = 0
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .terms import (
    DIALGEBRA,
    LEFT,
    PLAIN,
    RIGHT,
    Poly,
    Term,
    binary_shapes,
    canonical,
    canonicalize,
    degree,
    fill,
    fresh_vars,
    is_leaf,
    leaves,
    point_toward,
    product,
    rename,
    sort_vars,
    substitute,
    var_key,
)

SPACES = ("plain", "dialgebra", "ra")
HARD_MAX_DEGREE = 6


class DegreeError(ValueError):
    pass


class StraighteningError(ValueError):
    """A monomial did not reach an element of the basis."""


def max_degree() -> int:
    env = os.environ.get("DIALG_MAX_DEGREE")
    if env:
        try:
            return max(1, min(int(env), HARD_MAX_DEGREE))
        except ValueError:
            pass
    return HARD_MAX_DEGREE


def check_degree(n: int) -> None:
    cap = max_degree()
    if n > cap:
        raise DegreeError(f"degree {n} exceeds the cap {cap}")


def check_space(space: str) -> None:
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}; expected one of {', '.join(SPACES)}")


def default_variables(n: int) -> list[str]:
    return list("abcdef"[:n])


# -- straightening -----------------------------------------------------------

@dataclass(frozen=True)
class StraighteningRules:
    """Oriented skew-symmetries of the right factor: u(vw) -> -u(wv).

    Below a right factor every product is skew, so a right factor is stored with
    its larger child on the left (ties broken by the smallest variable).  This
    eliminates a(b(cd)) in favour of -a((cd)b) and keeps a(bc) with b < c.
    """

    key: Callable[[str], object] = var_key

    def _order_key(self, t: Term):
        return (-degree(t), tuple(self.key(v) for v in leaves(t)))

    def normal_form(self, t: Term) -> tuple[int, Term]:
        """Return (sign, representative); sign 0 when the monomial vanishes."""

        def go(t, skew):
            if is_leaf(t):
                return 1, t
            op, u, v = t
            if op != PLAIN:
                raise StraighteningError(f"right-anticommutative rules apply to plain terms, got {op!r}")
            su, u = go(u, skew)
            sv, v = go(v, True)
            s = su * sv
            if skew:
                if u == v:
                    return 0, (PLAIN, u, v)
                if self._order_key(v) < self._order_key(u):
                    u, v, s = v, u, -s
            return s, (PLAIN, u, v)

        return go(t, False)

    def is_normal(self, t: Term) -> bool:
        s, u = self.normal_form(t)
        return s == 1 and u == t


RA_RULES = StraighteningRules()


def normal_form(t: Term, space: str) -> tuple[int, Term]:
    if space == "plain":
        return 1, t
    if space == "dialgebra":
        return 1, canonicalize(t)
    if space == "ra":
        return RA_RULES.normal_form(t)
    check_space(space)


def reduce_poly(p: Poly, space: str) -> Poly:
    """Rewrite a polynomial to basis monomials of ``space``."""
    if space == "dialgebra":
        return canonical(p)
    out = []
    for t, c in p.items():
        s, u = normal_form(t, space)
        if s:
            out.append((u, s * c))
    return Poly(out)


# -- bases ---------------------------------------------------------------------

def association_types(n: int, space: str = "plain") -> list:
    """Tree skeletons of degree n; (skeleton, center) pairs for the dialgebra space."""
    check_degree(n)
    check_space(space)
    shapes = list(binary_shapes(n))
    if space == "dialgebra":
        return [(s, c) for s in shapes for c in range(n)]
    if space == "ra":
        names = default_variables(n) if n <= 6 else [f"x{i}" for i in range(n)]
        return [s for s in shapes if any(RA_RULES.is_normal(fill(s, p)) for p in itertools.permutations(names))]
    return shapes


@dataclass(frozen=True)
class MonomialBasis:
    degree: int
    space: str
    variables: tuple[str, ...]
    monomials: tuple[Term, ...]
    index: Mapping[Term, int] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.monomials)

    def __getitem__(self, i: int) -> Term:
        return self.monomials[i]

    def vector(self, p: Poly) -> dict[int, Fraction]:
        """Sparse coordinate vector of ``p`` after reduction to this basis."""
        out: dict[int, Fraction] = {}
        for t, c in p.items():
            s, u = normal_form(t, self.space)
            if not s:
                continue
            try:
                i = self.index[u]
            except KeyError:
                raise StraighteningError(f"monomial {u!r} is not in the {self.space} basis") from None
            x = out.get(i, 0) + s * c
            if x:
                out[i] = x
            else:
                out.pop(i, None)
        return out

    def dense(self, p: Poly) -> list[Fraction]:
        v = [Fraction(0)] * len(self)
        for i, x in self.vector(p).items():
            v[i] = x
        return v

    def poly(self, vec: Mapping[int, Fraction]) -> Poly:
        return Poly((self.monomials[i], x) for i, x in vec.items())


_BASIS_CACHE: dict = {}


def basis(n: int, space: str = "plain", variables: Sequence[str] | None = None) -> MonomialBasis:
    """Ordered multilinear basis: by shape, then center, then variable sequence."""
    check_degree(n)
    check_space(space)
    names = tuple(variables) if variables is not None else tuple(default_variables(n))
    if len(names) != n or len(set(names)) != n:
        raise ValueError(f"need {n} distinct variables, got {names}")
    names = tuple(sort_vars(names))
    key = (n, space, names)
    if key in _BASIS_CACHE:
        return _BASIS_CACHE[key]
    perms = list(itertools.permutations(names))
    mons: list[Term] = []
    for s in binary_shapes(n):
        if space == "dialgebra":
            for c in range(n):
                mons.extend(point_toward(fill(s, p), c) for p in perms)
        elif space == "ra":
            mons.extend(t for t in (fill(s, p) for p in perms) if RA_RULES.is_normal(t))
        else:
            mons.extend(fill(s, p) for p in perms)
    out = MonomialBasis(n, space, names, tuple(mons), {t: i for i, t in enumerate(mons)})
    _BASIS_CACHE[key] = out
    return out


def table1_basis() -> MonomialBasis:
    """The 60 right-anticommutative monomials of degree 4 on a, b, c, d."""
    return basis(4, "ra", "abcd")


def straighten(p: Poly, rules: StraighteningRules = RA_RULES, b: MonomialBasis | None = None) -> list[Fraction]:
    """Coordinate vector of a plain polynomial in a right-anticommutative basis."""
    if b is None:
        vs = p.variables()
        b = basis(len(vs), "ra", vs)
    out = [Fraction(0)] * len(b)
    for t, c in p.items():
        s, u = rules.normal_form(t)
        if not s:
            continue
        if u not in b.index:
            raise StraighteningError(f"monomial {u!r} is not in the basis")
        out[b.index[u]] += s * c
    return out


# -- symmetric group action and lifting ---------------------------------------------

def permutations_of(names: Sequence[str]):
    names = sort_vars(names)
    for perm in itertools.permutations(names):
        yield dict(zip(names, perm))


def sn_orbit(f: Poly, variables: Sequence[str] | None = None) -> list[Poly]:
    """All n! permuted copies of ``f`` in lexicographic permutation order.

    Duplicates are kept so row counts stay deterministic.
    """
    names = variables if variables is not None else f.variables()
    return [rename(f, m) for m in permutations_of(names)]


def lift(f: Poly, v: str, fixed: Iterable[str] = ()) -> list[Poly]:
    """Raise the degree by one with the fresh variable ``v``.

    Every variable x not in ``fixed`` is replaced by each of x⊣v, x⊢v, v⊣x, v⊢x
    (x·v, v·x for plain polynomials); then f itself is multiplied by v on both
    sides with each operation.  Dialgebra results are canonicalized.
    """
    if v in f.variables():
        raise ValueError(f"lifting variable {v} already occurs")
    fam = f.family()
    ops = (PLAIN,) if fam in (None, "algebra") else (LEFT, RIGHT)
    dialg = fam == DIALGEBRA
    fixed = set(fixed)
    out = []
    vp = Poly.var(v)
    for x in f.variables():
        if x in fixed:
            continue
        xp = Poly.var(x)
        for op in ops:
            for image in (product(op, xp, vp), product(op, vp, xp)):
                out.append(substitute(f, {x: image}, canonical_form=dialg))
    for op in ops:
        for g in (product(op, f, vp), product(op, vp, f)):
            out.append(canonical(g) if dialg else g)
    return out


def lift_to(f: Poly, n: int, fixed: Iterable[str] = (), avoid: Iterable[str] = ()) -> list[Poly]:
    """Repeated :func:`lift` until degree n, with fresh placeholder variables."""
    check_degree(n)
    d = f.degree
    if d > n:
        raise DegreeError(f"cannot lower degree {d} to {n}")
    new = fresh_vars(set(f.variables()) | set(avoid), n - d)
    level = [f]
    for v in new:
        level = [g for h in level for g in lift(h, v, fixed)]
    return level
