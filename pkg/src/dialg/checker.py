"""Consequence and equivalence of multilinear identities.

An identity f of degree n is a consequence of f1, ..., fk when the coordinate
vector of f lies in the span of all permuted copies of the fi, after the fi of
lower degree have been lifted to degree n.  Everything is exact over Q.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .parser import Identity, parse_identity, parse_poly, to_text
from .qlinalg import EchelonBasis
from .spaces import MonomialBasis, basis, check_degree, check_space, lift_to
from .terms import (
    ALGEBRA,
    DIALGEBRA,
    LEFT,
    RIGHT,
    Poly,
    SignatureError,
    Term,
    center_index,
    is_leaf,
    leaves,
    linearize,
    rename,
    sort_vars,
)


@dataclass
class Verdict:
    result: bool
    ranks: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)
    generators: tuple = ()
    residual: Poly | None = None

    def __bool__(self):
        return self.result

    def to_json(self) -> dict:
        out = {"verdict": self.result, "ranks": self.ranks, "dims": self.dims, "generators": list(self.generators)}
        if self.residual is not None:
            out["residual"] = to_text(self.residual)
        return out


def as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, Identity):
        return x.poly
    if isinstance(x, str):
        return parse_poly(x)
    raise TypeError(f"expected an identity, got {type(x).__name__}")


def _label(x, k: int) -> str:
    if isinstance(x, Identity) and x.label:
        return x.label
    if isinstance(x, str):
        return x
    return f"g{k}"


def _listify(x) -> list:
    return list(x) if isinstance(x, (list, tuple)) else [x]


def prepare(x, space: str) -> Poly:
    """Polynomial of an identity, linearized and checked against the ambient space."""
    check_space(space)
    p = as_poly(x)
    fam = p.family()
    want = DIALGEBRA if space == "dialgebra" else ALGEBRA
    if fam not in (None, want):
        raise SignatureError(f"a {fam} identity cannot live in the {space} space")
    if not p.is_multilinear():
        p = linearize(p)
        if not p.is_multilinear():
            raise ValueError("identity is not homogeneous; split it before checking")
    return p


class Module:
    """Span of all permuted copies of a set of identities in one multilinear space."""

    def __init__(self, space: str, n: int, names: Sequence[str]):
        check_degree(n)
        self.basis: MonomialBasis = basis(n, space, names)
        self.space = space
        self.n = n
        self.names = list(self.basis.variables)
        self.echelon = EchelonBasis(len(self.basis))
        self.rows = 0

    @property
    def rank(self) -> int:
        return self.echelon.rank

    def add_orbit(self, p: Poly, fixed: Iterable[str] = ()) -> int:
        """Lift ``p`` to degree n and add its copies under all permutations of the free variables.

        Variables in ``fixed`` are kept in place; they must already be among the names.
        """
        fixed = [v for v in sort_vars(fixed)]
        missing = set(fixed) - set(self.names)
        if missing:
            raise ValueError(f"distinguished variables {sorted(missing)} do not occur in the target")
        free_names = [v for v in self.names if v not in fixed]
        before = self.rank
        if not p:
            return 0
        for h in lift_to(p, self.n, fixed=fixed, avoid=self.names):
            hv = [v for v in h.variables() if v not in fixed]
            if len(hv) != len(free_names):
                raise ValueError("identity and target disagree on the number of variables")
            for perm in itertools.permutations(free_names):
                self.add(rename(h, dict(zip(hv, perm))))
        return self.rank - before

    def add(self, p: Poly) -> bool:
        self.rows += 1
        return self.echelon.add(self.basis.vector(p))

    def residual(self, p: Poly) -> dict:
        return self.echelon.reduce(self.basis.vector(p))

    def contains(self, p: Poly) -> bool:
        return not self.residual(p)


def _target_setup(target, space: str, degree: int | None):
    t = prepare(target, space)
    n = degree or t.degree
    if t and t.degree != n:
        raise ValueError(f"target has degree {t.degree}, not {n}")
    names = t.variables()
    if len(names) != n:
        raise ValueError("target must be multilinear in exactly `degree` variables")
    return t, n, names


def generated_module(generators, space: str, n: int, names: Sequence[str] | None = None) -> Module:
    mod = Module(space, n, names or [chr(ord("a") + i) for i in range(n)])
    for g in _listify(generators):
        mod.add_orbit(prepare(g, space))
    return mod


def is_consequence(target, generators, space: str = "dialgebra", degree: int | None = None) -> Verdict:
    """Is ``target`` in the S_n-module generated by ``generators`` (lifted to its degree)?"""
    t, n, names = _target_setup(target, space, degree)
    gens = _listify(generators)
    mod = Module(space, n, names)
    for g in gens:
        p = prepare(g, space)
        if p.degree > n:
            raise ValueError(f"generator of degree {p.degree} exceeds the target degree {n}")
        mod.add_orbit(p)
    res = mod.residual(t)
    r = mod.rank
    return Verdict(
        result=not res,
        ranks={"generators": r, "with_target": r + (1 if res else 0)},
        dims={"space": len(mod.basis), "rows": mod.rows},
        generators=tuple(_label(g, k) for k, g in enumerate(gens, 1)),
        residual=mod.basis.poly(res) if res else None,
    )


def are_equivalent(f, g, space: str = "dialgebra", degree: int | None = None) -> Verdict:
    """Do two identities (or lists of identities) generate the same S_n-module?"""
    fs = [prepare(x, space) for x in _listify(f)]
    gs = [prepare(x, space) for x in _listify(g)]
    n = degree or max(p.degree for p in fs + gs)
    names = [chr(ord("a") + i) for i in range(n)]
    mf = Module(space, n, names)
    mg = Module(space, n, names)
    for p in fs:
        mf.add_orbit(p)
    for p in gs:
        mg.add_orbit(p)
    union = mf.echelon.copy()
    for row in mg.echelon._rows.values():
        union.add(row)
    ok = union.rank == mf.rank == mg.rank
    return Verdict(
        result=ok,
        ranks={"f": mf.rank, "g": mg.rank, "union": union.rank},
        dims={"space": len(mf.basis)},
        generators=("f", "g"),
    )


def conditional_consequence(target, hypotheses, degree: int | None = None) -> Verdict:
    """Consequence in the free 0-dialgebra of identities that hold for distinguished elements only.

    ``hypotheses`` is a list of ``(identity, distinguished_variables)``.  The
    distinguished variables stay fixed; every other variable of a hypothesis is
    instantiated injectively by target variables, and the hypothesis is lifted by
    substituting products for those variables and multiplying on either side.
    """
    t, n, names = _target_setup(target, "dialgebra", degree)
    mod = Module("dialgebra", n, names)
    labels = []
    for k, (h, dist) in enumerate(hypotheses, 1):
        p = prepare(h, "dialgebra")
        dist = list(dist)
        absent = set(dist) - set(p.variables())
        if absent:
            raise ValueError(f"distinguished variables {sorted(absent)} do not occur in hypothesis {k}")
        if p.degree > n:
            raise ValueError(f"hypothesis of degree {p.degree} exceeds the target degree {n}")
        mod.add_orbit(p, fixed=dist)
        labels.append(f"{_label(h, k)}|{','.join(dist)}")
    res = mod.residual(t)
    return Verdict(
        result=not res,
        ranks={"hypotheses": mod.rank, "with_target": mod.rank + (1 if res else 0)},
        dims={"space": len(mod.basis), "rows": mod.rows},
        generators=tuple(labels),
        residual=mod.basis.poly(res) if res else None,
    )


# -- free associative dialgebra -------------------------------------------------

@dataclass(frozen=True, order=True)
class PointedWord:
    word: tuple[str, ...]
    center: int  # 1-based

    def __post_init__(self):
        if not 1 <= self.center <= len(self.word):
            raise ValueError("center outside the word")

    def __str__(self):
        return "".join(f"[{v}]" if i + 1 == self.center else v for i, v in enumerate(self.word))


def pointed_word(t: Term) -> PointedWord:
    for op in _ops(t):
        if op not in (LEFT, RIGHT):
            raise SignatureError(f"pointed words need a dialgebra term, found {op!r}")
    return PointedWord(leaves(t), center_index(t) + 1)


def _ops(t):
    if not is_leaf(t):
        yield t[0]
        for c in t[1:]:
            yield from _ops(c)


def normal_form_assoc_dialgebra(p) -> dict[PointedWord, Fraction]:
    """Image of a dialgebra polynomial in the free associative dialgebra."""
    out: dict[PointedWord, Fraction] = {}
    for t, c in as_poly(p).items():
        w = pointed_word(t)
        x = out.get(w, 0) + c
        if x:
            out[w] = x
        else:
            out.pop(w, None)
    return dict(sorted(out.items()))


# -- varieties ---------------------------------------------------------------------

@dataclass(frozen=True)
class VarietyPresentation:
    name: str
    signature: str
    identities: tuple[Identity, ...]
    space: str
    nonlinear: tuple[Identity, ...] = ()
    description: str = ""


def _ids(*pairs) -> tuple[Identity, ...]:
    return tuple(parse_identity(text, label) for label, text in pairs)


PRESETS: dict[str, VarietyPresentation] = {
    v.name: v
    for v in [
        VarietyPresentation(
            "zero-dialgebra", DIALGEBRA, (), "dialgebra", description="bar identities only"
        ),
        VarietyPresentation(
            "assoc-dialgebra",
            DIALGEBRA,
            _ids(("left", "al(x,y,z)"), ("right", "ar(x,y,z)"), ("inner", "(x |- y) -| z - x |- (y -| z)")),
            "dialgebra",
            description="left, right and inner associativity",
        ),
        VarietyPresentation(
            "alt-dialgebra",
            DIALGEBRA,
            _ids(
                ("alt1", "al(x,y,z) + ar(z,y,x)"),
                ("alt2", "al(x,y,z) - ar(y,z,x)"),
                ("alt3", "ax(x,y,z) + ar(x,z,y)"),
            ),
            "dialgebra",
        ),
        VarietyPresentation(
            "flexible-dialgebra",
            DIALGEBRA,
            _ids(("flex1", "al(x,y,z) + ar(z,y,x)"), ("flex2", "ax(x,y,z) + ax(z,y,x)")),
            "dialgebra",
        ),
        VarietyPresentation(
            "right-anticommutative", ALGEBRA, _ids(("ra", "x*(y*z) + x*(z*y)")), "plain"
        ),
        VarietyPresentation(
            "malcev-dialgebra",
            ALGEBRA,
            _ids(
                ("ra", "x*(y*z) + x*(z*y)"),
                ("di-malcev", "((x*y)*z)*t - ((x*t)*y)*z - (x*(z*t))*y - (x*z)*(y*t) - x*((y*z)*t)"),
            ),
            "plain",
        ),
        VarietyPresentation(
            "leibniz", ALGEBRA, _ids(("leibniz", "(x*y)*z - (x*z)*y - x*(y*z)")), "plain"
        ),
        VarietyPresentation(
            "lie",
            ALGEBRA,
            _ids(("anticomm", "x*y + y*x"), ("jacobi", "J(x,y,z)")),
            "plain",
            nonlinear=_ids(("square", "x*x")),
        ),
        VarietyPresentation(
            "malcev",
            ALGEBRA,
            _ids(
                ("anticomm", "x*y + y*x"),
                ("sagle", "(x*z)*(y*t) - ((x*y)*z)*t - ((y*z)*t)*x - ((z*t)*x)*y - ((t*x)*y)*z"),
            ),
            "plain",
            nonlinear=_ids(("square", "x*x"), ("malcev", "(x*y)*(x*z) - ((x*y)*z)*x - ((y*z)*x)*x - ((z*x)*x)*y")),
        ),
    ]
}


def variety(name: str) -> VarietyPresentation:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown variety {name!r}; known: {', '.join(PRESETS)}") from None


def holds_in_variety(target, v, degree: int | None = None) -> Verdict:
    """Does ``target`` hold in every algebra of the variety (up to its degree)?"""
    v = variety(v) if isinstance(v, str) else v
    if v.name == "assoc-dialgebra":
        p = as_poly(target)
        nf = normal_form_assoc_dialgebra(p)
        return Verdict(
            result=not nf,
            dims={"words": len(nf)},
            generators=tuple(i.label for i in v.identities),
            residual=Poly((_word_term(w), c) for w, c in nf.items()) if nf else None,
        )
    if not v.identities:
        p = prepare(target, v.space)
        t, n, names = _target_setup(p, v.space, degree)
        b = basis(n, v.space, names)
        vec = b.vector(t)
        return Verdict(result=not vec, dims={"space": len(b)}, residual=b.poly(vec) if vec else None)
    return is_consequence(target, list(v.identities), v.space, degree)


def _word_term(w: PointedWord) -> Term:
    """Left-normed representative of a pointed word (used only for display)."""
    t = w.word[0]
    for i, x in enumerate(w.word[1:], 2):
        t = (LEFT if i > w.center else RIGHT, t, x)
    return t
