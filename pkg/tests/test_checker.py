import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import homogeneous_polys
from dialg.checker import (
    PRESETS,
    PointedWord,
    are_equivalent,
    conditional_consequence,
    holds_in_variety,
    is_consequence,
    normal_form_assoc_dialgebra,
    pointed_word,
    variety,
)
from dialg.parser import parse_poly
from dialg.terms import LEFT, RIGHT, canonical

DICOM_LEIBNIZ = "dicom(dicom(x,y),z) - dicom(dicom(x,z),y) - dicom(x,dicom(y,z))"


def test_reflexive_on_associator():
    assert is_consequence("al(x,y,z)", ["al(x,y,z)"]).result


def test_not_a_consequence_of_nothing():
    v = is_consequence("al(x,y,z)", [])
    assert not v.result
    assert v.residual is not None
    assert v.ranks == {"generators": 0, "with_target": 1}


def test_permuted_generator_suffices():
    assert is_consequence("al(y,z,x)", ["al(x,y,z)"]).result


def test_lifted_generator():
    assert is_consequence("al(x -| t,y,z)", ["al(x,y,z)"]).result
    assert is_consequence("(x*y)*(z*t) - (x*(y*(z*t)))", ["(x*y)*z - x*(y*z)"], "plain").result


def test_right_anticommutativity_degree4_is_not_everything():
    assert not is_consequence("((x*y)*z)*t", ["x*(y*z) + x*(z*y)"], "plain").result


@settings(max_examples=25)
@given(homogeneous_polys(3, (LEFT, RIGHT), "xyz"))
def test_reflexivity_random(p):
    if not canonical(p):
        return
    assert is_consequence(p, [p]).result


@settings(max_examples=25)
@given(homogeneous_polys(3, (LEFT, RIGHT), "xyz"), homogeneous_polys(3, (LEFT, RIGHT), "xyz"))
def test_monotonicity_random(p, q):
    if not canonical(p):
        return
    base = is_consequence(p, [q])
    if base.result:
        assert is_consequence(p, [q, "ar(x,y,z)"]).result
    assert is_consequence(p, [p, q]).result


@settings(max_examples=15)
@given(homogeneous_polys(3, (LEFT, RIGHT), "xyz"), st.permutations("xyz"))
def test_equivalent_to_permuted_copy(p, perm):
    from dialg.terms import rename

    if not canonical(p):
        return
    assert are_equivalent(p, rename(p, dict(zip("xyz", perm)))).result


def test_equivalence_reports_ranks():
    v = are_equivalent(["al(x,y,z)", "ar(x,y,z)", "ax(x,y,z)"], ["al(x,y,z)"])
    assert not v.result
    assert v.ranks["f"] > v.ranks["g"]
    assert v.ranks["union"] == v.ranks["f"]


def test_nonlinear_input_is_linearized():
    assert are_equivalent(["x*x"], ["x*y + y*x"], "plain").result


def test_conditional_needs_distinguished_names_in_hypothesis():
    with pytest.raises(ValueError):
        conditional_consequence("al(a,y,z)", [("al(x,y,z)", ["a"])])


def test_conditional_fixed_variable_is_not_permuted():
    hyp = [("al(a,y,z)", ["a"])]
    assert conditional_consequence("al(a,z,y)", hyp).result
    assert not conditional_consequence("al(y,a,z)", hyp).result


def test_unknown_variety():
    with pytest.raises(KeyError):
        variety("nope")


def test_presets_present():
    for name in ("zero-dialgebra", "assoc-dialgebra", "alt-dialgebra", "leibniz", "lie", "malcev", "malcev-dialgebra"):
        assert PRESETS[name].name == name


def test_leibniz_dicommutator_in_assoc_dialgebra():
    assert normal_form_assoc_dialgebra(parse_poly(DICOM_LEIBNIZ)) == {}
    assert holds_in_variety(DICOM_LEIBNIZ, "assoc-dialgebra").result


def test_assoc_axiom_violation_detected():
    v = holds_in_variety("(x -| y) -| z", "assoc-dialgebra")
    assert not v.result and v.residual is not None


def test_zero_dialgebra_distinguishes_associators():
    assert not holds_in_variety("al(x,y,z)", "zero-dialgebra").result
    assert holds_in_variety("(x -| y) |- z - (x |- y) |- z", "zero-dialgebra").result


def test_pointed_word():
    t = (RIGHT, (LEFT, "x", "y"), "z")
    assert pointed_word(t) == PointedWord(("x", "y", "z"), 3)
    with pytest.raises(ValueError):
        PointedWord(("x",), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_pointed_words_match_associative_closure(n):
    """Oracle: BFS with the bar identities plus the three associativity axioms."""
    names = list("abc"[:n])
    terms = [t for sh in oracles.trees(names) for t in oracles.tagged(sh)]
    classes = oracles.closure_classes(terms, oracles.assoc_rules)
    assert len(classes) == n
    for cls in classes:
        assert len({pointed_word(t) for t in cls}) == 1
    total = {pointed_word(t) for p in itertools.permutations(names) for sh in oracles.trees(list(p))
             for t in oracles.tagged(sh)}
    assert len(total) == n * len(list(itertools.permutations(names)))
    assert n != 3 or len(total) == 18
