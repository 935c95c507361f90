import random

import pytest
from hypothesis import given, settings, strategies as st

from smcstrict.cells import DistL, Gen2, Id2, Sym
from smcstrict.core import Gen, HComp, IdUnit, Sum, ZeroUnit, make_signature, standard_signature
from smcstrict.errors import MissingAssignment, NonDegenerate
from smcstrict.instances import SemiringInstance, eval_one_cell, eval_two_cell
from smcstrict.normalize import canonical_iso, embed, normalize
from smcstrict.verify.enumerate import random_expr

STD = standard_signature()
f, f2, g, g2, h = (Gen(n) for n in ("f", "f'", "g", "g'", "h"))
N = SemiringInstance.naturals({"f": 2, "f'": 3, "g": 5, "g'": 7, "h": 11})


def test_composite_of_sum():
    e = HComp(g, Sum(f, f2))
    assert eval_one_cell(e, N) == 25
    assert eval_one_cell(embed(normalize(e, STD)), N) == 25


def test_units():
    assert eval_one_cell(IdUnit("a"), N) == 1
    assert eval_one_cell(ZeroUnit("a", "c"), N) == 0
    assert eval_one_cell(HComp(ZeroUnit("b", "c"), f), N) == 0


def test_missing_assignment():
    with pytest.raises(MissingAssignment):
        eval_one_cell(f, SemiringInstance.naturals({"g": 1}))


def test_naturals_reject_negative():
    with pytest.raises(ValueError):
        SemiringInstance.naturals({"f": -1})


def test_structural_cells_are_identities():
    assert eval_two_cell(Sym(g, g2), N, STD) == 12
    assert eval_two_cell(DistL(g, f, f2), N, STD) == 25


def test_generating_cell_needs_equal_values():
    sig = make_signature("a b", {"p": ("a", "b"), "q": ("a", "b")}, {"alpha": (Gen("p"), Gen("q"))})
    ok = SemiringInstance.naturals({"p": 4, "q": 4}, gen2=frozenset({"alpha"}))
    assert eval_two_cell(Gen2("alpha"), ok, sig) == 4
    bad = SemiringInstance.naturals({"p": 4, "q": 5}, gen2=frozenset({"alpha"}))
    with pytest.raises(NonDegenerate):
        eval_two_cell(Gen2("alpha"), bad, sig)
    with pytest.raises(MissingAssignment):
        eval_two_cell(Gen2("alpha"), SemiringInstance.naturals({"p": 4, "q": 4}), sig)


def test_matrices_see_composition_order():
    a = ((1, 1), (0, 1))
    b = ((1, 0), (1, 1))
    M = SemiringInstance.int_matrices({"f": a, "g": b})
    gf = eval_one_cell(HComp(g, f), M)
    assert gf == ((1, 1), (1, 2))
    assert gf != M.mul(a, b)
    assert M.law_violations([(a, b, a), (b, b, a)]) == []


def test_law_violations_spot_a_broken_semiring():
    bad = SemiringInstance({}, add=lambda x, y: x - y)
    assert any(v.startswith("add-comm") for v in bad.law_violations([(1, 2, 3)]))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32), st.lists(st.integers(0, 9), min_size=5, max_size=5))
def test_evaluation_commutes_with_strictification(seed, values):
    e = random_expr(STD, 5, random.Random(seed))
    inst = SemiringInstance.naturals(dict(zip(["f", "f'", "g", "g'", "h"], values)))
    assert eval_one_cell(embed(normalize(e, STD)), inst) == eval_one_cell(e, inst)
    assert eval_two_cell(canonical_iso(e, STD), inst, STD) == eval_one_cell(e, inst)


def test_identity_two_cell():
    assert eval_two_cell(Id2(h), N, STD) == 11
