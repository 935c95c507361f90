import pytest
from hypothesis import given, settings, strategies as st

from smcstrict.core import (Gen, HComp, IdUnit, Sum, ZeroUnit, compose_all, default_signature, depth, endpoints,
                            expr_text, make_signature, opposite, sum_all, well_formed)
from smcstrict.errors import IllTyped, ResolveError, SignatureError
from smcstrict._node import clear_intern_tables


def test_endpoints_of_composite(std):
    assert endpoints(HComp(Gen("g"), Gen("f")), std) == ("a", "c")


def test_composite_in_wrong_order_is_ill_typed(std):
    with pytest.raises(IllTyped) as exc:
        endpoints(HComp(Gen("f"), Gen("g")), std)
    assert exc.value.path == ()


def test_ill_typed_path_points_at_subterm(std):
    e = Sum(Gen("h"), HComp(Gen("f"), Gen("g")))
    with pytest.raises(IllTyped) as exc:
        endpoints(e, std)
    assert exc.value.path == ("right",)


def test_sum_of_non_parallel(std):
    assert not well_formed(Sum(Gen("f"), Gen("g")), std)


def test_unknown_names(std):
    assert not well_formed(Gen("nope"), std)
    assert not well_formed(IdUnit("z"), std)
    assert not well_formed(ZeroUnit("a", "z"), std)


def test_zero_and_unit(std):
    assert endpoints(ZeroUnit("a", "c"), std) == ("a", "c")
    assert endpoints(HComp(IdUnit("b"), Gen("f")), std) == ("a", "b")


def test_duplicate_names_rejected():
    with pytest.raises(SignatureError):
        make_signature("a a")
    with pytest.raises(ResolveError):
        make_signature("a", {"f": ("a", "b")})


def test_text_rendering():
    e = HComp(Sum(Gen("g"), Gen("g'")), Sum(Gen("f"), Gen("f'")))
    assert expr_text(e) == "(g + g') * (f + f')"
    assert expr_text(HComp(HComp(Gen("x"), Gen("y")), Gen("z"))) == "x * y * z"
    assert expr_text(HComp(Gen("x"), HComp(Gen("y"), Gen("z")))) == "x * (y * z)"
    assert expr_text(ZeroUnit("a", "b")) == "0@a->b"


def test_builders():
    assert compose_all(Gen("a"), Gen("b"), Gen("c")) == HComp(Gen("a"), HComp(Gen("b"), Gen("c")))
    assert sum_all(Gen("a")) == Gen("a")
    assert depth(sum_all(Gen("a"), Gen("b"), Gen("c"))) == 2


def test_opposite_swaps_composition(std):
    op = opposite(std)
    e = HComp(Gen("g"), Gen("f"))
    assert endpoints(opposite(e), op) == ("c", "a")
    assert opposite(opposite(e)) == e


def test_interning_survives_clearing():
    e = HComp(Gen("g"), Gen("f"))
    clear_intern_tables()
    e2 = HComp(Gen("g"), Gen("f"))
    assert e == e2 and hash(e) == hash(e2)


def test_nodes_of_different_kinds_differ():
    assert HComp(Gen("f"), Gen("f")) != Sum(Gen("f"), Gen("f"))


leaves = st.sampled_from([Gen("f"), IdUnit("a"), ZeroUnit("a", "a")])
exprs = st.recursive(leaves, lambda kids: st.builds(HComp, kids, kids) | st.builds(Sum, kids, kids),
                     max_leaves=12)


@settings(max_examples=200, deadline=None)
@given(exprs)
def test_single_object_expressions_typecheck(e):
    assert endpoints(e, default_signature()) == ("a", "a")
