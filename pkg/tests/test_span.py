import random

import pytest

from smcstrict.cells import DistL, Gen2, Id2, LUnit, Sym, boundary
from smcstrict.core import Gen, HComp, Sum, make_signature
from smcstrict.errors import EndpointMismatch, MissingAssignment
from smcstrict.instances import (FinSetObj, SpanCell, SpanInstance, SpanMap, empty_span,
                                 identity_span, span_compose, span_sum)
from smcstrict.verify.mutants import SwappedPairModel
from smcstrict.verify.suites import (_NAT_CELLS, SHAPES, SPAN_SIGNATURE, naturality_square,
                                     random_span_instance, span_paths_agree)

A = FinSetObj(("a0",))
B = FinSetObj((1, 2))
C = FinSetObj(("c",))


def test_pullback_keeps_matching_pairs():
    s = SpanCell(A, B, FinSetObj(("x1", "x2")), ("a0", "a0"), (1, 2))
    t = SpanCell(B, C, FinSetObj(("y",)), (1,), ("c",))
    assert span_compose(t, s).apex.elements == (("x1", "y"),)


def test_compose_with_empty_apex_is_empty():
    s = SpanCell(A, B, FinSetObj(("x1",)), ("a0",), (1,))
    assert span_compose(empty_span(B, C), s).apex.elements == ()


def test_sum_is_blockwise():
    s1 = SpanCell(A, B, FinSetObj(("u", "v")), ("a0", "a0"), (1, 2))
    s2 = SpanCell(A, B, FinSetObj(("u", "w", "z")), ("a0",) * 3, (2, 2, 1))
    out = span_sum(s1, s2)
    assert out.apex.elements == ((0, "u"), (0, "v"), (1, "u"), (1, "w"), (1, "z"))
    assert out.right_leg == (1, 2, 2, 2, 1)


def test_span_validation():
    with pytest.raises(ValueError):
        SpanCell(A, B, FinSetObj(("x",)), ("a0",), (3,))
    with pytest.raises(ValueError):
        FinSetObj((1, 1))
    with pytest.raises(EndpointMismatch):
        span_sum(identity_span(A), empty_span(A, B))


def test_span_map_must_respect_legs():
    s = SpanCell(A, B, FinSetObj(("x", "y")), ("a0", "a0"), (1, 2))
    with pytest.raises(EndpointMismatch):
        SpanMap(s, s, {"x": "y", "y": "x"})
    assert SpanMap(s, s, {"x": "x", "y": "y"}).is_bijection


SIG = make_signature("a b c", {"f": ("a", "b"), "g": ("b", "c"), "g'": ("b", "c")})


def _instance():
    f = SpanCell(A, B, FinSetObj(("x1", "x2")), ("a0", "a0"), (1, 2))
    g = SpanCell(B, C, FinSetObj(("y",)), (1,), ("c",))
    g2 = SpanCell(B, C, FinSetObj(("z1", "z2")), (2, 1), ("c", "c"))
    return SpanInstance({"a": A, "b": B, "c": C}, {"f": f, "g": g, "g'": g2}, sig=SIG)


def test_symmetry_swaps_blocks():
    inst = _instance()
    m = inst.two_cell(Sym(Gen("g"), Gen("g'")), SIG)
    assert m.mapping == {(0, "y"): (1, "y"), (1, "z1"): (0, "z1"), (1, "z2"): (0, "z2")}


def test_left_distributor_is_an_apex_bijection():
    inst = _instance()
    m = inst.two_cell(DistL(Sum(Gen("g"), Gen("g'")), Gen("f"), Gen("f")), SIG)
    assert m.is_bijection
    src, tgt = boundary(DistL(Sum(Gen("g"), Gen("g'")), Gen("f"), Gen("f")), SIG)
    assert m.source == inst.one_cell(src)
    assert m.target == inst.one_cell(tgt)


def test_unitor():
    inst = _instance()
    m = inst.two_cell(LUnit(Gen("f")), SIG)
    assert m.mapping == {("x1", 1): "x1", ("x2", 2): "x2"}


def test_missing_pieces():
    inst = SpanInstance({"a": A, "b": B}, {})
    with pytest.raises(MissingAssignment):
        inst.one_cell(Gen("f"))
    with pytest.raises(MissingAssignment):
        inst.one_cell(Gen("g"))
    sig = make_signature("a", {"k": ("a", "a")}, {"alpha": (Gen("k"), Gen("k"))})
    inst = SpanInstance({"a": A}, {"k": identity_span(A)}, sig=sig)
    with pytest.raises(MissingAssignment):
        inst.two_cell(Gen2("alpha"), sig)
    with pytest.raises(MissingAssignment):
        inst.null("a", "z")


def test_wrong_endpoints_detected():
    inst = SpanInstance({"a": A, "b": B, "c": C}, {"f": identity_span(A)}, sig=SIG)
    with pytest.raises(EndpointMismatch):
        inst.one_cell(Gen("f"))


@pytest.mark.parametrize("name", sorted(SHAPES))
def test_naturality_holds_on_random_instances(name):
    rng = random.Random(name)
    sig = SPAN_SIGNATURE
    for _ in range(5):
        inst = random_span_instance(rng)
        thetas = [rng.choice(_NAT_CELLS[hm]) for hm in SHAPES[name][1]]
        p1, p2 = naturality_square(name, thetas, sig)
        assert span_paths_agree(inst, p1, p2, sig)


def test_swapped_pairs_break_the_left_distributor_square():
    rng = random.Random(3)
    bad = 0
    for _ in range(20):
        inst = random_span_instance(rng, model=SwappedPairModel())
        e = HComp(Gen("q"), Sum(Gen("p"), Gen("p3")))
        m = inst.two_cell(Id2(e), SPAN_SIGNATURE)
        try:
            inst.two_cell(DistL(Gen("q"), Gen("p"), Gen("p3")), SPAN_SIGNATURE)
        except EndpointMismatch:
            bad += 1
        assert m.is_bijection
    assert bad > 0
