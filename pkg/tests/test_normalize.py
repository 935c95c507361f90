import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from smcstrict.cells import boundary, is_structural
from smcstrict.core import (Gen, HComp, IdUnit, Sum, ZeroUnit, default_signature, endpoints,
                            standard_signature)
from smcstrict.errors import EndpointMismatch, IllTyped
from smcstrict.normalize import (Monomial, NormalForm, canonical_iso, embed, nf_text, normalize,
                                 strict_compose, strict_sum, unit_nf, zero_nf)
from smcstrict.twocell import perm_of
from smcstrict.verify.enumerate import random_expr

STD = standard_signature()
SMALL = default_signature()


def strings_of(e, sig):
    """Reference semantics: the list of strings, computed directly on the tree."""
    if isinstance(e, Gen):
        return [(e.name,)]
    if isinstance(e, IdUnit):
        return [()]
    if isinstance(e, ZeroUnit):
        return []
    if isinstance(e, Sum):
        return strings_of(e.left, sig) + strings_of(e.right, sig)
    return [x + y for x in strings_of(e.outer, sig) for y in strings_of(e.inner, sig)]


def nf(*words, src="a", tgt="a"):
    return NormalForm(src, tgt, tuple(Monomial(src, tgt, tuple(w)) for w in words))


def test_composition_clause():
    e = HComp(Sum(Gen("g"), Gen("g'")), Sum(Gen("f"), Gen("f'")))
    assert nf_text(normalize(e, STD)) == "g.f + g.f' + g'.f + g'.f'"


def test_zero_absorbs_and_vanishes():
    e = Sum(HComp(ZeroUnit("b", "c"), Gen("f")), Gen("h"))
    assert normalize(e, STD) == normalize(Gen("h"), STD)
    assert nf_text(normalize(ZeroUnit("a", "b"), STD)) == "0@a->b"


def test_unit_text():
    assert nf_text(unit_nf("a")) == "1@a"


def test_ill_typed_input_raises_ill_typed():
    with pytest.raises(IllTyped):
        normalize(HComp(Gen("f"), Gen("g")), STD)


def test_strict_compose_checks_types():
    with pytest.raises(EndpointMismatch):
        strict_compose(nf("f", src="a", tgt="b"), nf("f", src="a", tgt="b"))


def test_monomial_typing():
    with pytest.raises(EndpointMismatch):
        Monomial("a", "b", ())
    with pytest.raises(EndpointMismatch):
        NormalForm("a", "a", (Monomial("a", "b", ("f",)),))


def test_left_distributivity_is_a_shuffle():
    x, y, z = nf("g", "h"), nf("f"), nf("k")
    lhs = strict_compose(x, strict_sum(y, z))
    rhs = strict_sum(strict_compose(x, y), strict_compose(x, z))
    assert [m.gens for m in lhs] == [("g", "f"), ("g", "k"), ("h", "f"), ("h", "k")]
    assert [m.gens for m in rhs] == [("g", "f"), ("h", "f"), ("g", "k"), ("h", "k")]
    assert Counter(lhs.monomials) == Counter(rhs.monomials)


def test_right_distributivity_on_the_nose():
    x, y, z = nf("g"), nf("h"), nf("f", "k")
    assert strict_compose(strict_sum(x, y), z) == strict_sum(strict_compose(x, z), strict_compose(y, z))


def test_embed_shape():
    e = embed(nf("f", "ff", ()))
    assert e == Sum(Gen("f"), Sum(HComp(Gen("f"), Gen("f")), IdUnit("a")))
    assert embed(zero_nf("a", "a")) == ZeroUnit("a", "a")


def test_canonical_iso_example():
    e = HComp(Sum(Gen("g"), Gen("g'")), Sum(Gen("f"), Gen("f'")))
    c = canonical_iso(e, STD)
    assert boundary(c, STD) == (e, embed(normalize(e, STD)))
    assert is_structural(c)
    assert perm_of(c, STD).is_identity


@st.composite
def seeded_exprs(draw, sig=SMALL, depth=5):
    return random_expr(sig, depth, random.Random(draw(st.integers(0, 2**32))))


@settings(max_examples=300, deadline=None)
@given(seeded_exprs())
def test_normalize_matches_reference_strings(e):
    assert [m.gens for m in normalize(e, SMALL)] == strings_of(e, SMALL)


@settings(max_examples=300, deadline=None)
@given(seeded_exprs(STD))
def test_normal_form_keeps_type(e):
    n = normalize(e, STD)
    assert (n.src, n.tgt) == endpoints(e, STD)
    assert normalize(embed(n), STD) == n


@settings(max_examples=200, deadline=None)
@given(seeded_exprs(), seeded_exprs())
def test_normalize_is_homomorphic(x, y):
    assert normalize(HComp(x, y), SMALL) == strict_compose(normalize(x, SMALL), normalize(y, SMALL))
    assert normalize(Sum(x, y), SMALL) == strict_sum(normalize(x, SMALL), normalize(y, SMALL))


@settings(max_examples=150, deadline=None)
@given(seeded_exprs(depth=4))
def test_canonical_iso_is_identity_on_positions(e):
    c = canonical_iso(e, SMALL)
    assert boundary(c, SMALL) == (e, embed(normalize(e, SMALL)))
    assert perm_of(c, SMALL).is_identity


words = st.lists(st.lists(st.just("f"), max_size=3).map(tuple), max_size=4)


@given(words, words, words)
def test_strict_operations_are_strict(a, b, c):
    x, y, z = nf(*a), nf(*b), nf(*c)
    assert strict_compose(strict_compose(x, y), z) == strict_compose(x, strict_compose(y, z))
    assert strict_sum(strict_sum(x, y), z) == strict_sum(x, strict_sum(y, z))
    assert strict_compose(unit_nf("a"), x) == x == strict_compose(x, unit_nf("a"))
    assert strict_compose(zero_nf("a", "a"), x) == zero_nf("a", "a") == strict_compose(x, zero_nf("a", "a"))
    assert strict_compose(strict_sum(x, y), z) == strict_sum(strict_compose(x, z), strict_compose(y, z))
    lhs = strict_compose(x, strict_sum(y, z))
    rhs = strict_sum(strict_compose(x, y), strict_compose(x, z))
    assert Counter(lhs.monomials) == Counter(rhs.monomials)
