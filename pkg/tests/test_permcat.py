import pytest
from hypothesis import given, strategies as st

from smcstrict.errors import EndpointMismatch, InvalidFunctor
from smcstrict.instances import (PermCatInstance, eta_violations, functor_sum, functor_sum_chain,
                                 padded, reversal, strictly_unitalize, substitution, tilde_tensor,
                                 tilde_tensor_objects)

P = PermCatInstance(("x", "y"), frozenset({"z"}))


def test_instance_is_strict_and_symmetric():
    assert P.law_violations(3) == []


def test_null_letters_are_invisible():
    assert P.isomorphic(("z",), ())
    assert P.isomorphic(("x", "z", "y"), ("y", "x"))
    assert not P.isomorphic(("x",), ("y",))


def test_morphism_validation():
    with pytest.raises(EndpointMismatch):
        P.morphism(("x", "y"), ("x", "y"), [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        PermCatInstance(("x", "x"))


def test_example_functors_are_coherent():
    objs = P.objects(2)
    assert reversal(P).violations(objs) == []
    sub = substitution(P, P, {"x": ("x", "y"), "y": ("y",), "z": ("z", "z")})
    assert sub.violations(objs) == []
    with pytest.raises(InvalidFunctor):
        substitution(P, P, {"x": ("x",), "y": ("y",), "z": ("x",)})


def test_padded_functor_is_not_strictly_unital():
    phi = padded(reversal(P), "z")
    assert not phi.strictly_unital
    assert phi.violations(P.objects(2)) == []


def test_strictly_unitalize():
    phi = padded(reversal(P), "z")
    objs = P.objects(2)
    out = strictly_unitalize(phi, objs)
    psi = out.functor
    assert psi.strictly_unital
    assert psi.obj(()) == ()
    assert psi.violations(objs) == []
    assert eta_violations(out, phi, objs) == []


def test_strictly_unitalize_rejects_incoherent_input():
    phi = reversal(P)
    broken = phi.__class__(phi.source, phi.target, phi.obj, phi.mor,
                           lambda x, y: P.identity(phi.obj(x) + phi.obj(y)), phi.unit_iso)
    with pytest.raises(InvalidFunctor):
        strictly_unitalize(broken, P.objects(2))


def test_functor_sum_swaps_middle_blocks():
    F = reversal(P)
    G = substitution(P, P, {"x": ("x",), "y": ("y",), "z": ("z",)})
    chain = functor_sum_chain(F, G, ("x",), ("y",))
    assert [m.src for m in chain][:2] == [("x", "x", "y", "y")] * 2
    assert chain[1].pairs == ((0, 0), (1, 2), (2, 1), (3, 3))
    S = functor_sum(F, G)
    assert S.violations(P.objects(2)) == []


def test_functor_sum_of_strictly_unital_is_strictly_unital():
    F = reversal(P)
    assert functor_sum(F, F).strictly_unital


def test_tilde_tensor_numbers():
    assert tilde_tensor(0, 7) == 0
    assert tilde_tensor(1, 5) == 5
    assert tilde_tensor(3, 4) == 12


@given(st.integers(0, 50), st.integers(0, 50))
def test_tilde_tensor_agrees_with_product(n, m):
    assert tilde_tensor(n, m) == n * m


def test_tilde_tensor_objects():
    assert tilde_tensor_objects(P, (), ("x",)) == ()
    assert tilde_tensor_objects(P, ("x",), ("x", "y")) == ("xx", "xy")
