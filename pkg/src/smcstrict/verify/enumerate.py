"""Bounded enumeration and random generation of well-typed expressions."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from ..core import Gen, HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit, well_formed
from ..normalize import Monomial, NormalForm


def _leaves(sig: Signature) -> dict[tuple[str, str], list[OneCellExpr]]:
    out: dict[tuple[str, str], list[OneCellExpr]] = {
        (a, b): [] for a in sig.zero_cells for b in sig.zero_cells}
    for g in sig.gen1:
        out[(g.src, g.tgt)].append(Gen(g.name))
    for a in sig.zero_cells:
        out[(a, a)].append(IdUnit(a))
    for a in sig.zero_cells:
        for b in sig.zero_cells:
            out[(a, b)].append(ZeroUnit(a, b))
    return out


def leaf_exprs(sig: Signature) -> list[OneCellExpr]:
    """Depth-0 expressions: generators, then units, then zeros for every ordered pair."""
    return ([Gen(g.name) for g in sig.gen1] + [IdUnit(a) for a in sig.zero_cells]
            + [ZeroUnit(a, b) for a in sig.zero_cells for b in sig.zero_cells])


def iter_exprs(sig: Signature, depth: int) -> Iterator[OneCellExpr]:
    """Lazily yield every well-formed expression of depth <= ``depth``.

    Expressions come out grouped by exact depth, so the output for ``d`` is a
    prefix of the output for ``d + 1``.  Within a depth the order is: hom
    (in 0-cell order), then composites, then sums.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    objs = sig.zero_cells
    homs = [(a, b) for a in objs for b in objs]
    yield from leaf_exprs(sig)
    upto = _leaves(sig)      # depth <= d-1, per hom
    exact = _leaves(sig)     # depth == d-1, per hom
    for d in range(1, depth + 1):
        new: dict[tuple[str, str], list[OneCellExpr]] = {h: [] for h in homs}
        for a, c in homs:
            bucket = new[(a, c)]
            for b in objs:
                bucket += _fresh_products(HComp, upto[(b, c)], exact[(b, c)],
                                          upto[(a, b)], exact[(a, b)])
            bucket += _fresh_products(Sum, upto[(a, c)], exact[(a, c)], upto[(a, c)], exact[(a, c)])
            yield from bucket
            if d == depth:
                bucket.clear()   # the last level is never reused
        exact = new
        upto = {h: upto[h] + new[h] for h in homs}


def _fresh_products(make, left_all, left_new, right_all, right_new) -> list[OneCellExpr]:
    """``make(x, y)`` for pairs with at least one component of the newest depth, without repeats."""
    new_ids = {id(x) for x in left_new}
    return [make(x, y) for x in left_all
            for y in (right_all if id(x) in new_ids else right_new)]


def enumerate_exprs(sig: Signature, depth: int) -> list[OneCellExpr]:
    return list(iter_exprs(sig, depth))


def brute_force_count(sig: Signature, depth: int) -> int:
    """Count well-formed trees by generating every untyped tree and filtering."""
    trees = leaf_exprs(sig)
    for _ in range(depth):
        trees = leaf_exprs(sig) + [k(x, y) for k in (HComp, Sum) for x in trees for y in trees]
    return sum(1 for t in set(trees) if well_formed(t, sig))


# -- normal forms -------------------------------------------------------------

def strings(sig: Signature, src: str, tgt: str, max_len: int) -> list[Monomial]:
    """All composable generator strings ``src -> tgt`` of length <= ``max_len``."""
    out = [Monomial(src, tgt, ())] if src == tgt else []
    paths = [((), src)]
    for _ in range(max_len):
        paths = [((g.name,) + word, g.tgt) for word, here in paths for g in sig.gen1 if g.src == here]
        out.extend(Monomial(src, tgt, w) for w, end in paths if end == tgt)
    return out


def enumerate_normal_forms(sig: Signature, src: str, tgt: str, max_monomials: int,
                           max_len: int) -> Iterator[NormalForm]:
    monos = strings(sig, src, tgt, max_len)
    for k in range(max_monomials + 1):
        for seq in itertools.product(monos, repeat=k):
            yield NormalForm(src, tgt, seq)


# -- random expressions ---------------------------------------------------------

def random_expr(sig: Signature, depth: int, rng: random.Random,
                hom: tuple[str, str] | None = None, leaf_bias: float = 0.3) -> OneCellExpr:
    """A random well-formed expression of depth <= ``depth``."""
    objs = sig.zero_cells
    a, b = hom if hom is not None else (rng.choice(objs), rng.choice(objs))
    return _random(sig, a, b, depth, rng, leaf_bias)


def _random(sig, a, b, depth, rng, leaf_bias):
    if depth == 0 or rng.random() < leaf_bias:
        choices: list[OneCellExpr] = [Gen(g.name) for g in sig.gen1 if (g.src, g.tgt) == (a, b)]
        if a == b:
            choices.append(IdUnit(a))
        choices.append(ZeroUnit(a, b))
        return rng.choice(choices)
    if rng.random() < 0.5:
        return Sum(_random(sig, a, b, depth - 1, rng, leaf_bias),
                   _random(sig, a, b, depth - 1, rng, leaf_bias))
    m = rng.choice(sig.zero_cells)
    return HComp(_random(sig, m, b, depth - 1, rng, leaf_bias),
                 _random(sig, a, m, depth - 1, rng, leaf_bias))
