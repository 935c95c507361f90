"""Coherence diagrams as pairs of cell paths, and their typed instantiation.

A :class:`Condition` names a diagram shape: its object variables, its
expression variables with their homs, and a builder returning two paths
(cells listed in application order) between the same 1-cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence

from ..cells import (AddAssoc, AddUnitL, AssocH, DistL, DistR, HComp2, Id2, Inv,
                     LUnit, NullL, NullR, RUnit, SumCells, Sym, TwoCellExpr)
from ..core import HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit

Path = list[TwoCellExpr]


@dataclass(frozen=True)
class Condition:
    name: str
    objects: tuple[str, ...]                      # object variables
    exprs: tuple[tuple[str, str, str], ...]       # (variable, src var, tgt var)
    build: Callable[..., tuple[Path, Path]]

    def instances(self, sig: Signature, by_hom: Mapping[tuple[str, str], Sequence[OneCellExpr]]
                  ) -> Iterator[tuple[dict, tuple[Path, Path]]]:
        """Every well-typed assignment, with the two paths it yields."""
        for objs in itertools.product(sig.zero_cells, repeat=len(self.objects)):
            env = dict(zip(self.objects, objs))
            pools = [by_hom.get((env[s], env[t]), ()) for _, s, t in self.exprs]
            for choice in itertools.product(*pools):
                args = dict(zip((v for v, _, _ in self.exprs), choice))
                args.update(env)
                yield args, self.build(**args)

    def count(self, sig: Signature, by_hom) -> int:
        total = 0
        for objs in itertools.product(sig.zero_cells, repeat=len(self.objects)):
            env = dict(zip(self.objects, objs))
            n = 1
            for _, s, t in self.exprs:
                n *= len(by_hom.get((env[s], env[t]), ()))
            total += n
        return total


def middle_swap(a: OneCellExpr, b: OneCellExpr, c: OneCellExpr, d: OneCellExpr) -> Path:
    """``(a + b) + (c + d) => (a + c) + (b + d)`` from associators and one symmetry."""
    return [
        AddAssoc(Sum(a, b), c, d),
        SumCells(Inv(AddAssoc(a, b, c)), Id2(d)),
        SumCells(SumCells(Id2(a), Sym(b, c)), Id2(d)),
        SumCells(AddAssoc(a, c, b), Id2(d)),
        Inv(AddAssoc(Sum(a, c), b, d)),
    ]


# -- the five PC conditions -------------------------------------------------------

def _square(f1, f2, g1, g2, **_):
    left = [DistL(Sum(f1, f2), g1, g2), SumCells(DistR(f1, f2, g1), DistR(f1, f2, g2))]
    right = [DistR(f1, f2, Sum(g1, g2)), SumCells(DistL(f1, g1, g2), DistL(f2, g1, g2)),
             *middle_swap(HComp(f1, g1), HComp(f1, g2), HComp(f2, g1), HComp(f2, g2))]
    return left, right


def _zero_dist(f, g, a, b, c, **_):
    left = [DistL(ZeroUnit(b, c), f, g), SumCells(NullL(f, c), NullL(g, c)), AddUnitL(ZeroUnit(a, c))]
    return left, [NullL(Sum(f, g), c)]


def _comp_dist(f, g, h1, h2, **_):
    left = [DistL(HComp(f, g), h1, h2)]
    right = [Inv(AssocH(f, g, Sum(h1, h2))), HComp2(Id2(f), DistL(g, h1, h2)),
             DistL(f, HComp(g, h1), HComp(g, h2)),
             SumCells(AssocH(f, g, h1), AssocH(f, g, h2))]
    return left, right


def _dist_whisker(f, g1, g2, h, **_):
    left = [HComp2(DistL(f, g1, g2), Id2(h)), DistR(HComp(f, g1), HComp(f, g2), h)]
    right = [Inv(AssocH(f, Sum(g1, g2), h)), HComp2(Id2(f), DistR(g1, g2, h)),
             DistL(f, HComp(g1, h), HComp(g2, h)),
             SumCells(AssocH(f, g1, h), AssocH(f, g2, h))]
    return left, right


def _unit_dist(f, g, b, **_):
    return [DistL(IdUnit(b), f, g), SumCells(LUnit(f), LUnit(g))], [LUnit(Sum(f, g))]


PC_CONDITIONS: tuple[Condition, ...] = (
    Condition("pc-i", ("x", "y", "z"),
              (("f1", "y", "z"), ("f2", "y", "z"), ("g1", "x", "y"), ("g2", "x", "y")), _square),
    Condition("pc-ii", ("a", "b", "c"), (("f", "a", "b"), ("g", "a", "b")),
              _zero_dist),
    Condition("pc-iii", ("a", "b", "c", "d"),
              (("f", "c", "d"), ("g", "b", "c"), ("h1", "a", "b"), ("h2", "a", "b")), _comp_dist),
    Condition("pc-iv", ("a", "b", "c", "d"),
              (("f", "c", "d"), ("g1", "b", "c"), ("g2", "b", "c"), ("h", "a", "b")), _dist_whisker),
    Condition("pc-v", ("a", "b"), (("f", "a", "b"), ("g", "a", "b")), _unit_dist),
)


# -- further coherence diagrams of the weak structure --------------------------------

def _runit_sum(f, g, a, **_):
    return [DistR(f, g, IdUnit(a)), SumCells(RUnit(f), RUnit(g))], [RUnit(Sum(f, g))]


def _sym_distl(f, g, h, **_):
    left = [HComp2(Id2(f), Sym(g, h)), DistL(f, h, g)]
    return left, [DistL(f, g, h), Sym(HComp(f, g), HComp(f, h))]


def _sym_distr(f, g, h, **_):
    left = [HComp2(Sym(f, g), Id2(h)), DistR(g, f, h)]
    return left, [DistR(f, g, h), Sym(HComp(f, h), HComp(g, h))]


def _assoc_distr(f, g, h, k, **_):
    left = [HComp2(AddAssoc(f, g, h), Id2(k)), DistR(Sum(f, g), h, k),
            SumCells(DistR(f, g, k), Id2(HComp(h, k)))]
    right = [DistR(f, Sum(g, h), k), SumCells(Id2(HComp(f, k)), DistR(g, h, k)),
             AddAssoc(HComp(f, k), HComp(g, k), HComp(h, k))]
    return left, right


def _assoc_distl(f, g, h, k, **_):
    left = [HComp2(Id2(f), AddAssoc(g, h, k)), DistL(f, Sum(g, h), k),
            SumCells(DistL(f, g, h), Id2(HComp(f, k)))]
    right = [DistL(f, g, Sum(h, k)), SumCells(Id2(HComp(f, g)), DistL(f, h, k)),
             AddAssoc(HComp(f, g), HComp(f, h), HComp(f, k))]
    return left, right


def _null_distr(f, g, a, b, c, **_):
    left = [DistR(f, g, ZeroUnit(a, b)), SumCells(NullR(f, a), NullR(g, a)), AddUnitL(ZeroUnit(a, c))]
    return left, [NullR(Sum(f, g), a)]


def _triangle(f, g, b, **_):
    return [AssocH(f, IdUnit(b), g), HComp2(RUnit(f), Id2(g))], [HComp2(Id2(f), LUnit(g))]


def _pentagon(f, g, h, k, **_):
    left = [AssocH(f, g, HComp(h, k)), AssocH(HComp(f, g), h, k)]
    right = [HComp2(Id2(f), AssocH(g, h, k)), AssocH(f, HComp(g, h), k), HComp2(AssocH(f, g, h), Id2(k))]
    return left, right


def _hexagon(f, g, h, **_):
    left = [AddAssoc(f, g, h), Sym(Sum(f, g), h), AddAssoc(h, f, g)]
    right = [SumCells(Id2(f), Sym(g, h)), AddAssoc(f, h, g), SumCells(Sym(f, h), Id2(g))]
    return left, right


def _sym_involution(f, g, **_):
    return [Sym(f, g), Sym(g, f)], [Id2(Sum(f, g))]


EXTRA_CONDITIONS: tuple[Condition, ...] = (
    Condition("runit-sum", ("a", "b"), (("f", "a", "b"), ("g", "a", "b")), _runit_sum),
    Condition("sym-distl", ("a", "b", "c"), (("f", "b", "c"), ("g", "a", "b"), ("h", "a", "b")), _sym_distl),
    Condition("sym-distr", ("a", "b", "c"), (("f", "b", "c"), ("g", "b", "c"), ("h", "a", "b")), _sym_distr),
    Condition("assoc-distr", ("a", "b", "c"),
              (("f", "b", "c"), ("g", "b", "c"), ("h", "b", "c"), ("k", "a", "b")), _assoc_distr),
    Condition("assoc-distl", ("a", "b", "c"),
              (("f", "b", "c"), ("g", "a", "b"), ("h", "a", "b"), ("k", "a", "b")), _assoc_distl),
    Condition("null-distr", ("a", "b", "c"), (("f", "b", "c"), ("g", "b", "c")), _null_distr),
    Condition("triangle", ("a", "b", "c"), (("f", "b", "c"), ("g", "a", "b")), _triangle),
    Condition("pentagon", ("a", "b", "c", "d", "e"),
              (("f", "d", "e"), ("g", "c", "d"), ("h", "b", "c"), ("k", "a", "b")), _pentagon),
    Condition("hexagon", ("a", "b"), (("f", "a", "b"), ("g", "a", "b"), ("h", "a", "b")), _hexagon),
    Condition("sym-involution", ("a", "b"), (("f", "a", "b"), ("g", "a", "b")), _sym_involution),
)

ALL_CONDITIONS = PC_CONDITIONS + EXTRA_CONDITIONS


def by_hom(exprs: Sequence[OneCellExpr], sig: Signature) -> dict[tuple[str, str], list[OneCellExpr]]:
    from ..core import endpoints
    out: dict[tuple[str, str], list[OneCellExpr]] = {}
    for e in exprs:
        out.setdefault(endpoints(e, sig), []).append(e)
    return out


def condition(name: str) -> Condition:
    for c in ALL_CONDITIONS:
        if c.name == name:
            return c
    raise KeyError(name)
