"""Formal 2-cell expressions and their boundaries.

Structural constructors and the boundary each one declares::

    AssocH(f, g, h)     f o (g o h)   =>  (f o g) o h
    LUnit(f)            1 o f         =>  f
    RUnit(f)            f o 1         =>  f
    AddAssoc(f, g, h)   f + (g + h)   =>  (f + g) + h
    AddUnitL(f)         0 + f         =>  f
    AddUnitR(f)         f + 0         =>  f
    Sym(f, g)           f + g         =>  g + f
    DistL(f, g, h)      f o (g + h)   =>  f o g + f o h
    DistR(f, g, h)      (f + g) o h   =>  f o h + g o h
    NullL(f, c)         0_{b,c} o f   =>  0_{a,c}        (f: a -> b)
    NullR(f, a)         f o 0_{a,b}   =>  0_{a,c}        (f: b -> c)

plus ``Id2``, ``Gen2`` (a declared generating 2-cell), vertical composition
``VComp(later, earlier)``, whiskering/horizontal composition ``HComp2``,
``SumCells`` and ``Inv``.  The nullity cells carry the far 0-cell of the
zero, which cannot be recovered from ``f`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ._node import Node, hashed
from .core import (HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit,
                   endpoints, expr_text)
from .errors import BoundaryMismatch, IllTyped, NotStructural

__all__ = [
    "TwoCellExpr", "Id2", "Gen2", "VComp", "HComp2", "SumCells", "Inv",
    "AssocH", "LUnit", "RUnit", "AddAssoc", "AddUnitL", "AddUnitR", "Sym",
    "DistL", "DistR", "NullL", "NullR",
    "boundary", "invert", "is_structural", "cell_text", "vcomp", "hcomp2",
    "sumcells", "vcomp_all",
]


class TwoCellExpr(Node):
    __slots__ = ()

    def __str__(self) -> str:
        return cell_text(self)


def _cell(cls):
    return hashed(dataclass(frozen=True, eq=True, slots=True)(cls))


@_cell
class Id2(TwoCellExpr):
    e: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class Gen2(TwoCellExpr):
    name: str
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class VComp(TwoCellExpr):
    later: TwoCellExpr
    earlier: TwoCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class HComp2(TwoCellExpr):
    outer: TwoCellExpr
    inner: TwoCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class SumCells(TwoCellExpr):
    left: TwoCellExpr
    right: TwoCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class Inv(TwoCellExpr):
    cell: TwoCellExpr
    _h: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_structural(self.cell):
            raise NotStructural(f"cannot invert {cell_text(self.cell)}: it contains a generating 2-cell")
        Node.__post_init__(self)


@_cell
class AssocH(TwoCellExpr):
    f: OneCellExpr
    g: OneCellExpr
    h: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class LUnit(TwoCellExpr):
    f: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class RUnit(TwoCellExpr):
    f: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class AddAssoc(TwoCellExpr):
    f: OneCellExpr
    g: OneCellExpr
    h: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class AddUnitL(TwoCellExpr):
    f: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class AddUnitR(TwoCellExpr):
    f: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class Sym(TwoCellExpr):
    f: OneCellExpr
    g: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class DistL(TwoCellExpr):
    f: OneCellExpr
    g: OneCellExpr
    h: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class DistR(TwoCellExpr):
    f: OneCellExpr
    g: OneCellExpr
    h: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class NullL(TwoCellExpr):
    f: OneCellExpr
    far: str
    _h: int = field(init=False, repr=False, compare=False)


@_cell
class NullR(TwoCellExpr):
    f: OneCellExpr
    far: str
    _h: int = field(init=False, repr=False, compare=False)


# constructor name in the surface syntax -> class
SURFACE_NAMES = {
    "assoc": AssocH, "lunit": LUnit, "runit": RUnit, "addassoc": AddAssoc,
    "addunitl": AddUnitL, "addunitr": AddUnitR, "sym": Sym, "distl": DistL,
    "distr": DistR, "nulll": NullL, "nullr": NullR,
}
_SURFACE_OF = {cls: name for name, cls in SURFACE_NAMES.items()}

_LEAF_TYPES = tuple(SURFACE_NAMES.values())


@lru_cache(maxsize=1 << 16)
def is_structural(c: TwoCellExpr) -> bool:
    """True when ``c`` mentions no generating 2-cell."""
    if isinstance(c, Gen2):
        return False
    if isinstance(c, VComp):
        return is_structural(c.later) and is_structural(c.earlier)
    if isinstance(c, HComp2):
        return is_structural(c.outer) and is_structural(c.inner)
    if isinstance(c, SumCells):
        return is_structural(c.left) and is_structural(c.right)
    if isinstance(c, Inv):
        return is_structural(c.cell)
    return True


def _leaf_boundary(c: TwoCellExpr, sig: Signature) -> tuple[OneCellExpr, OneCellExpr]:
    if isinstance(c, AssocH):
        return HComp(c.f, HComp(c.g, c.h)), HComp(HComp(c.f, c.g), c.h)
    if isinstance(c, LUnit):
        _, b = endpoints(c.f, sig)
        return HComp(IdUnit(b), c.f), c.f
    if isinstance(c, RUnit):
        a, _ = endpoints(c.f, sig)
        return HComp(c.f, IdUnit(a)), c.f
    if isinstance(c, AddAssoc):
        return Sum(c.f, Sum(c.g, c.h)), Sum(Sum(c.f, c.g), c.h)
    if isinstance(c, AddUnitL):
        a, b = endpoints(c.f, sig)
        return Sum(ZeroUnit(a, b), c.f), c.f
    if isinstance(c, AddUnitR):
        a, b = endpoints(c.f, sig)
        return Sum(c.f, ZeroUnit(a, b)), c.f
    if isinstance(c, Sym):
        return Sum(c.f, c.g), Sum(c.g, c.f)
    if isinstance(c, DistL):
        return HComp(c.f, Sum(c.g, c.h)), Sum(HComp(c.f, c.g), HComp(c.f, c.h))
    if isinstance(c, DistR):
        return HComp(Sum(c.f, c.g), c.h), Sum(HComp(c.f, c.h), HComp(c.g, c.h))
    if isinstance(c, NullL):
        a, b = endpoints(c.f, sig)
        return HComp(ZeroUnit(b, c.far), c.f), ZeroUnit(a, c.far)
    if isinstance(c, NullR):
        b, cc = endpoints(c.f, sig)
        return HComp(c.f, ZeroUnit(c.far, b)), ZeroUnit(c.far, cc)
    raise TypeError(f"not a 2-cell expression: {c!r}")


@lru_cache(maxsize=1 << 18)
def boundary(c: TwoCellExpr, sig: Signature) -> tuple[OneCellExpr, OneCellExpr]:
    """Source and target 1-cells of ``c``; both are checked to be well formed and parallel."""
    if isinstance(c, Id2):
        endpoints(c.e, sig)
        return c.e, c.e
    if isinstance(c, Gen2):
        g = sig.cell(c.name)
        return g.src, g.tgt
    if isinstance(c, VComp):
        s1, t1 = boundary(c.earlier, sig)
        s2, t2 = boundary(c.later, sig)
        if t1 != s2:
            raise BoundaryMismatch(
                f"vertical composite: {expr_text(t1)} is not {expr_text(s2)}")
        return s1, t2
    if isinstance(c, HComp2):
        so, to = boundary(c.outer, sig)
        si, ti = boundary(c.inner, sig)
        if endpoints(so, sig)[0] != endpoints(si, sig)[1]:
            raise BoundaryMismatch(
                f"horizontal composite: {expr_text(so)} does not follow {expr_text(si)}")
        return HComp(so, si), HComp(to, ti)
    if isinstance(c, SumCells):
        sl, tl = boundary(c.left, sig)
        sr, tr = boundary(c.right, sig)
        if endpoints(sl, sig) != endpoints(sr, sig):
            raise BoundaryMismatch(
                f"sum of cells: {expr_text(sl)} and {expr_text(sr)} are not parallel")
        return Sum(sl, sr), Sum(tl, tr)
    if isinstance(c, Inv):
        s, t = boundary(c.cell, sig)
        return t, s
    src, tgt = _leaf_boundary(c, sig)
    try:
        if endpoints(src, sig) != endpoints(tgt, sig):  # pragma: no cover - constructors are typed
            raise BoundaryMismatch(f"{cell_text(c)} joins non-parallel 1-cells")
    except IllTyped as exc:
        raise IllTyped(f"in {cell_text(c)}: {exc.reason}", exc.path) from None
    return src, tgt


def invert(c: TwoCellExpr) -> TwoCellExpr:
    """Formal inverse, pushed through composites; leaves get wrapped in ``Inv``."""
    if not is_structural(c):
        raise NotStructural(f"cannot invert {cell_text(c)}")
    if isinstance(c, Id2):
        return c
    if isinstance(c, Inv):
        return c.cell
    if isinstance(c, VComp):
        return VComp(invert(c.earlier), invert(c.later))
    if isinstance(c, HComp2):
        return HComp2(invert(c.outer), invert(c.inner))
    if isinstance(c, SumCells):
        return SumCells(invert(c.left), invert(c.right))
    return Inv(c)


# -- smart constructors used by the normaliser and the diagram library ------

def vcomp(later: TwoCellExpr, earlier: TwoCellExpr) -> TwoCellExpr:
    if isinstance(earlier, Id2):
        return later
    if isinstance(later, Id2):
        return earlier
    return VComp(later, earlier)


def vcomp_all(*cells: TwoCellExpr) -> TwoCellExpr:
    """Compose cells listed in the order they are applied."""
    out = cells[0]
    for c in cells[1:]:
        out = vcomp(c, out)
    return out


def hcomp2(outer: TwoCellExpr, inner: TwoCellExpr) -> TwoCellExpr:
    if isinstance(outer, Id2) and isinstance(inner, Id2):
        return Id2(HComp(outer.e, inner.e))
    return HComp2(outer, inner)


def sumcells(left: TwoCellExpr, right: TwoCellExpr) -> TwoCellExpr:
    if isinstance(left, Id2) and isinstance(right, Id2):
        return Id2(Sum(left.e, right.e))
    return SumCells(left, right)


# -- surface text -----------------------------------------------------------

def cell_text(c: TwoCellExpr) -> str:
    if isinstance(c, Id2):
        return f"id({expr_text(c.e)})"
    if isinstance(c, Gen2):
        return c.name
    if isinstance(c, VComp):
        return f"vcomp({cell_text(c.later)}, {cell_text(c.earlier)})"
    if isinstance(c, Inv):
        return f"inv({cell_text(c.cell)})"
    if isinstance(c, SumCells):
        right = cell_text(c.right)
        if isinstance(c.right, SumCells):
            right = f"({right})"
        return f"{cell_text(c.left)} + {right}"
    if isinstance(c, HComp2):
        outer = cell_text(c.outer)
        if isinstance(c.outer, SumCells):
            outer = f"({outer})"
        inner = cell_text(c.inner)
        if isinstance(c.inner, (SumCells, HComp2)):
            inner = f"({inner})"
        return f"{outer} * {inner}"
    if isinstance(c, _LEAF_TYPES):
        args = [expr_text(getattr(c, k)) if k != "far" else getattr(c, k) for k in c._keys]
        return f"{_SURFACE_OF[type(c)]}({', '.join(args)})"
    raise TypeError(f"not a 2-cell expression: {c!r}")
