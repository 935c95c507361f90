"""Position semantics for structural 2-cells and the diagram checker.

A structural cell ``c: s => t`` is interpreted as a bijection between the
monomial positions of ``normalize(s)`` and ``normalize(t)`` that carries
every string to an equal string.  Two parallel cells are identified when
their bijections agree; that is the equality :func:`check_diagram` decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cells import *  # noqa: F403  (the cell language is part of this module's surface)
from .cells import SURFACE_NAMES, __all__ as _cells_all
from .core import OneCellExpr, Signature, expr_text
from .errors import BoundaryMismatch, NotStructural
from .normalize import NormalForm, nf_text, normalize, strict_compose, strict_sum

__all__ = [*_cells_all, "MonomialBijection", "Semantics", "DEFAULT_SEMANTICS",
           "perm_of", "check_diagram", "CheckReport", "path_boundary"]


@dataclass(frozen=True)
class MonomialBijection:
    """``mapping[i]`` is the target position of source position ``i``."""

    source_nf: NormalForm
    target_nf: NormalForm
    mapping: tuple[int, ...]

    def __post_init__(self):
        n = len(self.source_nf.monomials)
        if len(self.target_nf.monomials) != n or len(self.mapping) != n:
            raise BoundaryMismatch(
                f"no bijection between {nf_text(self.source_nf)} and {nf_text(self.target_nf)}")
        if sorted(self.mapping) != list(range(n)):
            raise ValueError(f"{self.mapping} is not a permutation")
        src, tgt = self.source_nf.monomials, self.target_nf.monomials
        for i, j in enumerate(self.mapping):
            if src[i] != tgt[j]:
                raise BoundaryMismatch(
                    f"position {i} ({src[i]}) sent to position {j} ({tgt[j]})")

    @classmethod
    def _trusted(cls, source_nf: NormalForm, target_nf: NormalForm,
                 mapping: tuple[int, ...]) -> "MonomialBijection":
        """Skip validation; for results built from already validated bijections."""
        out = object.__new__(cls)
        object.__setattr__(out, "source_nf", source_nf)
        object.__setattr__(out, "target_nf", target_nf)
        object.__setattr__(out, "mapping", mapping)
        return out

    @classmethod
    def identity(cls, nf: NormalForm) -> "MonomialBijection":
        return cls._trusted(nf, nf, tuple(range(len(nf.monomials))))

    @property
    def is_identity(self) -> bool:
        return self.source_nf == self.target_nf and all(i == j for i, j in enumerate(self.mapping))

    def then(self, later: "MonomialBijection") -> "MonomialBijection":
        if self.target_nf != later.source_nf:
            raise BoundaryMismatch("bijections do not compose")
        m = later.mapping
        return MonomialBijection._trusted(self.source_nf, later.target_nf,
                                          tuple([m[j] for j in self.mapping]))

    def inverse(self) -> "MonomialBijection":
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return MonomialBijection._trusted(self.target_nf, self.source_nf, tuple(inv))


class Semantics:
    """The compositional bijection semantics.

    Each constructor has a ``_<name>`` method returning the raw position map;
    subclasses override one to build a deliberately broken model (see
    :mod:`smcstrict.verify.mutants`).  Results are memoised per instance.
    """

    cache_limit = 1 << 20

    def __init__(self):
        self._cache: dict[tuple[TwoCellExpr, Signature], MonomialBijection] = {}

    def perm(self, c: TwoCellExpr, sig: Signature) -> MonomialBijection:
        key = (c, sig)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._compute(c, sig)
            if len(self._cache) >= self.cache_limit:
                self._cache.clear()
            self._cache[key] = hit
        return hit

    def _nf(self, e: OneCellExpr, sig: Signature) -> NormalForm:
        return normalize(e, sig)

    def _compute(self, c: TwoCellExpr, sig: Signature) -> MonomialBijection:
        kind = type(c)
        if kind is VComp:
            boundary(c, sig)
            return self.perm(c.earlier, sig).then(self.perm(c.later, sig))
        if kind is Inv:
            return self.perm(c.cell, sig).inverse()
        if kind is HComp2:
            boundary(c, sig)
            return self._hcomp2(self.perm(c.outer, sig), self.perm(c.inner, sig))
        if kind is SumCells:
            boundary(c, sig)
            return self._sumcells(self.perm(c.left, sig), self.perm(c.right, sig))
        if kind is Gen2:
            raise NotStructural(f"generating 2-cell {c.name!r} has no free semantics")
        src, tgt = boundary(c, sig)
        s_nf, t_nf = self._nf(src, sig), self._nf(tgt, sig)
        handler = getattr(self, _HANDLERS[kind])
        return MonomialBijection(s_nf, t_nf, tuple(handler(c, sig)))

    def _identity(self, c, sig):
        return range(len(self._nf(boundary(c, sig)[0], sig).monomials))

    _id2 = _assoch = _lunit = _runit = _addassoc = _addunitl = _addunitr = _identity
    _distr = _nulll = _nullr = _identity

    def _sym(self, c: Sym, sig):
        n = len(self._nf(c.f, sig).monomials)
        m = len(self._nf(c.g, sig).monomials)
        return [m + i for i in range(n)] + list(range(m))

    def _distl(self, c: DistL, sig):
        k = len(self._nf(c.f, sig).monomials)
        l = len(self._nf(c.g, sig).monomials)
        r = len(self._nf(c.h, sig).monomials)
        out = []
        for i in range(k):
            out.extend(i * l + j for j in range(l))
            out.extend(k * l + i * r + j for j in range(r))
        return out

    def _hcomp2(self, outer: MonomialBijection, inner: MonomialBijection) -> MonomialBijection:
        width = len(inner.mapping)
        mapping = tuple(outer.mapping[i] * width + inner.mapping[j]
                        for i in range(len(outer.mapping)) for j in range(width))
        return MonomialBijection._trusted(strict_compose(outer.source_nf, inner.source_nf),
                                          strict_compose(outer.target_nf, inner.target_nf), mapping)

    def _sumcells(self, left: MonomialBijection, right: MonomialBijection) -> MonomialBijection:
        shift = len(left.mapping)
        mapping = left.mapping + tuple(shift + j for j in right.mapping)
        return MonomialBijection._trusted(strict_sum(left.source_nf, right.source_nf),
                                          strict_sum(left.target_nf, right.target_nf), mapping)


_HANDLERS = {cls: "_" + cls.__name__.lower() for cls in (Id2, *SURFACE_NAMES.values())}

DEFAULT_SEMANTICS = Semantics()


def perm_of(c: TwoCellExpr, sig: Signature, semantics: Semantics | None = None) -> MonomialBijection:
    if not is_structural(c):
        raise NotStructural(f"{cell_text(c)} contains a generating 2-cell")
    return (semantics or DEFAULT_SEMANTICS).perm(c, sig)


@dataclass(frozen=True)
class CheckReport:
    commutes: bool
    boundary: tuple[OneCellExpr, OneCellExpr]
    path1_perm: MonomialBijection
    path2_perm: MonomialBijection

    def to_json(self) -> dict:
        return {
            "commutes": self.commutes,
            "boundary": [expr_text(self.boundary[0]), expr_text(self.boundary[1])],
            "path1_perm": list(self.path1_perm.mapping),
            "path2_perm": list(self.path2_perm.mapping),
        }


def path_boundary(path: Sequence[TwoCellExpr], sig: Signature) -> tuple[OneCellExpr, OneCellExpr]:
    """Outer boundary of a path of cells listed in the order they are applied."""
    if not path:
        raise BoundaryMismatch("empty path")
    src, tgt = boundary(path[0], sig)
    for c in path[1:]:
        s, t = boundary(c, sig)
        if s != tgt:
            raise BoundaryMismatch(
                f"path breaks at {cell_text(c)}: {expr_text(tgt)} is not {expr_text(s)}")
        tgt = t
    return src, tgt


def _path_perm(path: Sequence[TwoCellExpr], sig: Signature, semantics: Semantics) -> MonomialBijection:
    out = perm_of(path[0], sig, semantics)
    for c in path[1:]:
        out = out.then(perm_of(c, sig, semantics))
    return out


def check_diagram(path1: Sequence[TwoCellExpr], path2: Sequence[TwoCellExpr], sig: Signature,
                  semantics: Semantics | None = None) -> CheckReport:
    """Decide whether two parallel paths of structural cells have equal semantics."""
    semantics = semantics or DEFAULT_SEMANTICS
    b1 = path_boundary(path1, sig)
    b2 = path_boundary(path2, sig)
    if b1 != b2:
        raise BoundaryMismatch(
            f"paths are not parallel: {expr_text(b1[0])} => {expr_text(b1[1])} "
            f"vs {expr_text(b2[0])} => {expr_text(b2[1])}")
    p1 = _path_perm(path1, sig, semantics)
    p2 = _path_perm(path2, sig, semantics)
    return CheckReport(p1.mapping == p2.mapping, b1, p1, p2)
