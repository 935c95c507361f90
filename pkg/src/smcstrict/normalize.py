"""Strictification of free 1-cells into ordered sums of generator strings.

A :class:`NormalForm` is a 1-cell of the strict 2-category: an ordered
sequence of :class:`Monomial` strings.  Composition concatenates strings
with the outer factor's index major, so right distributivity and both
nullities hold on the nose while left distributivity needs a shuffle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from ._node import Node, hashed
from .cells import (AddAssoc, AddUnitL, AddUnitR, AssocH, DistL, DistR, Id2,
                    Inv, LUnit, NullL, NullR, RUnit, TwoCellExpr, hcomp2,
                    sumcells, vcomp)
from .core import (Gen, HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit,
                   endpoints)
from .errors import EndpointMismatch

__all__ = [
    "Monomial", "NormalForm", "normalize", "strict_compose", "strict_sum",
    "embed", "canonical_iso", "unit_nf", "zero_nf", "nf_text", "check_monomial",
]


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class Monomial(Node):
    """A composable string ``gens[0] . gens[1] . ... `` (last letter applied first)."""

    src: str
    tgt: str
    gens: tuple[str, ...]
    _h: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.gens and self.src != self.tgt:
            raise EndpointMismatch(f"empty string must be a unit, got {self.src}->{self.tgt}")
        Node.__post_init__(self)

    def __str__(self) -> str:
        return ".".join(self.gens) if self.gens else f"1@{self.src}"


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class NormalForm(Node):
    src: str
    tgt: str
    monomials: tuple[Monomial, ...]
    _h: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for m in self.monomials:
            if (m.src, m.tgt) != (self.src, self.tgt):
                raise EndpointMismatch(
                    f"monomial {m} has type {m.src}->{m.tgt}, expected {self.src}->{self.tgt}")
        Node.__post_init__(self)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    def __str__(self) -> str:
        return nf_text(self)


def _raw_nf(src: str, tgt: str, monomials: tuple[Monomial, ...]) -> NormalForm:
    """Build a normal form whose monomials are already known to fit, skipping checks."""
    return NormalForm._unchecked(src, tgt, monomials)


def _raw_monomial(src: str, tgt: str, gens: tuple[str, ...]) -> Monomial:
    return Monomial._unchecked(src, tgt, gens)


def nf_text(nf: NormalForm) -> str:
    """Canonical text: ``0@a->b`` for the empty sum, else ``g.f + 1@a + ...``."""
    if not nf.monomials:
        return f"0@{nf.src}->{nf.tgt}"
    return " + ".join(str(m) for m in nf.monomials)


def check_monomial(m: Monomial, sig: Signature) -> None:
    """Raise :class:`EndpointMismatch` unless the string composes right to left."""
    here = m.src
    for name in reversed(m.gens):
        g = sig.gen(name)
        if g.src != here:
            raise EndpointMismatch(f"{name} starts at {g.src}, expected {here} in {m}")
        here = g.tgt
    if here != m.tgt:
        raise EndpointMismatch(f"{m} ends at {here}, expected {m.tgt}")


def unit_nf(a: str) -> NormalForm:
    return NormalForm(a, a, (Monomial(a, a, ()),))


def zero_nf(a: str, b: str) -> NormalForm:
    return NormalForm(a, b, ())


@lru_cache(maxsize=1 << 18)
def strict_compose(x: NormalForm, y: NormalForm) -> NormalForm:
    """``x o y``: every x-string followed by every y-string, x's index major."""
    if x.src != y.tgt:
        raise EndpointMismatch(f"cannot compose {x.src}->{x.tgt} after {y.src}->{y.tgt}")
    a, c = y.src, x.tgt
    ys = y.monomials
    if not x.monomials or not ys:
        return _raw_nf(a, c, ())
    if len(ys) == 1 and not ys[0].gens:
        return x
    if len(x.monomials) == 1 and not x.monomials[0].gens:
        return y
    return _raw_nf(a, c, tuple(_raw_monomial(a, c, xm.gens + ym.gens)
                               for xm in x.monomials for ym in ys))


@lru_cache(maxsize=1 << 18)
def strict_sum(x: NormalForm, y: NormalForm) -> NormalForm:
    if (x.src, x.tgt) != (y.src, y.tgt):
        raise EndpointMismatch(f"cannot add {x.src}->{x.tgt} and {y.src}->{y.tgt}")
    if not y.monomials:
        return x
    if not x.monomials:
        return y
    return _raw_nf(x.src, x.tgt, x.monomials + y.monomials)


_CACHE_LIMIT = 1 << 22


@lru_cache(maxsize=32)
def _normalizer(sig: Signature):
    """A memoised normaliser for one signature (plain dict: this is the hot loop)."""
    cache: dict[OneCellExpr, NormalForm] = {}
    objs = frozenset(sig.zero_cells)

    def go(e: OneCellExpr) -> NormalForm:
        nf = cache.get(e)
        if nf is not None:
            return nf
        t = type(e)
        if t is HComp:
            nf = strict_compose(go(e.outer), go(e.inner))
        elif t is Sum:
            nf = strict_sum(go(e.left), go(e.right))
        elif t is Gen:
            g = sig.gen(e.name)
            nf = NormalForm(g.src, g.tgt, (Monomial(g.src, g.tgt, (e.name,)),))
        else:
            if not objs.issuperset((e.obj,) if t is IdUnit else (e.src, e.tgt)):
                endpoints(e, sig)
            nf = unit_nf(e.obj) if t is IdUnit else zero_nf(e.src, e.tgt)
        if len(cache) >= _CACHE_LIMIT:
            cache.clear()
        cache[e] = nf
        return nf

    def root(e: OneCellExpr) -> NormalForm:
        # subterms are memoised, the root is not: enumerations visit millions
        # of roots once each, and a root recomputes from cached children in O(1)
        nf = cache.get(e)
        if nf is not None:
            return nf
        t = type(e)
        if t is HComp:
            return strict_compose(go(e.outer), go(e.inner))
        if t is Sum:
            return strict_sum(go(e.left), go(e.right))
        return go(e)

    return root


# the most recently used (signature, normaliser); an identity check is much
# cheaper than the lru lookup, and suites call normalize millions of times
_last: list = [None, None]


def _normalize(e: OneCellExpr, sig: Signature) -> NormalForm:
    return _normalizer(sig)(e)


def normalize(e: OneCellExpr, sig: Signature) -> NormalForm:
    """The strict normal form of ``e``; raises :class:`IllTyped` if ``e`` does not typecheck."""
    if _last[0] is sig:
        go = _last[1]
    else:
        go = _normalizer(sig)
        _last[0], _last[1] = sig, go
    try:
        return go(e)
    except EndpointMismatch:
        endpoints(e, sig)
        raise


def _embed_monomial(m: Monomial) -> OneCellExpr:
    if not m.gens:
        return IdUnit(m.src)
    out: OneCellExpr = Gen(m.gens[-1])
    for name in reversed(m.gens[:-1]):
        out = HComp(Gen(name), out)
    return out


@lru_cache(maxsize=1 << 16)
def embed(nf: NormalForm) -> OneCellExpr:
    """Right-nested sum of right-nested composites; the empty sum is ``ZeroUnit``."""
    if not nf.monomials:
        return ZeroUnit(nf.src, nf.tgt)
    parts = [_embed_monomial(m) for m in nf.monomials]
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Sum(p, out)
    return out


# -- canonical isomorphisms -------------------------------------------------
#
# Every helper below takes expressions already in embedded normal form and
# returns a cell into the embedded normal form of their sum / composite.
# DistL is only ever applied with a single-string outer factor, where its
# shuffle is trivial, so every witness has the identity position map.

def _is_sum(e: OneCellExpr) -> bool:
    return isinstance(e, Sum)


@lru_cache(maxsize=1 << 16)
def _merge_sum(x: OneCellExpr, y: OneCellExpr, sig: Signature) -> TwoCellExpr:
    if isinstance(x, ZeroUnit):
        return AddUnitL(y)
    if isinstance(y, ZeroUnit):
        return AddUnitR(x)
    if not _is_sum(x):
        return Id2(Sum(x, y))
    head, tail = x.left, x.right
    rest = _merge_sum(tail, y, sig)
    return vcomp(sumcells(Id2(head), rest), Inv(AddAssoc(head, tail, y)))


@lru_cache(maxsize=1 << 16)
def _merge_strings(x: OneCellExpr, y: OneCellExpr, sig: Signature) -> TwoCellExpr:
    if isinstance(x, IdUnit):
        return LUnit(y)
    if isinstance(y, IdUnit):
        return RUnit(x)
    if isinstance(x, Gen):
        return Id2(HComp(x, y))
    head, tail = x.outer, x.inner
    return vcomp(hcomp2(Id2(head), _merge_strings(tail, y, sig)), Inv(AssocH(head, tail, y)))


def _nf_of_comp(x: OneCellExpr, y: OneCellExpr, sig: Signature) -> OneCellExpr:
    return embed(strict_compose(_normalize(x, sig), _normalize(y, sig)))


@lru_cache(maxsize=1 << 16)
def _merge_comp(x: OneCellExpr, y: OneCellExpr, sig: Signature) -> TwoCellExpr:
    if isinstance(x, ZeroUnit):
        return NullL(y, x.tgt)
    if isinstance(y, ZeroUnit):
        return NullR(x, y.src)
    if _is_sum(x):
        first = DistR(x.left, x.right, y)
        left = _merge_comp(x.left, y, sig)
        right = _merge_comp(x.right, y, sig)
        merge = _merge_sum(_nf_of_comp(x.left, y, sig), _nf_of_comp(x.right, y, sig), sig)
        return vcomp(merge, vcomp(sumcells(left, right), first))
    if _is_sum(y):
        first = DistL(x, y.left, y.right)
        left = _merge_comp(x, y.left, sig)
        right = _merge_comp(x, y.right, sig)
        merge = _merge_sum(_nf_of_comp(x, y.left, sig), _nf_of_comp(x, y.right, sig), sig)
        return vcomp(merge, vcomp(sumcells(left, right), first))
    return _merge_strings(x, y, sig)


@lru_cache(maxsize=1 << 18)
def _canonical(e: OneCellExpr, sig: Signature) -> TwoCellExpr:
    if isinstance(e, (Gen, IdUnit, ZeroUnit)):
        return Id2(e)
    if isinstance(e, Sum):
        a, b = e.left, e.right
        first = sumcells(_canonical(a, sig), _canonical(b, sig))
        return vcomp(_merge_sum(embed(_normalize(a, sig)), embed(_normalize(b, sig)), sig), first)
    first = hcomp2(_canonical(e.outer, sig), _canonical(e.inner, sig))
    return vcomp(_merge_comp(embed(_normalize(e.outer, sig)), embed(_normalize(e.inner, sig)), sig),
                 first)


def canonical_iso(e: OneCellExpr, sig: Signature) -> TwoCellExpr:
    """A structural cell ``e => embed(normalize(e))`` with identity position map."""
    endpoints(e, sig)
    return _canonical(e, sig)
