"""Spans of finite sets: composition by pullback, sum by coproduct.

Apex elements of a composite are pairs ``(x, y)`` with ``x`` from the inner
span and ``y`` from the outer one; apex elements of a sum are tagged
``(0, x)`` or ``(1, y)``.  Because pairs nest, composition is associative
only up to the bijections produced by :meth:`SpanModel.assoc`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Mapping

from ..cells import (AddAssoc, AddUnitL, AddUnitR, AssocH, DistL, DistR, Gen2,
                     HComp2, Id2, Inv, LUnit, NullL, NullR, RUnit, SumCells,
                     Sym, TwoCellExpr, VComp, boundary)
from ..core import Signature
from ..errors import EndpointMismatch, MissingAssignment
from .semiring import eval_one_cell


@dataclass(frozen=True)
class FinSetObj:
    elements: tuple[Hashable, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"duplicate elements in {self.elements!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements


@dataclass(frozen=True)
class SpanCell:
    """``src <- apex -> tgt``; legs are tuples aligned with ``apex.elements``."""

    src: FinSetObj
    tgt: FinSetObj
    apex: FinSetObj
    left_leg: tuple
    right_leg: tuple

    def __post_init__(self):
        n = len(self.apex)
        if len(self.left_leg) != n or len(self.right_leg) != n:
            raise ValueError("legs must have one entry per apex element")
        for x in self.left_leg:
            if x not in self.src:
                raise ValueError(f"left leg hits {x!r}, not in source")
        for y in self.right_leg:
            if y not in self.tgt:
                raise ValueError(f"right leg hits {y!r}, not in target")

    def legs(self) -> dict:
        return {p: (l, r) for p, l, r in zip(self.apex.elements, self.left_leg, self.right_leg)}


@dataclass(frozen=True)
class SpanMap:
    """A map of spans over fixed endpoints, as ``{source apex element: target apex element}``."""

    source: SpanCell
    target: SpanCell
    mapping: Mapping[Hashable, Hashable] = field(hash=False)

    def __post_init__(self):
        s, t = self.source, self.target
        if (s.src, s.tgt) != (t.src, t.tgt):
            raise EndpointMismatch("span map between spans with different endpoints")
        if set(self.mapping) != set(s.apex.elements):
            raise EndpointMismatch("span map is not defined on exactly the source apex")
        slegs, tlegs = s.legs(), t.legs()
        for p, q in self.mapping.items():
            if q not in tlegs:
                raise EndpointMismatch(f"{p!r} is sent to {q!r}, outside the target apex")
            if slegs[p] != tlegs[q]:
                raise EndpointMismatch(f"{p!r} -> {q!r} does not commute with the legs")

    @property
    def is_bijection(self) -> bool:
        return (len(self.source.apex) == len(self.target.apex)
                and len(set(self.mapping.values())) == len(self.mapping))

    def then(self, later: "SpanMap") -> "SpanMap":
        if later.source != self.target:
            raise EndpointMismatch("span maps do not compose")
        return SpanMap(self.source, later.target, {p: later.mapping[q] for p, q in self.mapping.items()})

    def inverse(self) -> "SpanMap":
        if not self.is_bijection:
            raise EndpointMismatch("only bijections can be inverted")
        return SpanMap(self.target, self.source, {q: p for p, q in self.mapping.items()})

    def table(self) -> tuple:
        """Mapping as a tuple indexed by source apex position."""
        return tuple(self.mapping[p] for p in self.source.apex.elements)


def identity_span(x: FinSetObj) -> SpanCell:
    return SpanCell(x, x, x, x.elements, x.elements)


def empty_span(x: FinSetObj, y: FinSetObj) -> SpanCell:
    return SpanCell(x, y, FinSetObj(()), (), ())


class SpanModel:
    """Span(FinSet) operations and canonical bijections.

    The canonical bijections read composite apex elements as ``(inner, outer)``
    pairs; :meth:`pair` is the single point where such pairs are built.
    """

    def pair(self, x, y):
        return (x, y)

    def compose(self, t: SpanCell, s: SpanCell) -> SpanCell:
        """``t o s``: matching pairs, ordered by the position of x then of y."""
        if t.src != s.tgt:
            raise EndpointMismatch("span target does not match the next span's source")
        apex, left, right = [], [], []
        for x, sl, sr in zip(s.apex.elements, s.left_leg, s.right_leg):
            for y, tl, tr in zip(t.apex.elements, t.left_leg, t.right_leg):
                if sr == tl:
                    apex.append(self.pair(x, y))
                    left.append(sl)
                    right.append(tr)
        return SpanCell(s.src, t.tgt, FinSetObj(tuple(apex)), tuple(left), tuple(right))

    def sum(self, s1: SpanCell, s2: SpanCell) -> SpanCell:
        if (s1.src, s1.tgt) != (s2.src, s2.tgt):
            raise EndpointMismatch("cannot add spans with different endpoints")
        apex = tuple((0, x) for x in s1.apex.elements) + tuple((1, y) for y in s2.apex.elements)
        return SpanCell(s1.src, s1.tgt, FinSetObj(apex), s1.left_leg + s2.left_leg,
                        s1.right_leg + s2.right_leg)

    # canonical bijections; every one is built elementwise and validated by SpanMap
    def _map(self, source: SpanCell, target: SpanCell, fn: Callable[[Any], Any]) -> SpanMap:
        try:
            mapping = {p: fn(p) for p in source.apex.elements}
        except (KeyError, IndexError, TypeError) as exc:
            raise EndpointMismatch(f"apex element has an unexpected shape: {exc!r}") from None
        return SpanMap(source, target, mapping)

    def assoc(self, f: SpanCell, g: SpanCell, h: SpanCell) -> SpanMap:
        """``f o (g o h) => (f o g) o h``."""
        src = self.compose(f, self.compose(g, h))
        tgt = self.compose(self.compose(f, g), h)
        return self._map(src, tgt, lambda p: (p[0][0], (p[0][1], p[1])))

    def lunit(self, f: SpanCell) -> SpanMap:
        return self._map(self.compose(identity_span(f.tgt), f), f, lambda p: p[0])

    def runit(self, f: SpanCell) -> SpanMap:
        return self._map(self.compose(f, identity_span(f.src)), f, lambda p: p[1])

    def addassoc(self, f: SpanCell, g: SpanCell, h: SpanCell) -> SpanMap:
        def fn(p):
            if p[0] == 0:
                return (0, (0, p[1]))
            i, z = p[1]
            return (0, (1, z)) if i == 0 else (1, z)
        return self._map(self.sum(f, self.sum(g, h)), self.sum(self.sum(f, g), h), fn)

    def addunitl(self, f: SpanCell) -> SpanMap:
        return self._map(self.sum(empty_span(f.src, f.tgt), f), f, lambda p: p[1])

    def addunitr(self, f: SpanCell) -> SpanMap:
        return self._map(self.sum(f, empty_span(f.src, f.tgt)), f, lambda p: p[1])

    def sym(self, f: SpanCell, g: SpanCell) -> SpanMap:
        return self._map(self.sum(f, g), self.sum(g, f), lambda p: (1 - p[0], p[1]))

    def distl(self, f: SpanCell, g: SpanCell, h: SpanCell) -> SpanMap:
        """``f o (g + h) => f o g + f o h``: ((i, x), y) -> (i, (x, y))."""
        src = self.compose(f, self.sum(g, h))
        tgt = self.sum(self.compose(f, g), self.compose(f, h))
        return self._map(src, tgt, lambda p: (p[0][0], (p[0][1], p[1])))

    def distr(self, f: SpanCell, g: SpanCell, h: SpanCell) -> SpanMap:
        """``(f + g) o h => f o h + g o h``: (x, (i, y)) -> (i, (x, y))."""
        src = self.compose(self.sum(f, g), h)
        tgt = self.sum(self.compose(f, h), self.compose(g, h))
        return self._map(src, tgt, lambda p: (p[1][0], (p[0], p[1][1])))

    def nulll(self, f: SpanCell, far: FinSetObj) -> SpanMap:
        return self._map(self.compose(empty_span(f.tgt, far), f), empty_span(f.src, far), _absurd)

    def nullr(self, f: SpanCell, far: FinSetObj) -> SpanMap:
        return self._map(self.compose(f, empty_span(far, f.src)), empty_span(far, f.tgt), _absurd)

    def whisker(self, outer: SpanMap, inner: SpanMap) -> SpanMap:
        """Horizontal composite: (x, y) -> (inner(x), outer(y))."""
        src = self.compose(outer.source, inner.source)
        tgt = self.compose(outer.target, inner.target)
        return self._map(src, tgt, lambda p: (inner.mapping[p[0]], outer.mapping[p[1]]))

    def sum_maps(self, left: SpanMap, right: SpanMap) -> SpanMap:
        src = self.sum(left.source, right.source)
        tgt = self.sum(left.target, right.target)
        return self._map(src, tgt, lambda p: (p[0], (left if p[0] == 0 else right).mapping[p[1]]))

    def identity_map(self, s: SpanCell) -> SpanMap:
        return SpanMap(s, s, {p: p for p in s.apex.elements})


def _absurd(p):  # pragma: no cover - the source apex is empty
    raise AssertionError("nullity source has no elements")


DEFAULT_MODEL = SpanModel()


def span_compose(t: SpanCell, s: SpanCell) -> SpanCell:
    return DEFAULT_MODEL.compose(t, s)


def span_sum(s1: SpanCell, s2: SpanCell) -> SpanCell:
    return DEFAULT_MODEL.sum(s1, s2)


@dataclass(frozen=True)
class SpanInstance:
    """An assignment of finite sets to 0-cells, spans to 1-cells and span maps to 2-cells."""

    objects: Mapping[str, FinSetObj]
    gens: Mapping[str, SpanCell]
    cells: Mapping[str, SpanMap] = field(default_factory=dict)
    sig: Signature | None = field(default=None, compare=False)
    model: SpanModel = field(default=DEFAULT_MODEL, compare=False)

    def obj(self, name: str) -> FinSetObj:
        try:
            return self.objects[name]
        except KeyError:
            raise MissingAssignment(f"no finite set for 0-cell {name!r}") from None

    def gen(self, name: str) -> SpanCell:
        try:
            span = self.gens[name]
        except KeyError:
            raise MissingAssignment(f"no span for generator {name!r}") from None
        if self.sig is not None:
            g = self.sig.gen(name)
            if (span.src, span.tgt) != (self.obj(g.src), self.obj(g.tgt)):
                raise EndpointMismatch(f"span for {name!r} has the wrong endpoints")
        return span

    def unit(self, obj: str) -> SpanCell:
        return identity_span(self.obj(obj))

    def null(self, src: str, tgt: str) -> SpanCell:
        return empty_span(self.obj(src), self.obj(tgt))

    def compose(self, outer: SpanCell, inner: SpanCell) -> SpanCell:
        return self.model.compose(outer, inner)

    def plus(self, left: SpanCell, right: SpanCell) -> SpanCell:
        return self.model.sum(left, right)

    def one_cell(self, e) -> SpanCell:
        return eval_one_cell(e, self)

    def two_cell(self, c: TwoCellExpr, sig: Signature) -> SpanMap:
        """The span map denoted by ``c``; its endpoints are the evaluated boundary."""
        m, ev = self.model, self.one_cell
        if isinstance(c, Id2):
            return m.identity_map(ev(c.e))
        if isinstance(c, Gen2):
            try:
                out = self.cells[c.name]
            except KeyError:
                raise MissingAssignment(f"no span map for 2-cell {c.name!r}") from None
            src, tgt = boundary(c, sig)
            if (out.source, out.target) != (ev(src), ev(tgt)):
                raise EndpointMismatch(f"span map for {c.name!r} has the wrong boundary")
            return out
        if isinstance(c, VComp):
            return self.two_cell(c.earlier, sig).then(self.two_cell(c.later, sig))
        if isinstance(c, Inv):
            return self.two_cell(c.cell, sig).inverse()
        if isinstance(c, HComp2):
            return m.whisker(self.two_cell(c.outer, sig), self.two_cell(c.inner, sig))
        if isinstance(c, SumCells):
            return m.sum_maps(self.two_cell(c.left, sig), self.two_cell(c.right, sig))
        if isinstance(c, AssocH):
            return m.assoc(ev(c.f), ev(c.g), ev(c.h))
        if isinstance(c, LUnit):
            return m.lunit(ev(c.f))
        if isinstance(c, RUnit):
            return m.runit(ev(c.f))
        if isinstance(c, AddAssoc):
            return m.addassoc(ev(c.f), ev(c.g), ev(c.h))
        if isinstance(c, AddUnitL):
            return m.addunitl(ev(c.f))
        if isinstance(c, AddUnitR):
            return m.addunitr(ev(c.f))
        if isinstance(c, Sym):
            return m.sym(ev(c.f), ev(c.g))
        if isinstance(c, DistL):
            return m.distl(ev(c.f), ev(c.g), ev(c.h))
        if isinstance(c, DistR):
            return m.distr(ev(c.f), ev(c.g), ev(c.h))
        if isinstance(c, NullL):
            return m.nulll(ev(c.f), self.obj(c.far))
        if isinstance(c, NullR):
            return m.nullr(ev(c.f), self.obj(c.far))
        raise TypeError(f"not a 2-cell expression: {c!r}")
