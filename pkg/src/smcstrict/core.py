"""Signatures and the free 1-cell expression language.

A :class:`Signature` is a finite presentation: 0-cells, generating 1-cells
with declared endpoints, and generating 2-cells between 1-cell expressions.
Expressions are immutable trees built from five constructors::

    Gen(name)            a generating 1-cell
    IdUnit(a)            the horizontal unit on a
    ZeroUnit(a, b)       the additive unit of the hom-category (a, b)
    HComp(outer, inner)  outer o inner  (inner is applied first)
    Sum(left, right)     left (+) right

Trees hash in O(1) (the hash is computed once, bottom-up), which keeps the
memoised normaliser and enumerators cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce, singledispatch
from typing import Iterable, Union

from ._node import Node, hashed
from .errors import IllTyped, ResolveError, SignatureError

__all__ = [
    "Gen1Cell", "Gen2Cell", "Signature", "OneCellExpr",
    "Gen", "IdUnit", "ZeroUnit", "HComp", "Sum",
    "endpoints", "well_formed", "opposite", "expr_equal", "expr_text",
    "depth", "compose_all", "sum_all", "make_signature",
    "standard_signature", "default_signature",
]


# -- expressions ------------------------------------------------------------

class OneCellExpr(Node):
    __slots__ = ()

    def __str__(self) -> str:
        return expr_text(self)


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class Gen(OneCellExpr):
    name: str
    _h: int = field(init=False, repr=False, compare=False)


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class IdUnit(OneCellExpr):
    obj: str
    _h: int = field(init=False, repr=False, compare=False)


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class ZeroUnit(OneCellExpr):
    src: str
    tgt: str
    _h: int = field(init=False, repr=False, compare=False)


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class HComp(OneCellExpr):
    outer: OneCellExpr
    inner: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


@hashed
@dataclass(frozen=True, eq=True, slots=True)
class Sum(OneCellExpr):
    left: OneCellExpr
    right: OneCellExpr
    _h: int = field(init=False, repr=False, compare=False)


Leaf = Union[Gen, IdUnit, ZeroUnit]


def compose_all(*parts: OneCellExpr) -> OneCellExpr:
    """Right-nested composite ``p0 o (p1 o (... o pn))``."""
    if not parts:
        raise ValueError("compose_all needs at least one factor")
    return reduce(lambda acc, p: HComp(p, acc), reversed(parts[:-1]), parts[-1])


def sum_all(*parts: OneCellExpr) -> OneCellExpr:
    """Right-nested sum ``p0 + (p1 + (... + pn))``."""
    if not parts:
        raise ValueError("sum_all needs at least one summand")
    return reduce(lambda acc, p: Sum(p, acc), reversed(parts[:-1]), parts[-1])


def depth(e: OneCellExpr) -> int:
    if isinstance(e, HComp):
        return 1 + max(depth(e.outer), depth(e.inner))
    if isinstance(e, Sum):
        return 1 + max(depth(e.left), depth(e.right))
    return 0


def expr_equal(e1: OneCellExpr, e2: OneCellExpr) -> bool:
    """Syntactic equality of expression trees (no coherence quotient)."""
    return e1 == e2


def expr_text(e: OneCellExpr) -> str:
    """Render in the surface syntax: ``*`` binds tighter than ``+``, both left-associative."""
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, IdUnit):
        return f"1@{e.obj}"
    if isinstance(e, ZeroUnit):
        return f"0@{e.src}->{e.tgt}"
    if isinstance(e, Sum):
        right = expr_text(e.right)
        if isinstance(e.right, Sum):
            right = f"({right})"
        return f"{expr_text(e.left)} + {right}"
    if isinstance(e, HComp):
        outer = expr_text(e.outer)
        if isinstance(e.outer, Sum):
            outer = f"({outer})"
        inner = expr_text(e.inner)
        if isinstance(e.inner, (Sum, HComp)):
            inner = f"({inner})"
        return f"{outer} * {inner}"
    raise TypeError(f"not a 1-cell expression: {e!r}")


# -- signatures -------------------------------------------------------------

@dataclass(frozen=True)
class Gen1Cell:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Gen2Cell:
    name: str
    src: OneCellExpr
    tgt: OneCellExpr


@dataclass(frozen=True)
class Signature:
    zero_cells: tuple[str, ...]
    gen1: tuple[Gen1Cell, ...] = ()
    gen2: tuple[Gen2Cell, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "zero_cells", tuple(self.zero_cells))
        object.__setattr__(self, "gen1", tuple(self.gen1))
        object.__setattr__(self, "gen2", tuple(self.gen2))
        for kind, names in (("0-cell", self.zero_cells),
                            ("1-cell", [g.name for g in self.gen1]),
                            ("2-cell", [g.name for g in self.gen2])):
            seen = set()
            for n in names:
                if n in seen:
                    raise SignatureError(f"duplicate {kind} name {n!r}")
                seen.add(n)
        objs = set(self.zero_cells)
        for g in self.gen1:
            for end in (g.src, g.tgt):
                if end not in objs:
                    raise ResolveError(f"1-cell {g.name!r} refers to undeclared 0-cell {end!r}")
        object.__setattr__(self, "_gen1", {g.name: g for g in self.gen1})
        object.__setattr__(self, "_gen2", {g.name: g for g in self.gen2})
        object.__setattr__(self, "_h", hash((self.zero_cells, self.gen1, self.gen2)))
        for c in self.gen2:
            s, t = endpoints(c.src, self), endpoints(c.tgt, self)
            if s != t:
                raise IllTyped(f"2-cell {c.name!r} joins 1-cells of types {s} and {t}")

    def __hash__(self):
        return self._h

    def gen(self, name: str) -> Gen1Cell:
        try:
            return self._gen1[name]
        except KeyError:
            raise ResolveError(f"unknown 1-cell {name!r}") from None

    def cell(self, name: str) -> Gen2Cell:
        try:
            return self._gen2[name]
        except KeyError:
            raise ResolveError(f"unknown 2-cell {name!r}") from None

    def has_gen(self, name: str) -> bool:
        return name in self._gen1

    def homs(self) -> list[tuple[str, str]]:
        return [(a, b) for a in self.zero_cells for b in self.zero_cells]


def make_signature(zero_cells: Iterable[str] | str,
                   gen1: dict[str, tuple[str, str]] | None = None,
                   gen2: dict[str, tuple[OneCellExpr, OneCellExpr]] | None = None) -> Signature:
    """Shorthand: ``make_signature("a b", {"f": ("a", "b")})``."""
    if isinstance(zero_cells, str):
        zero_cells = zero_cells.split()
    return Signature(
        tuple(zero_cells),
        tuple(Gen1Cell(n, s, t) for n, (s, t) in (gen1 or {}).items()),
        tuple(Gen2Cell(n, s, t) for n, (s, t) in (gen2 or {}).items()),
    )


def standard_signature() -> Signature:
    """Five generators over three 0-cells: f, f': a->b; g, g': b->c; h: a->c."""
    return make_signature("a b c", {
        "f": ("a", "b"), "f'": ("a", "b"),
        "g": ("b", "c"), "g'": ("b", "c"),
        "h": ("a", "c"),
    })


def default_signature() -> Signature:
    """One 0-cell and one endomorphism ``f: a->a``.

    Small enough for exhaustive suites, yet strings of different lengths
    share a hom, so order-sensitive behaviour is visible.
    """
    return make_signature("a", {"f": ("a", "a")})


# -- typing -----------------------------------------------------------------

@lru_cache(maxsize=1 << 18)
def _endpoints(e: OneCellExpr, sig: Signature) -> tuple[str, str]:
    # IllTyped paths raised here are relative to ``e``; callers prefix them.
    if isinstance(e, Gen):
        if not sig.has_gen(e.name):
            raise IllTyped(f"unknown generator {e.name!r}")
        g = sig.gen(e.name)
        return g.src, g.tgt
    if isinstance(e, IdUnit):
        if e.obj not in sig.zero_cells:
            raise IllTyped(f"unknown 0-cell {e.obj!r}")
        return e.obj, e.obj
    if isinstance(e, ZeroUnit):
        for end in (e.src, e.tgt):
            if end not in sig.zero_cells:
                raise IllTyped(f"unknown 0-cell {end!r}")
        return e.src, e.tgt
    if isinstance(e, HComp):
        o = _sub(e.outer, sig, "outer")
        i = _sub(e.inner, sig, "inner")
        if i[1] != o[0]:
            raise IllTyped(f"cannot compose {o[0]}->{o[1]} after {i[0]}->{i[1]}")
        return i[0], o[1]
    if isinstance(e, Sum):
        l = _sub(e.left, sig, "left")
        r = _sub(e.right, sig, "right")
        if l != r:
            raise IllTyped(f"summands are not parallel: {l[0]}->{l[1]} vs {r[0]}->{r[1]}")
        return l
    raise IllTyped(f"not a 1-cell expression: {e!r}")


def _sub(e: OneCellExpr, sig: Signature, label: str) -> tuple[str, str]:
    try:
        return _endpoints(e, sig)
    except IllTyped as exc:
        raise IllTyped(exc.reason, (label, *exc.path)) from None


def endpoints(e: OneCellExpr, sig: Signature) -> tuple[str, str]:
    """Return ``(src, tgt)`` of a well-formed expression or raise :class:`IllTyped`."""
    return _endpoints(e, sig)


def well_formed(e: OneCellExpr, sig: Signature) -> bool:
    try:
        _endpoints(e, sig)
    except IllTyped:
        return False
    return True


# -- opposite ---------------------------------------------------------------

@singledispatch
def opposite(x):
    """The opposite construction: reverse 1-cell composition, keep 2-cell direction.

    Generators keep their names; the opposite signature declares them with
    swapped endpoints, so ``B^op(a, b) = B(b, a)``.
    """
    raise TypeError(f"no opposite for {type(x).__name__}")


@opposite.register
def _(sig: Signature) -> Signature:
    return Signature(
        sig.zero_cells,
        tuple(Gen1Cell(g.name, g.tgt, g.src) for g in sig.gen1),
        tuple(Gen2Cell(c.name, opposite(c.src), opposite(c.tgt)) for c in sig.gen2),
    )


@opposite.register
def _(e: OneCellExpr) -> OneCellExpr:
    if isinstance(e, (Gen, IdUnit)):
        return e
    if isinstance(e, ZeroUnit):
        return ZeroUnit(e.tgt, e.src)
    if isinstance(e, HComp):
        return HComp(opposite(e.inner), opposite(e.outer))
    if isinstance(e, Sum):
        return Sum(opposite(e.left), opposite(e.right))
    raise TypeError(f"not a 1-cell expression: {e!r}")
