"""Program trees.  Positions are carried but ignored by equality."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..cells import TwoCellExpr
from ..core import OneCellExpr


@dataclass(frozen=True)
class Pos:
    line: int
    column: int


def _pos():
    return field(default=None, compare=False, repr=False)


Value = Union[int, str, tuple]


# -- declarations ---------------------------------------------------------------

@dataclass(frozen=True)
class ZeroCells:
    names: tuple[str, ...]
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class OneCellDecl:
    name: str
    src: str
    tgt: str
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class TwoCellDecl:
    name: str
    src: OneCellExpr
    tgt: OneCellExpr
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class SetDecl:
    name: str
    elements: tuple[Value, ...]
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class SpanDecl:
    name: str
    src: str
    tgt: str
    entries: tuple[tuple[Value, Value, Value], ...]   # (apex element, left foot, right foot)
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class SpanMapDecl:
    name: str
    source: str
    target: str
    pairs: tuple[tuple[Value, Value], ...]
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class SemiringLit:
    """``N{f=2, g=3}``: natural numbers."""
    assignment: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class SpanLit:
    """``span {a: X, f: s, alpha: m}``: declared sets, spans and span maps."""
    bindings: tuple[tuple[str, str], ...]


InstanceRef = Union[str, SemiringLit]


@dataclass(frozen=True)
class InstanceDecl:
    name: str
    spec: Union[SemiringLit, SpanLit]
    pos: Pos | None = _pos()


# -- commands -----------------------------------------------------------------

@dataclass(frozen=True)
class Normalize:
    expr: OneCellExpr
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Check:
    path1: tuple[TwoCellExpr, ...]
    path2: tuple[TwoCellExpr, ...]
    instance: InstanceRef | None = None
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Same:
    lhs: OneCellExpr
    rhs: OneCellExpr
    instance: InstanceRef | None = None
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Roundtrip:
    expr: OneCellExpr
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Iso:
    expr: OneCellExpr
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Oracle:
    expr: OneCellExpr
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class LeftDist:
    x: OneCellExpr
    y: OneCellExpr
    z: OneCellExpr
    corrected: bool = False
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Suite:
    kind: str                                 # pc, strict or instance
    target: str | None = None                 # instance name, for ``suite instance``
    options: tuple[tuple[str, int | bool], ...] = ()
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class Eval:
    expr: OneCellExpr
    instance: InstanceRef
    pos: Pos | None = _pos()


@dataclass(frozen=True)
class StrictifyReport:
    options: tuple[tuple[str, int | bool], ...] = ()
    pos: Pos | None = _pos()


DECLARATIONS = (ZeroCells, OneCellDecl, TwoCellDecl, SetDecl, SpanDecl, SpanMapDecl, InstanceDecl)


@dataclass(frozen=True)
class Program:
    statements: tuple

    @property
    def commands(self) -> tuple:
        return tuple(s for s in self.statements if not isinstance(s, DECLARATIONS))
