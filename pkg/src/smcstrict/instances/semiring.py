"""Semirings as one-object SMC-categories with discrete hom-categories."""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from ..cells import TwoCellExpr, boundary, is_structural, Gen2
from ..core import Gen, HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit, endpoints
from ..errors import MissingAssignment, NonDegenerate


@dataclass(frozen=True)
class SemiringInstance:
    """Evaluate 1-cells in a semiring; composition ``g o f`` becomes ``mul(g, f)``.

    Every 0-cell of the signature is sent to the single object, so multi-object
    signatures are accepted.  ``gen2`` names the generating 2-cells that may be
    evaluated; being discrete, they must join equal values.
    """

    assignment: Mapping[str, Any]
    add: Callable[[Any, Any], Any] = operator.add
    mul: Callable[[Any, Any], Any] = operator.mul
    zero: Any = 0
    one: Any = 1
    gen2: frozenset[str] = frozenset()
    sig: Signature | None = field(default=None, compare=False)
    label: str = "N"

    @classmethod
    def naturals(cls, assignment: Mapping[str, int], **kw) -> "SemiringInstance":
        for k, v in assignment.items():
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{k} must be a natural number, got {v!r}")
        return cls(dict(assignment), **kw)

    @classmethod
    def int_matrices(cls, assignment: Mapping[str, tuple], n: int = 2, **kw) -> "SemiringInstance":
        """n x n integer matrices: a non-commutative ring, so composition order is observable."""
        def add(a, b):
            return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

        def mul(a, b):
            return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                         for i in range(n))

        zero = tuple(tuple(0 for _ in range(n)) for _ in range(n))
        one = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(dict(assignment), add, mul, zero, one, label=f"Mat{n}(Z)", **kw)

    # homomorphic evaluation hooks
    def gen(self, name: str):
        try:
            return self.assignment[name]
        except KeyError:
            raise MissingAssignment(f"no value for generator {name!r} in {self.label}") from None

    def unit(self, obj: str):
        return self.one

    def null(self, src: str, tgt: str):
        return self.zero

    def compose(self, outer, inner):
        return self.mul(outer, inner)

    def plus(self, left, right):
        return self.add(left, right)

    def two_cell(self, c: TwoCellExpr, sig: Signature):
        """The identity on the common value of source and target."""
        if not is_structural(c):
            _require_gen2(c, self.gen2)
        src, tgt = boundary(c, sig)
        a, b = eval_one_cell(src, self), eval_one_cell(tgt, self)
        if a != b:
            raise NonDegenerate(f"source evaluates to {a!r} but target to {b!r}")
        return a

    def law_violations(self, samples: Iterable[tuple[Any, Any, Any]]) -> list[str]:
        """Spot-check the semiring axioms on sample triples."""
        add, mul, zero, one = self.add, self.mul, self.zero, self.one
        out = []
        for a, b, c in samples:
            checks = {
                "add-assoc": add(add(a, b), c) == add(a, add(b, c)),
                "add-comm": add(a, b) == add(b, a),
                "add-unit": add(zero, a) == a == add(a, zero),
                "mul-assoc": mul(mul(a, b), c) == mul(a, mul(b, c)),
                "mul-unit": mul(one, a) == a == mul(a, one),
                "dist-left": mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
                "dist-right": mul(add(a, b), c) == add(mul(a, c), mul(b, c)),
                "null": mul(zero, a) == zero == mul(a, zero),
            }
            out.extend(f"{name} fails at {(a, b, c)!r}" for name, ok in checks.items() if not ok)
        return out


def _require_gen2(c: TwoCellExpr, allowed: frozenset[str]) -> None:
    from ..cells import HComp2, Inv, SumCells, VComp
    if isinstance(c, Gen2):
        if c.name not in allowed:
            raise MissingAssignment(f"no assignment for 2-cell {c.name!r}")
    elif isinstance(c, VComp):
        _require_gen2(c.later, allowed)
        _require_gen2(c.earlier, allowed)
    elif isinstance(c, HComp2):
        _require_gen2(c.outer, allowed)
        _require_gen2(c.inner, allowed)
    elif isinstance(c, SumCells):
        _require_gen2(c.left, allowed)
        _require_gen2(c.right, allowed)
    elif isinstance(c, Inv):
        _require_gen2(c.cell, allowed)


def eval_one_cell(e: OneCellExpr, interp):
    """Evaluate ``e`` homomorphically: o to composition, + to sum, units to units.

    ``interp`` is any instance exposing ``gen``, ``unit``, ``null``,
    ``compose`` and ``plus``; if it carries a signature, ``e`` is typechecked
    against it first.
    """
    sig = getattr(interp, "sig", None)
    if sig is not None:
        endpoints(e, sig)
    return _eval(e, interp)


def _eval(e: OneCellExpr, interp):
    if isinstance(e, Gen):
        return interp.gen(e.name)
    if isinstance(e, IdUnit):
        return interp.unit(e.obj)
    if isinstance(e, ZeroUnit):
        return interp.null(e.src, e.tgt)
    if isinstance(e, HComp):
        return interp.compose(_eval(e.outer, interp), _eval(e.inner, interp))
    if isinstance(e, Sum):
        return interp.plus(_eval(e.left, interp), _eval(e.right, interp))
    raise TypeError(f"not a 1-cell expression: {e!r}")


def eval_two_cell(c: TwoCellExpr, interp, sig: Signature):
    return interp.two_cell(c, sig)
