"""A naive term-rewriting normaliser, used as an oracle for :func:`normalize`.

It works on expression trees only and never touches normal-form objects.
Rules, applied innermost-first at the root of a term whose children are
already normal:

    comp-assoc   (a o b) o c      ->  a o (b o c)
    sum-assoc    (a + b) + c      ->  a + (b + c)
    unit         1 o a, a o 1     ->  a
    null-comp    0 o a, a o 0     ->  0            (with the composite's endpoints)
    null-sum     0 + a, a + 0     ->  a
    dist-right   (a + b) o c      ->  a o c + b o c
    dist-left    a o (b + c)      ->  a o b + a o c   (only when a contains no sum)

The guard on dist-left makes the left factor's summands the outer loop,
which is the order the strict composition uses.
"""

from __future__ import annotations

from ..core import Gen, HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit, endpoints

Flat = tuple[str, str, tuple[tuple[str, ...], ...]]


class RewriteOracle:
    def __init__(self, sig: Signature):
        self.sig = sig
        self._memo: dict[OneCellExpr, OneCellExpr] = {}
        self._read: dict[OneCellExpr, tuple[tuple[str, ...], ...]] = {}
        self.steps = 0

    def normal_term(self, e: OneCellExpr) -> OneCellExpr:
        hit = self._memo.get(e)
        if hit is not None:
            return hit
        if isinstance(e, HComp):
            out = self._root(HComp(self.normal_term(e.outer), self.normal_term(e.inner)))
        elif isinstance(e, Sum):
            out = self._root(Sum(self.normal_term(e.left), self.normal_term(e.right)))
        else:
            out = e
        self._memo[e] = out
        return out

    def _root(self, t: OneCellExpr) -> OneCellExpr:
        for rule in _RULES:
            r = rule(self, t)
            if r is not None:
                self.steps += 1
                return self.normal_term(r)
        return t

    def flatten(self, e: OneCellExpr) -> Flat:
        """``(src, tgt, strings)`` with each string listed outermost letter first."""
        src, tgt = endpoints(e, self.sig)
        t = self.normal_term(e)
        out = self._read.get(t)
        if out is None:
            out = self._read[t] = tuple(_string(s) for s in _summands(t))
        return src, tgt, out

    def clear(self) -> None:
        self._memo.clear()
        self._read.clear()


def _comp_assoc(o, t):
    if isinstance(t, HComp) and isinstance(t.outer, HComp):
        return HComp(t.outer.outer, HComp(t.outer.inner, t.inner))


def _sum_assoc(o, t):
    if isinstance(t, Sum) and isinstance(t.left, Sum):
        return Sum(t.left.left, Sum(t.left.right, t.right))


def _unit(o, t):
    if isinstance(t, HComp):
        if isinstance(t.outer, IdUnit):
            return t.inner
        if isinstance(t.inner, IdUnit):
            return t.outer


def _null_comp(o, t):
    if isinstance(t, HComp) and (isinstance(t.outer, ZeroUnit) or isinstance(t.inner, ZeroUnit)):
        return ZeroUnit(*endpoints(t, o.sig))


def _null_sum(o, t):
    if isinstance(t, Sum):
        if isinstance(t.left, ZeroUnit):
            return t.right
        if isinstance(t.right, ZeroUnit):
            return t.left


def _dist_right(o, t):
    if isinstance(t, HComp) and isinstance(t.outer, Sum):
        return Sum(HComp(t.outer.left, t.inner), HComp(t.outer.right, t.inner))


def _dist_left(o, t):
    if isinstance(t, HComp) and isinstance(t.inner, Sum) and not _has_sum(t.outer):
        return Sum(HComp(t.outer, t.inner.left), HComp(t.outer, t.inner.right))


def _has_sum(e: OneCellExpr) -> bool:
    if isinstance(e, Sum):
        return True
    if isinstance(e, HComp):
        return _has_sum(e.outer) or _has_sum(e.inner)
    return False


_RULES = (_comp_assoc, _sum_assoc, _unit, _null_comp, _null_sum, _dist_right, _dist_left)


def _summands(t: OneCellExpr) -> list[OneCellExpr]:
    if isinstance(t, ZeroUnit):
        return []
    if isinstance(t, Sum):
        return _summands(t.left) + _summands(t.right)
    return [t]


def _string(t: OneCellExpr) -> tuple[str, ...]:
    if isinstance(t, IdUnit):
        return ()
    if isinstance(t, Gen):
        return (t.name,)
    if isinstance(t, HComp):
        return _string(t.outer) + _string(t.inner)
    raise AssertionError(f"rewriting left a non-normal term: {t}")
