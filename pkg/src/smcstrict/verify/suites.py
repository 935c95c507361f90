"""Verification suites with JSON reports and replayable reproducers.

Every reproducer is a complete program in the command language of
:mod:`smcstrict.cli`; running it exits with status 1 exactly when the failure
it records still occurs.  :func:`replay` does that in-process.
"""

from __future__ import annotations

import gc
import itertools
import random
import time
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from ..cells import (AddAssoc, AddUnitL, AddUnitR, AssocH, DistL, DistR, Gen2,
                     HComp2, Id2, Inv, LUnit, NullL, NullR, RUnit, SumCells,
                     Sym, TwoCellExpr, boundary, cell_text, is_structural)
from ..core import (Gen, HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit,
                    default_signature, endpoints, expr_text, make_signature)
from ..errors import SmcError
from ..instances.semiring import SemiringInstance, eval_one_cell
from ..instances.span import (DEFAULT_MODEL, FinSetObj, SpanCell, SpanInstance,
                              SpanMap, SpanModel, span_sum)
from ..normalize import (NormalForm, canonical_iso, embed, normalize,
                         strict_compose, strict_sum, unit_nf, zero_nf)
from ..twocell import DEFAULT_SEMANTICS, Semantics, check_diagram, perm_of
from .diagrams import ALL_CONDITIONS, PC_CONDITIONS, Condition, by_hom
from .enumerate import enumerate_normal_forms, iter_exprs, random_expr
from .oracle import RewriteOracle

__all__ = [
    "Failure", "SuiteReport", "pc_axiom_suite", "strictification_suite",
    "instance_axiom_suite", "semiring_suite", "transport_suite",
    "left_distributivity_suite", "replay", "signature_program", "value_text",
]

MAX_LISTED_FAILURES = 50


@dataclass(frozen=True)
class Failure:
    case: str
    reproducer: str


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    cases: int
    failures: tuple[Failure, ...]
    seed: int | None
    elapsed_ms: int
    total_failures: int = field(default=-1, compare=False)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def failure_count(self) -> int:
        return len(self.failures) if self.total_failures < 0 else self.total_failures

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "cases": self.cases,
            "failures": [{"case": f.case, "reproducer": f.reproducer} for f in self.failures],
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.failure_count > len(self.failures):
            out["failures_omitted"] = self.failure_count - len(self.failures)
        return out


class _Recorder:
    """Counts cases and keeps the first few failures."""

    def __init__(self, name: str, seed: int | None):
        self.name, self.seed = name, seed
        self.cases = 0
        self.failed = 0
        self.kept: list[Failure] = []
        self.start = time.perf_counter()

    def fail(self, case: str, reproducer: str | Callable[[], str]) -> None:
        self.failed += 1
        if len(self.kept) < MAX_LISTED_FAILURES:
            text = reproducer() if callable(reproducer) else reproducer
            self.kept.append(Failure(case, text))

    def report(self) -> SuiteReport:
        ms = int((time.perf_counter() - self.start) * 1000)
        return SuiteReport(self.name, self.cases, tuple(self.kept), self.seed, ms, self.failed)


@contextmanager
def _no_gc():
    # the suites allocate millions of long-lived interned nodes; cyclic GC only slows them
    was = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was:
            gc.enable()


# -- reproducer text ------------------------------------------------------------

def signature_program(sig: Signature) -> str:
    lines = [f"0cells {' '.join(sig.zero_cells)};"]
    lines += [f"1cell {g.name}: {g.src} -> {g.tgt};" for g in sig.gen1]
    lines += [f"2cell {g.name}: {expr_text(g.src)} => {expr_text(g.tgt)};" for g in sig.gen2]
    return "\n".join(lines)


def _path_text(path: Sequence[TwoCellExpr]) -> str:
    return "[" + ", ".join(cell_text(c) for c in path) + "]"


def _check_program(sig: Signature, p1, p2, suffix: str = "") -> str:
    return f"{signature_program(sig)}\ncheck {_path_text(p1)} == {_path_text(p2)}{suffix};\n"


def value_text(v: Any) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(value_text(x) for x in v) + ")"
    if isinstance(v, bool):  # pragma: no cover - never produced
        raise TypeError("booleans are not values")
    if isinstance(v, (int, str)):
        return str(v)
    raise TypeError(f"no surface syntax for {v!r}")


# -- PC conditions ---------------------------------------------------------------

def pc_axiom_suite(sig: Signature | None = None, depth: int = 1, seed: int | None = None,
                   extended: bool = False, semantics: Semantics | None = None,
                   conditions: Sequence[Condition] | None = None) -> SuiteReport:
    """Check every instantiation of the coherence conditions over depth-bounded expressions.

    ``seed`` is recorded but unused: the suite is exhaustive.
    """
    sig = sig or default_signature()
    semantics = semantics or DEFAULT_SEMANTICS
    conds = conditions or (ALL_CONDITIONS if extended else PC_CONDITIONS)
    rec = _Recorder("pc", seed)
    with _no_gc():
        pools = by_hom(list(iter_exprs(sig, depth)), sig)
        for cond in conds:
            for args, (p1, p2) in cond.instances(sig, pools):
                rec.cases += 1
                try:
                    ok = check_diagram(p1, p2, sig, semantics).commutes
                except SmcError:
                    ok = False
                if not ok:
                    rec.fail(_case_name(cond.name, args), lambda: _check_program(sig, p1, p2))
    return rec.report()


def _case_name(name: str, args: dict) -> str:
    parts = [f"{k}={expr_text(v) if not isinstance(v, str) else v}" for k, v in args.items()]
    return f"{name} " + " ".join(parts)


# -- strictification -------------------------------------------------------------

def _universe(sig: Signature, max_monomials: int, max_len: int) -> dict[tuple[str, str], list[NormalForm]]:
    return {(a, b): list(enumerate_normal_forms(sig, a, b, max_monomials, max_len))
            for a in sig.zero_cells for b in sig.zero_cells}


def _in_universe(nf: NormalForm, max_monomials: int, max_len: int) -> bool:
    return len(nf.monomials) <= max_monomials and all(len(m.gens) <= max_len for m in nf.monomials)


def _same_program(sig: Signature, lhs: OneCellExpr, rhs: OneCellExpr) -> str:
    return f"{signature_program(sig)}\nsame {expr_text(lhs)} == {expr_text(rhs)};\n"


def strict_law_cases(sig: Signature, max_monomials: int = 4, max_len: int = 3
                     ) -> Iterable[tuple[str, NormalForm, NormalForm, Callable[[], tuple]]]:
    """Yield ``(law, lhs, rhs, operands)`` for every law instance whose operands and
    both sides lie in the bounded universe of normal forms.

    ``operands`` is a thunk returning the operand normal forms (for reproducers).
    Candidate operand tuples are pre-filtered by monomial counts; membership of
    both sides is still checked on the computed results.
    """
    U = _universe(sig, max_monomials, max_len)
    objs = sig.zero_cells
    fits = lambda nf: _in_universe(nf, max_monomials, max_len)  # noqa: E731

    for (a, b), xs in U.items():
        one_a, one_b, zero = unit_nf(a), unit_nf(b), zero_nf(a, b)
        for x in xs:
            yield "comp-unit-left", strict_compose(one_b, x), x, lambda x=x: (x,)
            yield "comp-unit-right", strict_compose(x, one_a), x, lambda x=x: (x,)
            yield "sum-unit-left", strict_sum(zero, x), x, lambda x=x: (x,)
            yield "sum-unit-right", strict_sum(x, zero), x, lambda x=x: (x,)
            for c in objs:
                yield ("null-left", strict_compose(zero_nf(b, c), x), zero_nf(a, c),
                       lambda x=x, c=c: (x, zero_nf(b, c)))
                yield ("null-right", strict_compose(x, zero_nf(c, a)), zero_nf(c, b),
                       lambda x=x, c=c: (x, zero_nf(c, a)))
        # sum associativity within one hom
        for x in xs:
            for y in xs:
                if len(x.monomials) + len(y.monomials) > max_monomials:
                    continue
                xy = strict_sum(x, y)
                if not fits(xy):
                    continue
                for z in xs:
                    if len(xy.monomials) + len(z.monomials) > max_monomials:
                        continue
                    lhs, yz = strict_sum(xy, z), strict_sum(y, z)
                    rhs = strict_sum(x, yz)
                    if fits(lhs) and fits(yz) and fits(rhs):
                        yield "sum-assoc", lhs, rhs, lambda x=x, y=y, z=z: (x, y, z)

    for a, b, c, d in itertools.product(objs, repeat=4):
        # x: c->d, y: b->c, z: a->b
        for x in U[(c, d)]:
            for y in U[(b, c)]:
                if len(x.monomials) * len(y.monomials) > max_monomials:
                    continue
                xy = strict_compose(x, y)
                if not fits(xy):
                    continue
                for z in U[(a, b)]:
                    if len(xy.monomials) * len(z.monomials) > max_monomials:
                        continue
                    yz = strict_compose(y, z)
                    lhs, rhs = strict_compose(xy, z), strict_compose(x, yz)
                    if fits(yz) and fits(lhs) and fits(rhs):
                        yield "comp-assoc", lhs, rhs, lambda x=x, y=y, z=z: (x, y, z)

    for a, b, c in itertools.product(objs, repeat=3):
        # (x + y) o z with x, y: b->c and z: a->b
        for x in U[(b, c)]:
            for y in U[(b, c)]:
                if len(x.monomials) + len(y.monomials) > max_monomials:
                    continue
                xy = strict_sum(x, y)
                for z in U[(a, b)]:
                    if len(xy.monomials) * len(z.monomials) > max_monomials:
                        continue
                    xz, yz = strict_compose(x, z), strict_compose(y, z)
                    lhs, rhs = strict_compose(xy, z), strict_sum(xz, yz)
                    if all(fits(t) for t in (xy, xz, yz, lhs, rhs)):
                        yield "dist-right", lhs, rhs, lambda x=x, y=y, z=z: (x, y, z)


_LAW_SHAPES = {
    "comp-unit-left": lambda x: (HComp(IdUnit(x.tgt), embed(x)), embed(x)),
    "comp-unit-right": lambda x: (HComp(embed(x), IdUnit(x.src)), embed(x)),
    "sum-unit-left": lambda x: (Sum(ZeroUnit(x.src, x.tgt), embed(x)), embed(x)),
    "sum-unit-right": lambda x: (Sum(embed(x), ZeroUnit(x.src, x.tgt)), embed(x)),
    "null-left": lambda x, z: (HComp(embed(z), embed(x)), ZeroUnit(x.src, z.tgt)),
    "null-right": lambda x, z: (HComp(embed(x), embed(z)), ZeroUnit(z.src, x.tgt)),
    "sum-assoc": lambda x, y, z: (Sum(Sum(embed(x), embed(y)), embed(z)),
                                  Sum(embed(x), Sum(embed(y), embed(z)))),
    "comp-assoc": lambda x, y, z: (HComp(HComp(embed(x), embed(y)), embed(z)),
                                   HComp(embed(x), HComp(embed(y), embed(z)))),
    "dist-right": lambda x, y, z: (HComp(Sum(embed(x), embed(y)), embed(z)),
                                   Sum(HComp(embed(x), embed(z)), HComp(embed(y), embed(z)))),
}


def strict_law_suite(sig: Signature, max_monomials: int = 4, max_len: int = 3,
                     seed: int | None = None) -> SuiteReport:
    rec = _Recorder("strict-laws", seed)
    with _no_gc():
        for law, lhs, rhs, operands in strict_law_cases(sig, max_monomials, max_len):
            rec.cases += 1
            if lhs != rhs:
                def repro(law=law, operands=operands):
                    return _same_program(sig, *_LAW_SHAPES[law](*operands()))
                rec.fail(f"{law} {' | '.join(str(o) for o in operands())}", repro)
    return rec.report()


def strictification_suite(sig: Signature | None = None, depth: int = 3, max_monomials: int = 4,
                          max_len: int = 3, seed: int | None = None,
                          parts: str = "abcde") -> SuiteReport:
    """Strict laws, round trips, canonical isomorphisms, surjectivity and the oracle.

    ``parts`` selects a subset of: (a) strict laws on bounded normal forms,
    (b) round trips, (c) canonical isomorphisms, (d) essential surjectivity
    through ``embed``, (e) agreement with the rewriting oracle.
    """
    sig = sig or default_signature()
    rec = _Recorder("strict", seed)
    prog = signature_program(sig)
    with _no_gc():
        if "a" in parts:
            sub = strict_law_suite(sig, max_monomials, max_len, seed)
            rec.cases += sub.cases
            rec.failed += sub.failure_count
            rec.kept.extend(sub.failures[:MAX_LISTED_FAILURES - len(rec.kept)])
        universe = _universe(sig, max_monomials, max_len) if ("b" in parts or "d" in parts) else {}
        for nfs in universe.values():
            for nf in nfs:
                e = embed(nf)
                if "b" in parts:
                    rec.cases += 1
                    if normalize(e, sig) != nf:
                        rec.fail(f"normalize(embed({nf}))", f"{prog}\nroundtrip {expr_text(e)};\n")
                if "d" in parts:
                    rec.cases += 1
                    if not _surjectivity_ok(e, nf, sig):
                        rec.fail(f"embed({nf}) is not a preimage", f"{prog}\niso {expr_text(e)};\n")
        if any(p in parts for p in "bce"):
            oracle = RewriteOracle(sig) if "e" in parts else None
            seen: set[NormalForm] = set()
            for e in iter_exprs(sig, depth):
                nf = normalize(e, sig)
                if "b" in parts and nf not in seen:
                    seen.add(nf)
                    rec.cases += 1
                    if normalize(embed(nf), sig) != nf:
                        rec.fail(f"round trip of {expr_text(e)}", f"{prog}\nroundtrip {expr_text(e)};\n")
                if "c" in parts:
                    rec.cases += 1
                    if not _iso_ok(e, nf, sig):
                        rec.fail(f"canonical_iso({expr_text(e)})", f"{prog}\niso {expr_text(e)};\n")
                if oracle is not None:
                    rec.cases += 1
                    if not oracle_agrees(oracle, e, nf):
                        rec.fail(f"oracle on {expr_text(e)}", f"{prog}\noracle {expr_text(e)};\n")
            if oracle is not None:
                oracle.clear()
    return rec.report()


def iso_ok(e: OneCellExpr, sig: Signature) -> bool:
    """Boundary ``(e, embed(normalize(e)))``, no generating 2-cells, identity position map."""
    try:
        return _iso_ok(e, normalize(e, sig), sig)
    except SmcError:
        return False


def _iso_ok(e: OneCellExpr, nf: NormalForm, sig: Signature) -> bool:
    try:
        c = canonical_iso(e, sig)
        if boundary(c, sig) != (e, embed(nf)) or not is_structural(c):
            return False
        return perm_of(c, sig).is_identity
    except SmcError:
        return False


def _surjectivity_ok(e: OneCellExpr, nf: NormalForm, sig: Signature) -> bool:
    try:
        return endpoints(e, sig) == (nf.src, nf.tgt) and _iso_ok(e, nf, sig)
    except SmcError:
        return False


def oracle_agrees(oracle: RewriteOracle, e: OneCellExpr, nf: NormalForm | None = None) -> bool:
    nf = nf if nf is not None else normalize(e, oracle.sig)
    src, tgt, strings = oracle.flatten(e)
    return (src, tgt) == (nf.src, nf.tgt) and strings == tuple(m.gens for m in nf.monomials)


# -- left distributivity ---------------------------------------------------------

def left_distributivity_suite(sig: Signature | None = None, depth: int = 2,
                              literal: bool = True) -> SuiteReport:
    """Compare ``x o (y + z)`` with ``x o y + x o z`` on all composable depth-bounded triples.

    Both sides always hold the same strings.  ``literal=True`` also asserts
    that they differ as sequences exactly when ``x`` has at least two strings
    and ``y``, ``z`` are both nonempty; that claim fails when repeated strings
    make the shuffle invisible (``x = g + g``).  ``literal=False`` asserts the
    corrected statement instead: the shuffle is a non-identity permutation
    exactly under that condition, and unequal sequences imply the condition.

    The outcome depends only on the normal forms of ``x``, ``y`` and ``z``, so
    each class of normal-form triples is checked once and weighted by the
    number of expression triples it stands for.
    """
    sig = sig or default_signature()
    rec = _Recorder("left-dist" if literal else "left-dist-corrected", None)
    classes: dict[NormalForm, list[OneCellExpr]] = {}
    for e in iter_exprs(sig, depth):
        classes.setdefault(normalize(e, sig), []).append(e)
    by_type: dict[tuple[str, str], list[NormalForm]] = {}
    for nf in classes:
        by_type.setdefault((nf.src, nf.tgt), []).append(nf)
    prog = signature_program(sig)
    with _no_gc():
        for (b, c), xs in by_type.items():
            for a in sig.zero_cells:
                ys = by_type.get((a, b), [])
                for x, y, z in itertools.product(xs, ys, ys):
                    weight = len(classes[x]) * len(classes[y]) * len(classes[z])
                    rec.cases += weight
                    ok = left_distributivity_holds(x, y, z, literal)
                    if not ok:
                        ex, ey, ez = classes[x][0], classes[y][0], classes[z][0]
                        flag = "" if literal else " --corrected"
                        rec.fail(f"x={expr_text(ex)} y={expr_text(ey)} z={expr_text(ez)}",
                                 f"{prog}\nleftdist {expr_text(ex)}, {expr_text(ey)}, "
                                 f"{expr_text(ez)}{flag};\n")
                        rec.failed += weight - 1
    return rec.report()


def left_distributivity_holds(x: NormalForm, y: NormalForm, z: NormalForm,
                              literal: bool = True) -> bool:
    """The per-triple claim checked by :func:`left_distributivity_suite`."""
    lhs = strict_compose(x, strict_sum(y, z))
    rhs = strict_sum(strict_compose(x, y), strict_compose(x, z))
    k, l, r = len(x.monomials), len(y.monomials), len(z.monomials)
    shuffled = k >= 2 and l >= 1 and r >= 1
    same_bag = Counter(lhs.monomials) == Counter(rhs.monomials)
    differ = lhs != rhs
    if literal:
        return same_bag and differ == shuffled
    nontrivial = any(i != j for i, j in enumerate(_distl_positions(k, l, r)))
    return same_bag and nontrivial == shuffled and (not differ or shuffled)


def _distl_positions(k: int, l: int, r: int) -> list[int]:
    out = []
    for i in range(k):
        out.extend(i * l + j for j in range(l))
        out.extend(k * l + i * r + j for j in range(r))
    return out


# -- semirings -------------------------------------------------------------------

def _semiring_program(sig: Signature, interp: SemiringInstance, lhs, rhs) -> str:
    lit = "N{" + ", ".join(f"{k}={v}" for k, v in sorted(interp.assignment.items())) + "}"
    return f"{signature_program(sig)}\nsame {expr_text(lhs)} == {expr_text(rhs)} in {lit};\n"


def _semiring_case(rec: _Recorder, interp: SemiringInstance, sig: Signature, e: OneCellExpr) -> None:
    rec.cases += 1
    target = embed(normalize(e, sig))
    try:
        ok = eval_one_cell(target, interp) == eval_one_cell(e, interp)
        if ok:
            interp.two_cell(canonical_iso(e, sig), sig)
    except SmcError:
        ok = False
    if not ok:
        rec.fail(f"eval {expr_text(e)}", lambda: _semiring_program(sig, interp, e, target))


_SEMIRING_LAWS = {
    "add-assoc": lambda x, y, z: (Sum(Sum(x, y), z), Sum(x, Sum(y, z))),
    "add-comm": lambda x, y, z: (Sum(x, y), Sum(y, x)),
    "add-unit": lambda x, y, z: (Sum(ZeroUnit("a", "a"), x), x),
    "mul-assoc": lambda x, y, z: (HComp(HComp(x, y), z), HComp(x, HComp(y, z))),
    "mul-unit": lambda x, y, z: (HComp(IdUnit("a"), x), HComp(x, IdUnit("a"))),
    "dist-left": lambda x, y, z: (HComp(x, Sum(y, z)), Sum(HComp(x, y), HComp(x, z))),
    "dist-right": lambda x, y, z: (HComp(Sum(x, y), z), Sum(HComp(x, z), HComp(y, z))),
    "null": lambda x, y, z: (HComp(ZeroUnit("a", "a"), x), HComp(x, ZeroUnit("a", "a"))),
}


def semiring_suite(samples: int = 10_000, seed: int = 0, sig: Signature | None = None,
                   max_value: int = 9, depth: int = 5) -> SuiteReport:
    """Random expressions under random natural-number assignments: evaluation
    must commute with strictification."""
    from ..core import standard_signature
    sig = sig or standard_signature()
    rng = random.Random(seed)
    rec = _Recorder("instance-semiring", seed)
    with _no_gc():
        for _ in range(samples):
            values = {g.name: rng.randint(0, max_value) for g in sig.gen1}
            interp = SemiringInstance.naturals(values)
            _semiring_case(rec, interp, sig, random_expr(sig, depth, rng))
    return rec.report()


def _semiring_instance_suite(interp: SemiringInstance, samples: int, seed: int,
                             sig: Signature | None, depth: int) -> SuiteReport:
    from ..core import standard_signature
    sig = sig or interp.sig or (make_signature("a", {k: ("a", "a") for k in interp.assignment})
                                if interp.assignment else standard_signature())
    rng = random.Random(seed)
    rec = _Recorder("instance-semiring", seed)
    # the semiring has one object, so every generator may be read as an endomorphism
    law_sig = make_signature("a", {k: ("a", "a") for k in interp.assignment})
    atoms = [Gen(k) for k in interp.assignment] + [IdUnit("a"), ZeroUnit("a", "a")]
    with _no_gc():
        for _ in range(samples):
            x, y, z = (rng.choice(atoms) for _ in range(3))
            for law, shape in _SEMIRING_LAWS.items():
                lhs, rhs = shape(x, y, z)
                rec.cases += 1
                if eval_one_cell(lhs, interp) != eval_one_cell(rhs, interp):
                    rec.fail(f"{law} at {expr_text(lhs)}",
                             lambda lhs=lhs, rhs=rhs: _semiring_program(law_sig, interp, lhs, rhs))
            _semiring_case(rec, interp, sig, random_expr(sig, depth, rng))
    return rec.report()


# -- spans -----------------------------------------------------------------------

SPAN_SIGNATURE = make_signature(
    "a b c d e",
    {"p": ("a", "b"), "p2": ("a", "b"), "p3": ("a", "b"),
     "q": ("b", "c"), "q2": ("b", "c"), "r": ("c", "d"), "r2": ("c", "d"), "s": ("d", "e")},
    {"alpha": (Gen("p"), Gen("p2")), "beta": (Gen("q"), Gen("q2")), "gamma": (Gen("r"), Gen("r2"))},
)

# generators whose spans are built as an inclusion ``x -> x + extra``
_EXTENDED = {"p2": ("p", "alpha"), "q2": ("q", "beta"), "r2": ("r", "gamma")}


def _random_set(name: str, rng: random.Random, max_size: int) -> FinSetObj:
    return FinSetObj(tuple(f"{name}{i}" for i in range(rng.randint(0, max_size))))


def _random_span(name: str, src: FinSetObj, tgt: FinSetObj, rng: random.Random,
                 max_size: int) -> SpanCell:
    n = rng.randint(0, max_size) if src.elements and tgt.elements else 0
    return SpanCell(src, tgt, FinSetObj(tuple(f"{name}{i}" for i in range(n))),
                    tuple(rng.choice(src.elements) for _ in range(n)),
                    tuple(rng.choice(tgt.elements) for _ in range(n)))


def random_span_instance(rng: random.Random, max_size: int = 4,
                         model: SpanModel = DEFAULT_MODEL) -> SpanInstance:
    """Random finite sets and spans for :data:`SPAN_SIGNATURE`, with inclusions as 2-cells."""
    sig = SPAN_SIGNATURE
    objects = {o: _random_set(o, rng, max_size) for o in sig.zero_cells}
    gens: dict[str, SpanCell] = {}
    cells: dict[str, SpanMap] = {}
    for g in sig.gen1:
        if g.name in _EXTENDED:
            continue
        gens[g.name] = _random_span(g.name, objects[g.src], objects[g.tgt], rng, max_size)
    for name, (base, cell) in _EXTENDED.items():
        g = sig.gen(name)
        extra = _random_span(name, objects[g.src], objects[g.tgt], rng, max_size)
        gens[name] = span_sum(gens[base], extra)
        cells[cell] = SpanMap(gens[base], gens[name], {x: (0, x) for x in gens[base].apex.elements})
    return SpanInstance(objects, gens, cells, sig, model)


def span_instance_program(inst: SpanInstance, name: str = "S") -> str:
    """Declarations that rebuild ``inst`` in the command language."""
    lines = []
    for o, X in inst.objects.items():
        lines.append(f"set set_{o} = {{{', '.join(value_text(x) for x in X.elements)}}};")
    sig = inst.sig or SPAN_SIGNATURE
    for g, sp in inst.gens.items():
        entries = ", ".join(f"{value_text(p)}: {value_text(l)} -> {value_text(r)}"
                            for p, l, r in zip(sp.apex.elements, sp.left_leg, sp.right_leg))
        gen = sig.gen(g)
        lines.append(f"span span_{g}: set_{gen.src} -> set_{gen.tgt} = {{{entries}}};")
    for c, m in inst.cells.items():
        pairs = ", ".join(f"{value_text(p)} -> {value_text(q)}" for p, q in m.mapping.items())
        cell = sig.cell(c)
        lines.append(f"spanmap map_{c}: span_{expr_text(cell.src)} => span_{expr_text(cell.tgt)}"
                     f" = {{{pairs}}};")
    binds = [f"{o}: set_{o}" for o in inst.objects] + [f"{g}: span_{g}" for g in inst.gens]
    binds += [f"{c}: map_{c}" for c in inst.cells]
    lines.append(f"instance {name} = span {{{', '.join(binds)}}};")
    return "\n".join(lines)


def _span_path(inst: SpanInstance, path: Sequence[TwoCellExpr], sig: Signature) -> SpanMap:
    out = inst.two_cell(path[0], sig)
    for c in path[1:]:
        out = out.then(inst.two_cell(c, sig))
    return out


def span_paths_agree(inst: SpanInstance, p1, p2, sig: Signature) -> bool:
    try:
        m1, m2 = _span_path(inst, p1, sig), _span_path(inst, p2, sig)
    except SmcError:
        return False
    return (m1.source, m1.target) == (m2.source, m2.target) and dict(m1.mapping) == dict(m2.mapping)


# Each structural constructor as (argument homs, source shape, target shape).
# Shapes take (comp, plus, unit, zero) so they build 1-cells or 2-cells alike.
def _shapes():
    A, B, C, D = "a", "b", "c", "d"
    return {
        "assoc": (AssocH, ((C, D), (B, C), (A, B)), lambda o, f, g, h: o.C(f, o.C(g, h)),
                  lambda o, f, g, h: o.C(o.C(f, g), h)),
        "lunit": (LUnit, ((A, B),), lambda o, f: o.C(o.unit(B), f), lambda o, f: f),
        "runit": (RUnit, ((A, B),), lambda o, f: o.C(f, o.unit(A)), lambda o, f: f),
        "addassoc": (AddAssoc, ((A, B),) * 3, lambda o, f, g, h: o.S(f, o.S(g, h)),
                     lambda o, f, g, h: o.S(o.S(f, g), h)),
        "addunitl": (AddUnitL, ((A, B),), lambda o, f: o.S(o.zero(A, B), f), lambda o, f: f),
        "addunitr": (AddUnitR, ((A, B),), lambda o, f: o.S(f, o.zero(A, B)), lambda o, f: f),
        "sym": (Sym, ((A, B),) * 2, lambda o, f, g: o.S(f, g), lambda o, f, g: o.S(g, f)),
        "distl": (DistL, ((B, C), (A, B), (A, B)), lambda o, f, g, h: o.C(f, o.S(g, h)),
                  lambda o, f, g, h: o.S(o.C(f, g), o.C(f, h))),
        "distr": (DistR, ((B, C), (B, C), (A, B)), lambda o, f, g, h: o.C(o.S(f, g), h),
                  lambda o, f, g, h: o.S(o.C(f, h), o.C(g, h))),
        "nulll": (lambda f: NullL(f, C), ((A, B),), lambda o, f: o.C(o.zero(B, C), f),
                  lambda o, f: o.zero(A, C)),
        "nullr": (lambda f: NullR(f, A), ((B, C),), lambda o, f: o.C(f, o.zero(A, B)),
                  lambda o, f: o.zero(A, C)),
    }


class _Exprs:
    C, S = staticmethod(HComp), staticmethod(Sum)
    unit = staticmethod(IdUnit)
    zero = staticmethod(ZeroUnit)


class _Cells:
    C, S = staticmethod(HComp2), staticmethod(SumCells)

    @staticmethod
    def unit(a):
        return Id2(IdUnit(a))

    @staticmethod
    def zero(a, b):
        return Id2(ZeroUnit(a, b))


SHAPES = _shapes()

# 2-cells available per hom for naturality squares
_NAT_CELLS = {
    ("a", "b"): (Gen2("alpha"), Id2(Gen("p3")), Id2(Sum(Gen("p"), Gen("p3")))),
    ("b", "c"): (Gen2("beta"), Id2(Gen("q"))),
    ("c", "d"): (Gen2("gamma"), Id2(Gen("r"))),
}


def naturality_square(name: str, thetas: Sequence[TwoCellExpr], sig: Signature):
    """Paths ``F(theta) ; k(y)`` and ``k(x) ; G(theta)`` for structural constructor ``k``."""
    make, _, src_shape, tgt_shape = SHAPES[name]
    xs = [boundary(t, sig)[0] for t in thetas]
    ys = [boundary(t, sig)[1] for t in thetas]
    return ([src_shape(_Cells, *thetas), make(*ys)], [make(*xs), tgt_shape(_Cells, *thetas)])


def _random_condition(rng: random.Random, pools, sig: Signature):
    cond = rng.choice(ALL_CONDITIONS)
    for _ in range(50):
        env = {v: rng.choice(sig.zero_cells) for v in cond.objects}
        homs = [pools.get((env[s], env[t])) for _, s, t in cond.exprs]
        if all(homs):
            args = {v: rng.choice(h) for (v, _, _), h in zip(cond.exprs, homs)}
            args.update(env)
            return cond, args, cond.build(**args)
    return None


def _span_pools(sig: Signature) -> dict:
    return by_hom(list(iter_exprs(make_signature(sig.zero_cells, {g.name: (g.src, g.tgt)
                                                                    for g in sig.gen1}), 1)), sig)


def span_suite(model: SpanModel = DEFAULT_MODEL, samples: int = 1000, seed: int = 0,
               max_size: int = 4, conditions_per_sample: int = 2) -> SuiteReport:
    """Randomized checks in Span(FinSet).

    Per sample: fresh random sets (size <= ``max_size``) and spans; every
    structural constructor's span map must be a bijection and natural in each
    argument (squares against inclusion 2-cells), and randomly instantiated
    coherence diagrams must evaluate to equal bijections.
    """
    sig = SPAN_SIGNATURE
    rng = random.Random(seed)
    rec = _Recorder("instance-span", seed)
    pools = _span_pools(sig)
    with _no_gc():
        for i in range(samples):
            inst = random_span_instance(rng, max_size, model)
            for name, (make, homs, _, _) in SHAPES.items():
                thetas = [rng.choice(_NAT_CELLS[h]) for h in homs]
                args = [boundary(t, sig)[0] for t in thetas]
                rec.cases += 1
                try:
                    ok = inst.two_cell(make(*args), sig).is_bijection
                except SmcError:
                    ok = False
                if not ok:
                    rec.fail(f"sample {i}: {cell_text(make(*args))} is not a bijection",
                             lambda a=args, m=make, inst=inst: _span_program(
                                 inst, [m(*a)], [m(*a)]))
                p1, p2 = naturality_square(name, thetas, sig)
                rec.cases += 1
                if not span_paths_agree(inst, p1, p2, sig):
                    rec.fail(f"sample {i}: naturality of {name}",
                             lambda p1=p1, p2=p2, inst=inst: _span_program(inst, p1, p2))
            for _ in range(conditions_per_sample):
                picked = _random_condition(rng, pools, sig)
                if picked is None:  # pragma: no cover - every condition fits SPAN_SIGNATURE
                    continue
                cond, args, (p1, p2) = picked
                rec.cases += 1
                if not span_paths_agree(inst, p1, p2, sig):
                    rec.fail(f"sample {i}: {_case_name(cond.name, args)}",
                             lambda p1=p1, p2=p2, inst=inst: _span_program(inst, p1, p2))
    return rec.report()


def _span_program(inst: SpanInstance, p1, p2) -> str:
    return (f"{signature_program(SPAN_SIGNATURE)}\n{span_instance_program(inst)}\n"
            f"check {_path_text(p1)} == {_path_text(p2)} in S;\n")


def transport_suite(count: int = 200, seed: int = 0, model: SpanModel = DEFAULT_MODEL,
                    max_size: int = 4, semantics: Semantics | None = None) -> SuiteReport:
    """Diagrams that commute in the free semantics must give equal span bijections.

    Diagrams are drawn at random from the coherence conditions and from
    ``canonical_iso`` round trips ``e => nf => e``; only those that commute in
    the free semantics are counted.
    """
    sig = SPAN_SIGNATURE
    rng = random.Random(seed)
    rec = _Recorder("transport", seed)
    pools = _span_pools(sig)
    structural = make_signature(sig.zero_cells, {g.name: (g.src, g.tgt) for g in sig.gen1})
    homs = [h for h, v in pools.items() if v]
    with _no_gc():
        while rec.cases < count:
            if rng.random() < 0.75:
                picked = _random_condition(rng, pools, sig)
                if picked is None:  # pragma: no cover
                    continue
                _, _, (p1, p2) = picked
            else:
                e = random_expr(structural, 3, rng, hom=rng.choice(homs))
                iso = canonical_iso(e, sig)
                p1, p2 = [iso, Inv(iso)], [Id2(e)]
            try:
                if not check_diagram(p1, p2, sig, semantics).commutes:
                    continue
            except SmcError:
                continue
            rec.cases += 1
            inst = random_span_instance(rng, max_size, model)
            if not span_paths_agree(inst, p1, p2, sig):
                rec.fail(f"diagram {rec.cases}", lambda p1=p1, p2=p2, inst=inst: _span_program(inst, p1, p2))
    return rec.report()


# -- dispatch -------------------------------------------------------------------

def instance_axiom_suite(interp, samples: int = 1000, seed: int = 0, *, sig: Signature | None = None,
                         depth: int = 4, max_size: int = 4) -> SuiteReport:
    """Randomized axiom checks inside a model, deterministic in ``seed``.

    ``interp`` is a :class:`SemiringInstance` (semiring laws, and evaluation
    commuting with strictification), or a :class:`SpanModel` / :class:`SpanInstance`
    (bijection existence, naturality and coherence in spans of finite sets;
    the instance's own sets are not used, each sample draws fresh ones).
    """
    if isinstance(interp, SemiringInstance):
        return _semiring_instance_suite(interp, samples, seed, sig, depth)
    if isinstance(interp, SpanInstance):
        interp = interp.model
    if isinstance(interp, SpanModel):
        return span_suite(interp, samples, seed, max_size)
    raise TypeError(f"no axiom suite for {type(interp).__name__}")


def replay(reproducer: str, semantics: Semantics | None = None,
           model: SpanModel | None = None) -> bool:
    """True when running ``reproducer`` still fails (exit status 1)."""
    import io
    from ..cli.run import run_text
    status = run_text(reproducer, out=io.StringIO(), err=io.StringIO(),
                      semantics=semantics, span_model=model)
    return status == 1
