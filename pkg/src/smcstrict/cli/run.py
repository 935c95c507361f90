"""Execute parsed programs.

Exit status: 0 when every command succeeds, 1 when a check, comparison or
suite fails or an instance cannot evaluate, 2 on parse, resolve and type
errors.  Diagnostics go to the error stream; the worst status wins.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from typing import TextIO

from ..core import Signature, default_signature, endpoints, expr_text, make_signature
from ..errors import BoundaryMismatch, EndpointMismatch, MissingAssignment, NonDegenerate, ParseError, ResolveError, SmcError
from ..instances.semiring import SemiringInstance, eval_one_cell
from ..instances.span import DEFAULT_MODEL, FinSetObj, SpanCell, SpanInstance, SpanMap, SpanModel
from ..normalize import canonical_iso, embed, nf_text, normalize
from ..twocell import Semantics, check_diagram
from .parser import parse_program
from .syntax import (Check, Eval, InstanceDecl, Iso, LeftDist, Normalize, OneCellDecl, Oracle,
                     Program, Roundtrip, Same, SemiringLit, SetDecl, SpanDecl, SpanMapDecl,
                     StrictifyReport, Suite, TwoCellDecl, ZeroCells)

DEPTH_ENV = "SMCSTRICT_DEPTH"
DEFAULT_DEPTHS = {"pc": 1, "strict": 2, "strictify-report": 2}
DEFAULT_SAMPLES = 100

OK, FAILED, INVALID = 0, 1, 2


@dataclass
class RunOptions:
    json: bool = False
    depth: int | None = None
    seed: int | None = None
    semantics: Semantics | None = None
    span_model: SpanModel | None = None


class _Failed(Exception):
    """A command ran and reported a failure (status 1); the message is already printed."""


class Runner:
    def __init__(self, out: TextIO, err: TextIO, options: RunOptions):
        self.out, self.err, self.opts = out, err, options
        self.zero_cells: list[str] = []
        self.gen1: dict = {}
        self.gen2: dict = {}
        self.sets: dict[str, FinSetObj] = {}
        self.spans: dict[str, SpanCell] = {}
        self.maps: dict[str, SpanMap] = {}
        self.instances: dict = {}
        self._sig: Signature | None = None

    @property
    def sig(self) -> Signature:
        if self._sig is None:
            declared = self.zero_cells or self.gen1 or self.gen2
            self._sig = (make_signature(self.zero_cells, self.gen1, self.gen2)
                         if declared else default_signature())
        return self._sig

    def emit(self, text: str) -> None:
        print(text, file=self.out)

    def run(self, program: Program) -> int:
        status = OK
        for st in program.statements:
            try:
                getattr(self, "do_" + type(st).__name__)(st)
            except _Failed:
                status = max(status, FAILED)
            except (MissingAssignment, NonDegenerate) as exc:
                self._diag(st, exc)
                status = max(status, FAILED)
            except (SmcError, ValueError) as exc:
                self._diag(st, exc)
                status = INVALID
        return status

    def _diag(self, st, exc: Exception) -> None:
        where = f"{st.pos.line}:{st.pos.column}: " if st.pos else ""
        print(f"error: {where}{type(exc).__name__}: {exc}", file=self.err)

    def fail(self, text: str) -> None:
        self.emit(text)
        raise _Failed

    # -- declarations --
    def do_ZeroCells(self, st: ZeroCells):
        self.zero_cells.extend(st.names)
        self._sig = None

    def do_OneCellDecl(self, st: OneCellDecl):
        self.gen1[st.name] = (st.src, st.tgt)
        self._sig = None

    def do_TwoCellDecl(self, st: TwoCellDecl):
        self.gen2[st.name] = (st.src, st.tgt)
        self._sig = None
        if endpoints(st.src, self.sig) != endpoints(st.tgt, self.sig):
            raise ResolveError(f"2-cell {st.name!r} joins non-parallel 1-cells")

    def do_SetDecl(self, st: SetDecl):
        self.sets[st.name] = FinSetObj(st.elements)

    def do_SpanDecl(self, st: SpanDecl):
        apex = FinSetObj(tuple(p for p, _, _ in st.entries))
        self.spans[st.name] = SpanCell(self.sets[st.src], self.sets[st.tgt], apex,
                                       tuple(l for _, l, _ in st.entries),
                                       tuple(r for _, _, r in st.entries))

    def do_SpanMapDecl(self, st: SpanMapDecl):
        self.maps[st.name] = SpanMap(self.spans[st.source], self.spans[st.target], dict(st.pairs))

    def do_InstanceDecl(self, st: InstanceDecl):
        if isinstance(st.spec, SemiringLit):
            self.instances[st.name] = self._semiring(st.spec)
            return
        sig = self.sig
        objects, gens, cells = {}, {}, {}
        for key, ref in st.spec.bindings:
            if key in sig.zero_cells:
                objects[key] = self.sets[ref]
            elif sig.has_gen(key):
                gens[key] = self.spans[ref]
            else:
                cells[key] = self.maps[ref]
        self.instances[st.name] = SpanInstance(objects, gens, cells, sig,
                                               self.opts.span_model or DEFAULT_MODEL)

    def _semiring(self, lit: SemiringLit) -> SemiringInstance:
        return SemiringInstance.naturals(dict(lit.assignment), sig=self.sig)

    def instance(self, ref):
        return self._semiring(ref) if isinstance(ref, SemiringLit) else self.instances[ref]

    # -- commands --
    def do_Normalize(self, st: Normalize):
        nf = normalize(st.expr, self.sig)
        if self.opts.json:
            self.emit(json.dumps({"expr": expr_text(st.expr), "normal_form": nf_text(nf)}))
        else:
            self.emit(nf_text(nf))

    def do_Check(self, st: Check):
        if st.instance is not None:
            return self._check_in(st)
        from ..twocell import path_boundary
        p1, p2 = list(st.path1), list(st.path2)
        if path_boundary(p1, self.sig) != path_boundary(p2, self.sig):
            raise BoundaryMismatch("paths are not parallel")
        try:
            report = check_diagram(p1, p2, self.sig, self.opts.semantics)
        except BoundaryMismatch as exc:
            # the paths are well typed, so this is the semantics refusing a cell
            self.fail(f"commutes=false semantics error: {exc}")
        if self.opts.json:
            text = json.dumps(report.to_json())
        else:
            b0, b1 = (expr_text(e) for e in report.boundary)
            text = (f"commutes={'true' if report.commutes else 'false'} "
                    f"boundary: {b0} => {b1} "
                    f"path1: {list(report.path1_perm.mapping)} path2: {list(report.path2_perm.mapping)}")
        if report.commutes:
            self.emit(text)
        else:
            self.fail(text)

    def _check_in(self, st: Check):
        from ..twocell import path_boundary
        inst = self.instance(st.instance)
        sig = self.sig
        if path_boundary(st.path1, sig) != path_boundary(st.path2, sig):
            raise BoundaryMismatch("paths are not parallel")
        if isinstance(inst, SemiringInstance):
            for c in st.path1 + st.path2:
                inst.two_cell(c, sig)
            self.emit("commutes=true")
            return
        maps = []
        try:
            for path in (st.path1, st.path2):
                m = inst.two_cell(path[0], sig)
                for c in path[1:]:
                    m = m.then(inst.two_cell(c, sig))
                maps.append(m)
        except EndpointMismatch as exc:
            self.fail(f"commutes=false evaluation error: {exc}")
        t1, t2 = maps[0].table(), maps[1].table()
        text = f"commutes={'true' if t1 == t2 else 'false'} path1: {_values(t1)} path2: {_values(t2)}"
        if t1 == t2:
            self.emit(text)
        else:
            self.fail(text)

    def do_Same(self, st: Same):
        if st.instance is None:
            a, b = normalize(st.lhs, self.sig), normalize(st.rhs, self.sig)
            ta, tb = nf_text(a), nf_text(b)
        else:
            inst = self.instance(st.instance)
            a, b = eval_one_cell(st.lhs, inst), eval_one_cell(st.rhs, inst)
            ta, tb = value_text(a), value_text(b)
        if a == b:
            self.emit(f"same: {ta}")
        else:
            self.fail(f"different: {ta} vs {tb}")

    def do_Roundtrip(self, st: Roundtrip):
        nf = normalize(st.expr, self.sig)
        back = normalize(embed(nf), self.sig)
        if back == nf:
            self.emit(f"ok: {nf_text(nf)}")
        else:
            self.fail(f"round trip broke: {nf_text(nf)} came back as {nf_text(back)}")

    def do_Iso(self, st: Iso):
        from ..verify.suites import iso_ok
        c = canonical_iso(st.expr, self.sig)
        if iso_ok(st.expr, self.sig):
            self.emit(f"ok: {expr_text(st.expr)} => {expr_text(embed(normalize(st.expr, self.sig)))}")
        else:
            from ..cells import cell_text
            self.fail(f"canonical isomorphism is wrong: {cell_text(c)}")

    def do_Oracle(self, st: Oracle):
        from ..verify.oracle import RewriteOracle
        nf = normalize(st.expr, self.sig)
        _, _, strings = RewriteOracle(self.sig).flatten(st.expr)
        ours = tuple(m.gens for m in nf.monomials)
        if strings == ours:
            self.emit(f"agree: {nf_text(nf)}")
        else:
            self.fail(f"disagree: normalize gives {list(ours)}, rewriting gives {list(strings)}")

    def do_LeftDist(self, st: LeftDist):
        from ..normalize import strict_compose, strict_sum
        from ..verify.suites import left_distributivity_holds
        sig = self.sig
        x, y, z = (normalize(e, sig) for e in (st.x, st.y, st.z))
        lhs = strict_compose(x, strict_sum(y, z))
        rhs = strict_sum(strict_compose(x, y), strict_compose(x, z))
        text = f"x o (y + z) = {nf_text(lhs)}; x o y + x o z = {nf_text(rhs)}"
        if left_distributivity_holds(x, y, z, literal=not st.corrected):
            self.emit(f"holds: {text}")
        else:
            self.fail(f"fails: {text}")

    def _depth(self, options: dict, kind: str) -> int:
        if "depth" in options:
            return options["depth"]
        if self.opts.depth is not None:
            return self.opts.depth
        env = os.environ.get(DEPTH_ENV)
        if env:
            return int(env)
        return DEFAULT_DEPTHS[kind]

    def _seed(self, options: dict) -> int:
        if "seed" in options:
            return options["seed"]
        return self.opts.seed if self.opts.seed is not None else 0

    def do_Suite(self, st: Suite):
        from ..verify import suites
        opts = dict(st.options)
        seed = self._seed(opts)
        if st.kind == "pc":
            report = suites.pc_axiom_suite(self.sig, self._depth(opts, "pc"), seed,
                                           extended=opts.get("extended", False),
                                           semantics=self.opts.semantics)
        elif st.kind == "strict":
            report = suites.strictification_suite(self.sig, self._depth(opts, "strict"), seed=seed)
        else:
            samples = opts.get("samples", DEFAULT_SAMPLES)
            target = self.instances[st.target] if st.target else None
            if isinstance(target, SemiringInstance):
                report = suites.instance_axiom_suite(target, samples, seed, sig=self.sig)
            else:
                model = target.model if target is not None else (self.opts.span_model or DEFAULT_MODEL)
                report = suites.span_suite(model, samples, seed)
        text = json.dumps(report.to_json(), indent=None)
        if report.passed:
            self.emit(text)
        else:
            self.fail(text)

    def do_Eval(self, st: Eval):
        value = eval_one_cell(st.expr, self.instance(st.instance))
        self.emit(value_text(value))

    def do_StrictifyReport(self, st: StrictifyReport):
        from ..verify.enumerate import iter_exprs
        from ..verify.suites import _iso_ok
        sig = self.sig
        depth = self._depth(dict(st.options), "strictify-report")
        n = iso_good = 0
        nfs = set()
        for e in iter_exprs(sig, depth):
            n += 1
            nf = normalize(e, sig)
            nfs.add(nf)
            iso_good += _iso_ok(e, nf, sig)
        trips = sum(normalize(embed(nf), sig) == nf for nf in nfs)
        lines = [f"expressions: {n} (depth <= {depth})",
                 f"normal forms: {len(nfs)}",
                 f"normalize(embed(nf)) = nf: {trips}/{len(nfs)}",
                 f"canonical isomorphisms with identity position map: {iso_good}/{n}"]
        text = "\n".join(lines)
        if trips == len(nfs) and iso_good == n:
            self.emit(text)
        else:
            self.fail(text)


def value_text(v) -> str:
    """Instance values: numbers as is, spans as ``{apex: left -> right, ...}``."""
    from ..verify.suites import value_text as vt
    if isinstance(v, SpanCell):
        return "{" + ", ".join(f"{vt(p)}: {vt(l)} -> {vt(r)}"
                               for p, l, r in zip(v.apex.elements, v.left_leg, v.right_leg)) + "}"
    try:
        return vt(v)
    except TypeError:
        return repr(v)


def _values(items) -> str:
    return "[" + ", ".join(value_text(x) for x in items) + "]"


def run_program(program: Program, out: TextIO | None = None, err: TextIO | None = None,
                options: RunOptions | None = None) -> int:
    return Runner(out or sys.stdout, err or sys.stderr, options or RunOptions()).run(program)


def run_text(text: str, out: TextIO | None = None, err: TextIO | None = None, *,
             as_json: bool = False, depth: int | None = None, seed: int | None = None,
             semantics: Semantics | None = None, span_model: SpanModel | None = None) -> int:
    """Parse and run ``text``; parse and resolve errors give status 2."""
    err = err or sys.stderr
    try:
        program = parse_program(text)
    except (ParseError, ResolveError, SmcError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return INVALID
    return run_program(program, out, err, RunOptions(as_json, depth, seed, semantics, span_model))
