"""Pretty-printer: ``parse_program(print_program(p)) == p``."""

from __future__ import annotations

from ..cells import cell_text
from ..core import expr_text
from ..verify.suites import value_text
from .syntax import (Check, Eval, InstanceDecl, Iso, LeftDist, Normalize, OneCellDecl, Oracle,
                     Program, Roundtrip, Same, SemiringLit, SetDecl, SpanDecl, SpanMapDecl,
                     StrictifyReport, Suite, TwoCellDecl, ZeroCells)


def _iref(ref) -> str:
    if isinstance(ref, SemiringLit):
        return "N{" + ", ".join(f"{k}={v}" for k, v in ref.assignment) + "}"
    return ref


def _in(ref) -> str:
    return "" if ref is None else f" in {_iref(ref)}"


def _path(path) -> str:
    return "[" + ", ".join(cell_text(c) for c in path) + "]"


def _options(options) -> str:
    return "".join(f" --{k}" if v is True else f" --{k} {v}" for k, v in options)


def statement_text(st) -> str:
    if isinstance(st, ZeroCells):
        return "0cells " + " ".join(st.names)
    if isinstance(st, OneCellDecl):
        return f"1cell {st.name}: {st.src} -> {st.tgt}"
    if isinstance(st, TwoCellDecl):
        return f"2cell {st.name}: {expr_text(st.src)} => {expr_text(st.tgt)}"
    if isinstance(st, SetDecl):
        return f"set {st.name} = {{{', '.join(value_text(v) for v in st.elements)}}}"
    if isinstance(st, SpanDecl):
        body = ", ".join(f"{value_text(p)}: {value_text(l)} -> {value_text(r)}" for p, l, r in st.entries)
        return f"span {st.name}: {st.src} -> {st.tgt} = {{{body}}}"
    if isinstance(st, SpanMapDecl):
        body = ", ".join(f"{value_text(p)} -> {value_text(q)}" for p, q in st.pairs)
        return f"spanmap {st.name}: {st.source} => {st.target} = {{{body}}}"
    if isinstance(st, InstanceDecl):
        if isinstance(st.spec, SemiringLit):
            return f"instance {st.name} = {_iref(st.spec)}"
        return f"instance {st.name} = span {{{', '.join(f'{k}: {v}' for k, v in st.spec.bindings)}}}"
    if isinstance(st, Normalize):
        return f"normalize {expr_text(st.expr)}"
    if isinstance(st, Check):
        return f"check {_path(st.path1)} == {_path(st.path2)}{_in(st.instance)}"
    if isinstance(st, Same):
        return f"same {expr_text(st.lhs)} == {expr_text(st.rhs)}{_in(st.instance)}"
    if isinstance(st, Roundtrip):
        return f"roundtrip {expr_text(st.expr)}"
    if isinstance(st, Iso):
        return f"iso {expr_text(st.expr)}"
    if isinstance(st, Oracle):
        return f"oracle {expr_text(st.expr)}"
    if isinstance(st, LeftDist):
        flag = " --corrected" if st.corrected else ""
        return f"leftdist {expr_text(st.x)}, {expr_text(st.y)}, {expr_text(st.z)}{flag}"
    if isinstance(st, Suite):
        target = f" {st.target}" if st.target else ""
        return f"suite {st.kind}{target}{_options(st.options)}"
    if isinstance(st, Eval):
        return f"eval {expr_text(st.expr)} in {_iref(st.instance)}"
    if isinstance(st, StrictifyReport):
        return f"strictify-report{_options(st.options)}"
    raise TypeError(f"not a statement: {st!r}")


def print_program(p: Program) -> str:
    return "".join(statement_text(st) + ";\n" for st in p.statements)
