"""Recursive-descent parser with name resolution.

Grammar (``;`` terminates every statement, ``#`` starts a comment)::

    stmt   := '0cells' NAME+ | '1cell' NAME ':' NAME '->' NAME
            | '2cell' NAME ':' expr '=>' expr
            | 'set' NAME '=' '{' values '}'
            | 'span' NAME ':' NAME '->' NAME '=' '{' [value ':' value '->' value, ...] '}'
            | 'spanmap' NAME ':' NAME '=>' NAME '=' '{' [value '->' value, ...] '}'
            | 'instance' NAME '=' (nlit | 'span' '{' [NAME ':' NAME, ...] '}')
            | 'normalize' expr | 'roundtrip' expr | 'iso' expr | 'oracle' expr
            | 'check' path '==' path ['in' iref] | 'same' expr '==' expr ['in' iref]
            | 'leftdist' expr ',' expr ',' expr ['--corrected']
            | 'suite' ('pc' | 'strict' | 'instance' [NAME]) option*
            | 'eval' expr 'in' iref | 'strictify-report' option*
    expr   := term ('+' term)*          term := atom ('*' atom)*
    atom   := NAME | '1' '@' NAME | '0' '@' NAME '->' NAME | '(' expr ')'
    path   := '[' cell (',' cell)* ']'
    cell   := cterm ('+' cterm)*        cterm := catom ('*' catom)*
    catom  := '(' cell ')' | NAME | NAME '(' args ')'
    iref   := NAME | nlit               nlit := 'N' '{' [NAME '=' INT, ...] '}'
    option := '--' NAME [INT]

Names resolve against the declarations seen so far; a program that declares
no 0-cells before its first use of a name works over the default signature.
"""

from __future__ import annotations

from ..cells import (SURFACE_NAMES, Gen2, HComp2, Id2, Inv, NullL, NullR,
                     SumCells, TwoCellExpr, VComp)
from ..core import (Gen, HComp, IdUnit, OneCellExpr, Signature, Sum, ZeroUnit,
                    default_signature, endpoints, make_signature)
from ..errors import ParseError, ResolveError
from .lexer import Token, tokenize
from .syntax import (Check, Eval, InstanceDecl, Iso, LeftDist, Normalize,
                     OneCellDecl, Oracle, Pos, Program, Roundtrip, Same,
                     SemiringLit, SetDecl, SpanDecl, SpanLit, SpanMapDecl,
                     StrictifyReport, Suite, TwoCellDecl, ZeroCells)

COMMANDS = ("0cells", "1cell", "2cell", "set", "span", "spanmap", "instance", "normalize",
            "check", "same", "roundtrip", "iso", "oracle", "leftdist", "suite", "eval",
            "strictify-report")

_ARITY = {"assoc": 3, "lunit": 1, "runit": 1, "addassoc": 3, "addunitl": 1, "addunitr": 1,
          "sym": 2, "distl": 3, "distr": 3}

SUITE_KINDS = ("pc", "strict", "instance")
OPTIONS = {"depth": int, "seed": int, "samples": int, "extended": bool}


class Scope:
    """Names declared so far, and the signature they form."""

    def __init__(self):
        self.zero_cells: list[str] = []
        self.gen1: dict[str, tuple[str, str]] = {}
        self.gen2: dict[str, tuple[OneCellExpr, OneCellExpr]] = {}
        self.sets: set[str] = set()
        self.spans: set[str] = set()
        self.maps: set[str] = set()
        self.instances: set[str] = set()
        self._sig: Signature | None = None

    @property
    def declared(self) -> bool:
        return bool(self.zero_cells or self.gen1 or self.gen2)

    def signature(self) -> Signature:
        if self._sig is None:
            self._sig = (make_signature(self.zero_cells, self.gen1, self.gen2)
                         if self.declared else default_signature())
        return self._sig

    def touch(self) -> None:
        self._sig = None

    def taken(self, name: str) -> bool:
        return (name in self.zero_cells or name in self.gen1 or name in self.gen2 or name in self.sets
                or name in self.spans or name in self.maps or name in self.instances)


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.scope = Scope()

    # -- token helpers --
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, message: str, *expected: str, tok: Token | None = None) -> ParseError:
        t = tok or self.tok
        return ParseError(message, t.line, t.column, expected)

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("SYM", "NAME", "INT") and t.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"unexpected {self._show(self.tok)}", repr(text))
        t = self.tok
        self.i += 1
        return t

    def name(self, what: str = "name") -> Token:
        t = self.tok
        if t.kind != "NAME":
            raise self.error(f"unexpected {self._show(t)}", what)
        self.i += 1
        return t

    def integer(self) -> int:
        t = self.tok
        if t.kind != "INT":
            raise self.error(f"unexpected {self._show(t)}", "integer")
        self.i += 1
        return int(t.text)

    @staticmethod
    def _show(t: Token) -> str:
        return "end of input" if t.kind == "EOF" else repr(t.text)

    def resolve_error(self, message: str, t: Token) -> ResolveError:
        return ResolveError(message, t.line, t.column)

    # -- program --
    def program(self) -> Program:
        out = []
        while self.tok.kind != "EOF":
            out.append(self.statement())
            self.expect(";")
            while self.at(";"):
                self.i += 1
        return Program(tuple(out))

    def statement(self):
        t = self.tok
        nxt = self.toks[self.i + 1]
        if t.kind == "INT" and t.text in ("0", "1", "2") and nxt.text == "cell" + "s" * (t.text == "0"):
            if (nxt.line, nxt.column) != (t.line, t.column + 1):
                raise self.error(f"write '{t.text}{nxt.text}' without a space", tok=nxt)
            word = t.text + nxt.text
            self.i += 2
        elif t.kind == "NAME":
            word = t.text
            self.i += 1
        else:
            raise self.error(f"unexpected {self._show(t)}", *COMMANDS)
        method = getattr(self, "st_" + word.replace("-", "_"), None)
        if method is None or word not in COMMANDS:
            raise self.error(f"unknown command {word!r}", *COMMANDS, tok=t)
        return method(Pos(t.line, t.column))

    # -- declarations --
    def fresh(self) -> Token:
        t = self.name()
        if self.scope.taken(t.text):
            raise self.resolve_error(f"{t.text!r} is already declared", t)
        return t

    def zero_cell(self) -> str:
        t = self.name("0-cell")
        if t.text not in self.scope.signature().zero_cells:
            raise self.resolve_error(f"unknown 0-cell {t.text!r}", t)
        return t.text

    def st_0cells(self, pos):
        names = []
        while self.tok.kind == "NAME":
            names.append(self.fresh().text)
            if names[-1] in names[:-1]:
                raise self.resolve_error(f"{names[-1]!r} is declared twice", self.toks[self.i - 1])
        if not names:
            raise self.error("0cells needs at least one name", "name")
        self.scope.zero_cells.extend(names)
        self.scope.touch()
        return ZeroCells(tuple(names), pos)

    def _declared_zero(self) -> str:
        t = self.name("0-cell")
        if t.text not in self.scope.zero_cells:
            raise self.resolve_error(f"unknown 0-cell {t.text!r}", t)
        return t.text

    def st_1cell(self, pos):
        name = self.fresh().text
        self.expect(":")
        src = self._declared_zero()
        self.expect("->")
        tgt = self._declared_zero()
        self.scope.gen1[name] = (src, tgt)
        self.scope.touch()
        return OneCellDecl(name, src, tgt, pos)

    def st_2cell(self, pos):
        name = self.fresh().text
        self.expect(":")
        if not self.scope.declared:
            raise self.resolve_error("declare 0-cells before 2-cells", self.tok)
        src = self.expr()
        self.expect("=>")
        tgt = self.expr()
        self.scope.gen2[name] = (src, tgt)
        self.scope.touch()
        return TwoCellDecl(name, src, tgt, pos)

    def value(self):
        t = self.tok
        if t.kind == "INT":
            self.i += 1
            return int(t.text)
        if t.kind == "NAME":
            self.i += 1
            return t.text
        if self.at("("):
            self.i += 1
            items = [self.value()]
            while self.at(","):
                self.i += 1
                items.append(self.value())
            self.expect(")")
            return tuple(items)
        raise self.error(f"unexpected {self._show(t)}", "name", "integer", "'('")

    def _braced(self, item):
        self.expect("{")
        out = []
        if not self.at("}"):
            out.append(item())
            while self.at(","):
                self.i += 1
                out.append(item())
        self.expect("}")
        return tuple(out)

    def _ref(self, table: set[str], what: str) -> str:
        t = self.name(what)
        if t.text not in table:
            raise self.resolve_error(f"unknown {what} {t.text!r}", t)
        return t.text

    def st_set(self, pos):
        name = self.fresh().text
        self.expect("=")
        elements = self._braced(self.value)
        self.scope.sets.add(name)
        return SetDecl(name, elements, pos)

    def st_span(self, pos):
        name = self.fresh().text
        self.expect(":")
        src = self._ref(self.scope.sets, "set")
        self.expect("->")
        tgt = self._ref(self.scope.sets, "set")
        self.expect("=")

        def entry():
            apex = self.value()
            self.expect(":")
            left = self.value()
            self.expect("->")
            return apex, left, self.value()

        entries = self._braced(entry)
        self.scope.spans.add(name)
        return SpanDecl(name, src, tgt, entries, pos)

    def st_spanmap(self, pos):
        name = self.fresh().text
        self.expect(":")
        source = self._ref(self.scope.spans, "span")
        self.expect("=>")
        target = self._ref(self.scope.spans, "span")
        self.expect("=")

        def pair():
            p = self.value()
            self.expect("->")
            return p, self.value()

        pairs = self._braced(pair)
        self.scope.maps.add(name)
        return SpanMapDecl(name, source, target, pairs, pos)

    def nlit(self) -> SemiringLit:
        self.expect("N")

        def binding():
            t = self.name("generator")
            if not self.scope.signature().has_gen(t.text):
                raise self.resolve_error(f"unknown 1-cell {t.text!r}", t)
            self.expect("=")
            return t.text, self.integer()

        return SemiringLit(self._braced(binding))

    def st_instance(self, pos):
        name = self.fresh().text
        self.expect("=")
        if self.at("N"):
            spec = self.nlit()
        elif self.at("span"):
            self.i += 1
            sig = self.scope.signature()

            def binding():
                key = self.name()
                self.expect(":")
                if key.text in sig.zero_cells:
                    return key.text, self._ref(self.scope.sets, "set")
                if sig.has_gen(key.text):
                    return key.text, self._ref(self.scope.spans, "span")
                if key.text in self.scope.gen2:
                    return key.text, self._ref(self.scope.maps, "span map")
                raise self.resolve_error(f"{key.text!r} is not a 0-cell, 1-cell or 2-cell", key)

            spec = SpanLit(self._braced(binding))
        else:
            raise self.error(f"unexpected {self._show(self.tok)}", "'N'", "'span'")
        self.scope.instances.add(name)
        return InstanceDecl(name, spec, pos)

    # -- commands --
    def iref(self):
        if self.at("N") and self.toks[self.i + 1].text == "{":
            return self.nlit()
        return self._ref(self.scope.instances, "instance")

    def optional_in(self):
        if self.at("in"):
            self.i += 1
            return self.iref()
        return None

    def st_normalize(self, pos):
        return Normalize(self.expr(), pos)

    def st_roundtrip(self, pos):
        return Roundtrip(self.expr(), pos)

    def st_iso(self, pos):
        return Iso(self.expr(), pos)

    def st_oracle(self, pos):
        return Oracle(self.expr(), pos)

    def st_check(self, pos):
        p1 = self.path()
        self.expect("==")
        p2 = self.path()
        return Check(p1, p2, self.optional_in(), pos)

    def st_same(self, pos):
        lhs = self.expr()
        self.expect("==")
        rhs = self.expr()
        return Same(lhs, rhs, self.optional_in(), pos)

    def st_leftdist(self, pos):
        x = self.expr()
        self.expect(",")
        y = self.expr()
        self.expect(",")
        z = self.expr()
        corrected = False
        if self.at("--"):
            self.i += 1
            self.expect("corrected")
            corrected = True
        return LeftDist(x, y, z, corrected, pos)

    def options(self):
        out = []
        while self.at("--"):
            self.i += 1
            t = self.name("option")
            kind = OPTIONS.get(t.text)
            if kind is None:
                raise self.error(f"unknown option --{t.text}", *(f"--{k}" for k in OPTIONS), tok=t)
            out.append((t.text, True if kind is bool else self.integer()))
        return tuple(out)

    def st_suite(self, pos):
        t = self.name("suite kind")
        if t.text not in SUITE_KINDS:
            raise self.error(f"unknown suite {t.text!r}", *SUITE_KINDS, tok=t)
        target = None
        if t.text == "instance" and self.tok.kind == "NAME":
            target = self._ref(self.scope.instances, "instance")
        return Suite(t.text, target, self.options(), pos)

    def st_eval(self, pos):
        e = self.expr()
        self.expect("in")
        return Eval(e, self.iref(), pos)

    def st_strictify_report(self, pos):
        return StrictifyReport(self.options(), pos)

    # -- expressions --
    def expr(self) -> OneCellExpr:
        out = self.term()
        while self.at("+"):
            self.i += 1
            out = Sum(out, self.term())
        return out

    def term(self) -> OneCellExpr:
        out = self.atom()
        while self.at("*"):
            self.i += 1
            out = HComp(out, self.atom())
        return out

    def atom(self) -> OneCellExpr:
        t = self.tok
        if self.at("("):
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "INT" and t.text in ("0", "1"):
            self.i += 1
            self.expect("@")
            a = self.zero_cell()
            if t.text == "1":
                return IdUnit(a)
            self.expect("->")
            return ZeroUnit(a, self.zero_cell())
        if t.kind == "NAME":
            self.i += 1
            if not self.scope.signature().has_gen(t.text):
                raise self.resolve_error(f"unknown 1-cell {t.text!r}", t)
            return Gen(t.text)
        raise self.error(f"unexpected {self._show(t)}", "1-cell name", "'1@'", "'0@'", "'('")

    # -- cells --
    def path(self) -> tuple[TwoCellExpr, ...]:
        self.expect("[")
        out = [self.cell()]
        while self.at(","):
            self.i += 1
            out.append(self.cell())
        self.expect("]")
        return tuple(out)

    def cell(self) -> TwoCellExpr:
        out = self.cterm()
        while self.at("+"):
            self.i += 1
            out = SumCells(out, self.cterm())
        return out

    def cterm(self) -> TwoCellExpr:
        out = self.catom()
        while self.at("*"):
            self.i += 1
            out = HComp2(out, self.catom())
        return out

    def catom(self) -> TwoCellExpr:
        t = self.tok
        if self.at("("):
            self.i += 1
            c = self.cell()
            self.expect(")")
            return c
        if t.kind != "NAME":
            raise self.error(f"unexpected {self._show(t)}", "2-cell", "'('")
        self.i += 1
        word = t.text
        if not self.at("("):
            if word in self.scope.gen2:
                return Gen2(word)
            raise self.resolve_error(f"unknown 2-cell {word!r}", t)
        self.i += 1
        if word == "id":
            out = Id2(self.expr())
        elif word == "inv":
            out = Inv(self.cell())
        elif word == "vcomp":
            later = self.cell()
            self.expect(",")
            out = VComp(later, self.cell())
        elif word in ("nulll", "nullr"):
            f = self.expr()
            if self.at(","):
                self.i += 1
                far = self.zero_cell()
            else:
                # default far end: the zero lands on f's near endpoint
                a, b = endpoints(f, self.scope.signature())
                far = b if word == "nulll" else a
            out = (NullL if word == "nulll" else NullR)(f, far)
        elif word in _ARITY:
            args = [self.expr()]
            for _ in range(_ARITY[word] - 1):
                self.expect(",")
                args.append(self.expr())
            out = SURFACE_NAMES[word](*args)
        else:
            raise self.error(f"unknown cell constructor {word!r}",
                             "id", "inv", "vcomp", *SURFACE_NAMES, tok=t)
        self.expect(")")
        return out


def parse_program(text: str) -> Program:
    """Parse and resolve ``text``; raises :class:`ParseError` or :class:`ResolveError`."""
    return Parser(text).program()


def parse_expr(text: str, sig: Signature | None = None) -> OneCellExpr:
    """Parse a lone 1-cell expression against ``sig`` (default signature if omitted)."""
    p = Parser(text)
    if sig is not None:
        p.scope._sig = sig
        p.scope.zero_cells = list(sig.zero_cells)
    e = p.expr()
    if p.tok.kind != "EOF":
        raise p.error(f"unexpected {p._show(p.tok)}", "'+'", "'*'", "end of input")
    return e
