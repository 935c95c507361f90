import io
import json
import random
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from smcstrict.cells import DistL, Id2, Inv, LUnit, NullL, Sym, hcomp2, sumcells
from smcstrict.cli import main, parse_expr, parse_program, print_program, run_text
from smcstrict.cli.syntax import (Check, Eval, LeftDist, Normalize, Same, SemiringLit,
                                  StrictifyReport, Suite, ZeroCells)
from smcstrict.core import Gen, HComp, IdUnit, Sum, ZeroUnit, standard_signature
from smcstrict.errors import ParseError, ResolveError
from smcstrict.verify.enumerate import random_expr

GOLDEN = Path(__file__).parent / "golden"
CASES = sorted(p.stem for p in GOLDEN.glob("*.smc"))
STD = standard_signature()
STD_DECLS = "0cells a b c; 1cell f: a -> b; 1cell f': a -> b; 1cell g: b -> c; 1cell g': b -> c; 1cell h: a -> c;\n"


def run(text, **kw):
    out, err = io.StringIO(), io.StringIO()
    status = run_text(text, out, err, **kw)
    return status, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("case", CASES)
def test_golden(case):
    status, out, err = run((GOLDEN / f"{case}.smc").read_text())
    assert out == (GOLDEN / f"{case}.out").read_text()
    assert err == (GOLDEN / f"{case}.err").read_text()
    assert status == int((GOLDEN / f"{case}.code").read_text())


def test_parse_small_program():
    p = parse_program("0cells a b; 1cell f: a -> b; normalize (f + 0@a->b);")
    assert p.commands == (Normalize(Sum(Gen("f"), ZeroUnit("a", "b"))),)
    assert p.statements[0] == ZeroCells(("a", "b"))


def test_precedence_and_associativity():
    e = parse_expr("g * f + h * 1@a + h", STD)
    assert e == Sum(Sum(HComp(Gen("g"), Gen("f")), HComp(Gen("h"), IdUnit("a"))), Gen("h"))


def test_unknown_names():
    with pytest.raises(ResolveError) as info:
        parse_program("1cell f: a -> b;")
    assert "'a'" in str(info.value)
    with pytest.raises(ResolveError):
        parse_program(STD_DECLS + "normalize k;")
    with pytest.raises(ResolveError):
        parse_program(STD_DECLS + "eval f in Q;")


def test_parse_error_carries_position_and_expected_set():
    with pytest.raises(ParseError) as info:
        parse_program("normalize f +;")
    e = info.value
    assert (e.line, e.column) == (1, 14)
    assert e.expected
    with pytest.raises(ParseError):
        parse_program("normalize f")
    with pytest.raises(ParseError):
        parse_program("normalize f $ f;")


def test_ill_typed_expression_is_rejected():
    status, _, err = run(STD_DECLS + "normalize g + f;")
    assert status == 2 and "error" in err


def test_check_json_output():
    status, out, _ = run("check [sym(f, f)] == [id(f + f)];", as_json=True)
    assert status == 1
    assert json.loads(out) == {"commutes": False, "boundary": ["f + f", "f + f"],
                               "path1_perm": [1, 0], "path2_perm": [0, 1]}


def test_suite_pc_default_signature():
    status, out, _ = run("suite pc --depth 0;")
    report = json.loads(out)
    assert status == 0
    assert report["suite"] == "pc" and report["failures"] == [] and report["cases"] > 0


def test_depth_precedence(monkeypatch):
    def cases(text, **kw):
        return json.loads(run(text, **kw)[1])["cases"]

    base = cases("suite pc --depth 0;")
    monkeypatch.setenv("SMCSTRICT_DEPTH", "0")
    assert cases("suite pc;") == base
    monkeypatch.setenv("SMCSTRICT_DEPTH", "7")
    assert cases("suite pc;", depth=0) == base
    assert cases("suite pc --depth 0;", depth=5) == base


def test_worst_status_wins():
    status, out, _ = run("check [sym(f, f)] == [id(f + f)]; normalize f + f;")
    assert status == 1
    assert out.splitlines()[-1] == "f + f"


def test_leftdist_command():
    assert run("leftdist f + f, f, f;")[0] == 1
    assert run("leftdist f + f, f, f --corrected;")[0] == 0


def test_strictify_report():
    status, out, _ = run("strictify-report --depth 1;")
    assert status == 0
    assert len(out.splitlines()) == 4


def test_main_reads_files_and_stdin(tmp_path, capsys, monkeypatch):
    src = tmp_path / "p.smc"
    src.write_text("normalize f * (f + 1@a);")
    assert main([str(src)]) == 0
    assert capsys.readouterr().out == "f.f + f\n"
    monkeypatch.setattr(sys, "stdin", io.StringIO("check [sym(f, f)] == [id(f + f)];"))
    assert main(["-"]) == 1
    assert main([str(tmp_path / "missing.smc")]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "smcstrict", str(GOLDEN / "check_fail.smc")],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert proc.stdout == (GOLDEN / "check_fail.out").read_text()


# -- parse/print round trip over generated programs --------------------------------

def _cell(rng, depth=2):
    b_c = lambda: random_expr(STD, 1, rng, hom=("b", "c"))  # noqa: E731
    a_b = lambda: random_expr(STD, 1, rng, hom=("a", "b"))  # noqa: E731
    k = rng.randrange(7 if depth else 4)
    if k == 0:
        return Sym(b_c(), b_c())
    if k == 1:
        return DistL(b_c(), a_b(), a_b())
    if k == 2:
        return Id2(random_expr(STD, 2, rng))
    if k == 3:
        return NullL(a_b(), rng.choice("abc"))
    if k == 4:
        return Inv(_cell(rng, depth - 1))
    if k == 5:
        return hcomp2(Id2(b_c()), LUnit(a_b()))
    return sumcells(_cell(rng, depth - 1), _cell(rng, depth - 1))


def _statement(rng):
    e = lambda d=3: random_expr(STD, d, rng)  # noqa: E731
    k = rng.randrange(7)
    if k == 0:
        return Normalize(e())
    if k == 1:
        return Check(tuple(_cell(rng) for _ in range(rng.randint(1, 3))), (_cell(rng),))
    if k == 2:
        x = e()
        return Same(x, e(), SemiringLit((("f", rng.randrange(10)), ("g", 3))) if rng.random() < 0.5 else None)
    if k == 3:
        return LeftDist(e(2), e(2), e(2), rng.random() < 0.5)
    if k == 4:
        opts = tuple((o, rng.randrange(5)) for o in rng.sample(["depth", "seed", "samples"], rng.randint(0, 3)))
        return Suite(rng.choice(["pc", "strict"]), None, opts + ((("extended", True),) if rng.random() < 0.3 else ()))
    if k == 5:
        return Eval(e(), SemiringLit((("h", 1),)))
    return StrictifyReport((("depth", rng.randrange(4)),))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6))
def test_parse_print_round_trip(seed, n):
    rng = random.Random(seed)
    decls = parse_program(STD_DECLS).statements
    prog = type(parse_program(""))(decls + tuple(_statement(rng) for _ in range(n)))
    text = print_program(prog)
    assert parse_program(text) == prog
    assert print_program(parse_program(text)) == text
