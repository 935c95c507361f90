"""Acceptance criteria 1-12, each at its stated bound.

Every test records one PASS/FAIL line (printed in the terminal summary).
Run alone with ``pytest tests/test_acceptance.py -v``; the full file takes
several minutes on one core.
"""

import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from acceptance_log import record
from smcstrict.core import default_signature, standard_signature
from smcstrict.instances import (DEFAULT_MODEL, PermCatInstance, eta_violations, functor_sum,
                                 functor_sum_chain, padded, reversal, strictly_unitalize,
                                 substitution)
from smcstrict.verify import (IdentityDistL, RewriteOracle, SwappedPairModel, clear_caches,
                              instance_axiom_suite, left_distributivity_suite, oracle_agrees,
                              pc_axiom_suite, random_expr, replay, semiring_suite, span_suite,
                              strict_law_suite, strictification_suite, transport_suite)

pytestmark = pytest.mark.acceptance

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def fresh_caches():
    clear_caches()
    yield
    clear_caches()


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_01_strict_laws():
    r, s = _timed(lambda: strict_law_suite(standard_signature(), max_monomials=4, max_len=3))
    ok = r.passed and s < 10
    record(1, "strict laws on bounded normal forms", ok,
           f"{r.cases} law instances, {r.failure_count} failures, limit 10 s", s)
    assert r.passed
    assert s < 10


def test_criterion_02_round_trips():
    def run():
        nfs = strictification_suite(standard_signature(), depth=0, max_monomials=4, max_len=3,
                                    parts="b")
        exprs = strictification_suite(default_signature(), depth=3, max_monomials=0, max_len=0,
                                      parts="b")
        return nfs, exprs
    (nfs, exprs), s = _timed(run)
    ok = nfs.passed and exprs.passed and s < 10
    record(2, "round trips", ok,
           f"{nfs.cases} bounded normal forms + {exprs.cases} distinct normal forms of depth<=3 "
           f"expressions, {nfs.failure_count + exprs.failure_count} failures, limit 10 s", s)
    assert nfs.passed and exprs.passed
    assert s < 10


def test_criterion_03_left_distributivity_literal():
    r, s = _timed(lambda: left_distributivity_suite(default_signature(), 2, literal=True))
    record(3, "left distributivity (statement as written)", r.passed,
           f"{r.cases} triples, {r.failure_count} counterexamples "
           f"(first: {r.failures[0].case if r.failures else '-'})", s)
    assert r.passed, f"{r.failure_count} counterexamples, e.g. {r.failures[0].case}"


def test_criterion_03_left_distributivity_corrected():
    r, s = _timed(lambda: left_distributivity_suite(default_signature(), 2, literal=False))
    record(3, "left distributivity (shuffle form)", r.passed,
           f"{r.cases} triples, {r.failure_count} counterexamples", s, part="b")
    assert r.passed


def test_criterion_04_pc_conditions():
    r, s = _timed(lambda: pc_axiom_suite(default_signature(), 1))
    ok = r.passed and s < 30
    record(4, "coherence conditions (i)-(v), depth<=1", ok,
           f"{r.cases} instances, {r.failure_count} failures, limit 30 s", s)
    assert r.passed
    assert s < 30


def test_criterion_05_oracle():
    def run():
        exhaustive = strictification_suite(default_signature(), depth=3, parts="e")
        sig = standard_signature()
        oracle = RewriteOracle(sig)
        rng = random.Random(0)
        bad = [e for e in (random_expr(sig, 5, rng) for _ in range(10_000))
               if not oracle_agrees(oracle, e)]
        return exhaustive, bad
    (ex, bad), s = _timed(run)
    ok = ex.passed and not bad
    record(5, "rewriting oracle agreement", ok,
           f"{ex.cases} depth<=3 expressions + 10000 random depth<=5, "
           f"{ex.failure_count + len(bad)} disagreements", s)
    assert ok


def test_criterion_06_canonical_iso():
    r, s = _timed(lambda: strictification_suite(default_signature(), depth=3, parts="c"))
    record(6, "canonical isomorphisms", r.passed,
           f"{r.cases} depth<=3 expressions, {r.failure_count} failures", s)
    assert r.passed


def test_criterion_07_span_model():
    def run():
        return (instance_axiom_suite(DEFAULT_MODEL, 1000, seed=0, max_size=4),
                transport_suite(200, seed=0, max_size=4))
    (axioms, transport), s = _timed(run)
    ok = axioms.passed and transport.passed and s < 60
    record(7, "spans of finite sets", ok,
           f"{axioms.cases} checks over 1000 samples + {transport.cases} transported diagrams, "
           f"{axioms.failure_count + transport.failure_count} failures, limit 60 s", s)
    assert axioms.passed and transport.passed
    assert s < 60


def test_criterion_08_semiring_model():
    r, s = _timed(lambda: semiring_suite(10_000, seed=0, max_value=9))
    record(8, "natural-number semiring", r.passed,
           f"{r.cases} random expressions, {r.failure_count} failures", s)
    assert r.passed


P3 = PermCatInstance(("x", "y"), frozenset({"z"}))


def test_criterion_09_strictly_unitalize():
    def run():
        objects = P3.objects(3)
        problems = []
        inputs = {"padded reversal": padded(reversal(P3), "z"),
                  "padded substitution": padded(substitution(P3, P3, {"x": ("y", "x"), "y": ("y",),
                                                                      "z": ()}), "z")}
        for name, phi in inputs.items():
            out = strictly_unitalize(phi, P3.objects(2))
            psi = out.functor
            if not psi.strictly_unital:
                problems.append(f"{name}: result not strictly unital")
            problems += [f"{name}: {v}" for v in eta_violations(out, phi, objects)]
            problems += [f"{name}: {v}" for v in psi.violations(P3.objects(2), objects)]
        return problems
    problems, s = _timed(run)
    record(9, "strict unitalization", not problems,
           f"2 input functors, objects of length<=3, {len(problems)} violations", s)
    assert not problems, problems[:5]


def _transposition(P, start, mid):
    swap = {0: 0, 1: 2, 2: 1, 3: 3}
    return P.morphism(start, mid, [(i, swap[i]) for i in P.visible(start)])


def test_criterion_10_functor_sum():
    def run():
        letters = P3.letters + tuple(P3.null_letters)
        functors = {
            "identity": substitution(P3, P3, {a: (a,) for a in letters}),
            "swap": substitution(P3, P3, {"x": ("y",), "y": ("x",), "z": ("z",)}),
            "reversal": reversal(P3),
        }
        problems, chains = [], 0
        for fname, F in functors.items():
            for gname, G in functors.items():
                for x in letters:
                    for y in letters:
                        steps = functor_sum_chain(F, G, (x,), (y,))
                        chains += 1
                        quad = F.obj((x,)) + G.obj((x,)) + F.obj((y,)) + G.obj((y,))
                        mid = F.obj((x,)) + F.obj((y,)) + G.obj((x,)) + G.obj((y,))
                        if steps[1] != _transposition(P3, quad, mid):
                            problems.append(f"{fname}+{gname} at {x},{y}: swap step")
                        if P3.then(*steps) != P3.then(steps[1], steps[3]):
                            problems.append(f"{fname}+{gname} at {x},{y}: chain")
                S = functor_sum(F, G)
                if not S.strictly_unital:
                    problems.append(f"{fname}+{gname}: not strictly unital")
                for x in P3.objects(2):
                    fx = S.obj(x)
                    if S.structure((), x) != P3.identity(fx) or S.structure(x, ()) != P3.identity(fx):
                        problems.append(f"{fname}+{gname}: unit structure at {x}")
                problems += [f"{fname}+{gname}: {v}" for v in S.violations(P3.objects(2))]
        return problems, chains
    (problems, chains), s = _timed(run)
    record(10, "functor sums", not problems,
           f"{chains} singleton chains, 9 sums checked for strict units, {len(problems)} failures", s)
    assert not problems, problems[:5]


def test_criterion_11_mutants_are_caught():
    def run():
        out = {}
        distl = pc_axiom_suite(default_signature(), 0, semantics=IdentityDistL())
        out["identity-distl"] = (not distl.passed
                                 and replay(distl.failures[0].reproducer, semantics=IdentityDistL())
                                 and not replay(distl.failures[0].reproducer))
        pairs = span_suite(SwappedPairModel(), samples=100, seed=0)
        out["swapped-pair"] = (not pairs.passed
                               and replay(pairs.failures[0].reproducer, model=SwappedPairModel())
                               and not replay(pairs.failures[0].reproducer))
        return out
    caught, s = _timed(run)
    ok = all(caught.values())
    record(11, "mutation sentinels", ok,
           ", ".join(f"{k} {'caught' if v else 'MISSED'}" for k, v in caught.items()), s)
    assert ok


def test_criterion_12_cli_contract():
    def run():
        problems, n = [], 0
        for src in sorted(GOLDEN.glob("*.smc")):
            proc = subprocess.run([sys.executable, "-m", "smcstrict", str(src)],
                                  capture_output=True)
            n += 1
            if proc.stdout != src.with_suffix(".out").read_bytes():
                problems.append(f"{src.stem}: stdout differs")
            if proc.returncode != int(src.with_suffix(".code").read_text()):
                problems.append(f"{src.stem}: exit {proc.returncode}")
        expected = {"check_pass": 0, "check_fail": 1, "parse_error": 2}
        for stem, code in expected.items():
            if int((GOLDEN / f"{stem}.code").read_text()) != code:
                problems.append(f"{stem}: fixture does not pin exit {code}")
        return problems, n
    (problems, n), s = _timed(run)
    record(12, "command-line golden corpus", not problems,
           f"{n} programs byte-exact, exit codes 0/1/2 pinned, {len(problems)} problems", s)
    assert not problems, problems
