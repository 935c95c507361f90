"""Free permutative categories on letters and symmetric monoidal functors between them.

Objects are tuples of letters, tensor is concatenation and the unit is
``()``.  A morphism is a letter-preserving bijection between the visible
positions of its endpoints.  Letters declared *null* are invisible to
morphisms, so ``("z",)`` is isomorphic to the unit when ``z`` is null; this
gives room for functors that are strong but not strictly unital.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

from ..errors import EndpointMismatch, InvalidFunctor

Obj = tuple


@dataclass(frozen=True)
class PermMorphism:
    """``pairs`` lists ``(source position, target position)`` sorted by source position."""

    src: Obj
    tgt: Obj
    pairs: tuple[tuple[int, int], ...]

    def image(self, i: int) -> int:
        return dict(self.pairs)[i]


@dataclass(frozen=True)
class PermCatInstance:
    letters: tuple[str, ...]
    null_letters: frozenset[str] = frozenset()

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("duplicate letters")
        if self.null_letters & set(self.letters):
            raise ValueError("a letter cannot be both visible and null")

    unit: Obj = field(default=(), init=False)

    # objects ---------------------------------------------------------------
    def is_object(self, x: Obj) -> bool:
        return isinstance(x, tuple) and all(a in self.letters or a in self.null_letters for a in x)

    def visible(self, x: Obj) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(x) if a not in self.null_letters)

    def objects(self, max_len: int, with_nulls: bool = True) -> list[Obj]:
        alphabet = self.letters + (tuple(sorted(self.null_letters)) if with_nulls else ())
        return [w for n in range(max_len + 1) for w in itertools.product(alphabet, repeat=n)]

    def tensor_obj(self, x: Obj, y: Obj) -> Obj:
        return x + y

    # morphisms -------------------------------------------------------------
    def morphism(self, src: Obj, tgt: Obj, pairs: Iterable[tuple[int, int]]) -> PermMorphism:
        pairs = tuple(sorted(pairs))
        vs, vt = self.visible(src), self.visible(tgt)
        if [i for i, _ in pairs] != list(vs) or sorted(j for _, j in pairs) != list(vt):
            raise EndpointMismatch(f"not a bijection of visible positions: {src} -> {tgt}")
        for i, j in pairs:
            if src[i] != tgt[j]:
                raise EndpointMismatch(f"position {i} ({src[i]}) sent to {j} ({tgt[j]})")
        return PermMorphism(src, tgt, pairs)

    def from_order(self, src: Obj, tgt: Obj) -> PermMorphism:
        """The bijection matching visible positions of ``src`` and ``tgt`` in order."""
        return self.morphism(src, tgt, zip(self.visible(src), self.visible(tgt)))

    def identity(self, x: Obj) -> PermMorphism:
        return self.from_order(x, x)

    def compose(self, later: PermMorphism, earlier: PermMorphism) -> PermMorphism:
        if earlier.tgt != later.src:
            raise EndpointMismatch("morphisms do not compose")
        table = dict(later.pairs)
        return PermMorphism(earlier.src, later.tgt, tuple((i, table[j]) for i, j in earlier.pairs))

    def then(self, *chain: PermMorphism) -> PermMorphism:
        """Compose morphisms listed in the order they are applied."""
        out = chain[0]
        for m in chain[1:]:
            out = self.compose(m, out)
        return out

    def inverse(self, m: PermMorphism) -> PermMorphism:
        return PermMorphism(m.tgt, m.src, tuple(sorted((j, i) for i, j in m.pairs)))

    def tensor(self, m1: PermMorphism, m2: PermMorphism) -> PermMorphism:
        ds, dt = len(m1.src), len(m1.tgt)
        return PermMorphism(m1.src + m2.src, m1.tgt + m2.tgt,
                            m1.pairs + tuple((i + ds, j + dt) for i, j in m2.pairs))

    def symmetry(self, x: Obj, y: Obj) -> PermMorphism:
        """Block transposition ``x + y -> y + x``."""
        n, m = len(x), len(y)
        pairs = [(i, m + i) for i in self.visible(x)] + [(n + j, j) for j in self.visible(y)]
        return self.morphism(x + y, y + x, pairs)

    def morphisms(self, x: Obj, y: Obj) -> Iterator[PermMorphism]:
        vs, vt = self.visible(x), self.visible(y)
        if len(vs) != len(vt):
            return
        for perm in itertools.permutations(vt):
            if all(x[i] == y[j] for i, j in zip(vs, perm)):
                yield PermMorphism(x, y, tuple(zip(vs, perm)))

    def isomorphic(self, x: Obj, y: Obj) -> bool:
        return next(self.morphisms(x, y), None) is not None

    def product(self, n: Obj, m: Obj) -> Obj:
        """Word product used by the truncated tensor: letters multiply by concatenating names."""
        return tuple(a + b for a in n for b in m)

    def law_violations(self, max_len: int = 3) -> list[str]:
        """Exhaustively check strictness, naturality of the symmetry and the hexagon."""
        out = []
        objs = self.objects(max_len)
        short = self.objects(min(max_len, 2))
        for x in objs:
            if self.tensor_obj(x, self.unit) != x or self.tensor_obj(self.unit, x) != x:
                out.append(f"unit law fails at {x}")
        for x, y in itertools.product(short, repeat=2):
            g = self.symmetry(x, y)
            if self.compose(self.symmetry(y, x), g) != self.identity(x + y):
                out.append(f"symmetry is not involutive at {x}, {y}")
            for z in short:
                if self.tensor_obj(self.tensor_obj(x, y), z) != self.tensor_obj(x, self.tensor_obj(y, z)):
                    out.append(f"tensor not associative at {x}, {y}, {z}")
                hexagon = self.then(self.tensor(self.symmetry(x, y), self.identity(z)),
                                    self.tensor(self.identity(y), self.symmetry(x, z)))
                if hexagon != self.symmetry(x, y + z):
                    out.append(f"hexagon fails at {x}, {y}, {z}")
        for x, y in itertools.product(short, repeat=2):
            for x2, y2 in itertools.product(short, repeat=2):
                for f in self.morphisms(x, x2):
                    for g in self.morphisms(y, y2):
                        lhs = self.then(self.tensor(f, g), self.symmetry(x2, y2))
                        rhs = self.then(self.symmetry(x, y), self.tensor(g, f))
                        if lhs != rhs:
                            out.append(f"symmetry not natural at {f}, {g}")
        return out


@dataclass(frozen=True)
class MonoidalFunctorData:
    """A symmetric strong monoidal functor between permutative instances.

    ``structure(x, y)`` is the comparison ``obj(x) + obj(y) -> obj(x + y)``
    and ``unit_iso`` is ``target.unit -> obj(source.unit)``.
    """

    source: PermCatInstance
    target: PermCatInstance
    obj: Callable[[Obj], Obj]
    mor: Callable[[PermMorphism], PermMorphism]
    structure: Callable[[Obj, Obj], PermMorphism]
    unit_iso: PermMorphism

    @property
    def strictly_unital(self) -> bool:
        u1, u2 = self.source.unit, self.target.unit
        return self.obj(u1) == u2 and self.unit_iso == self.target.identity(u2)

    def violations(self, objects: Sequence[Obj], morphism_objects: Sequence[Obj] | None = None) -> list[str]:
        """Pointwise functoriality, naturality and coherence checks on samples."""
        P1, P2 = self.source, self.target
        out: list[str] = []
        mobjs = objects if morphism_objects is None else morphism_objects
        mors = [f for x in mobjs for y in mobjs for f in P1.morphisms(x, y)]

        def eq(label, lhs, rhs):
            if lhs != rhs:
                out.append(label)

        def check(label, lhs, rhs):
            # thunks, so an ill-typed composite is reported instead of raised
            try:
                eq(label, lhs(), rhs())
            except EndpointMismatch as exc:
                out.append(f"{label}: {exc}")

        for x in objects:
            if not P2.is_object(self.obj(x)):
                out.append(f"obj({x}) is not an object of the target")
                continue
            fx, u1 = self.obj(x), P1.unit
            check(f"identity not preserved at {x}",
                  lambda: self.mor(P1.identity(x)), lambda: P2.identity(fx))
            check(f"left unit coherence fails at {x}",
                  lambda: P2.then(P2.tensor(self.unit_iso, P2.identity(fx)), self.structure(u1, x)),
                  lambda: P2.identity(fx))
            check(f"right unit coherence fails at {x}",
                  lambda: P2.then(P2.tensor(P2.identity(fx), self.unit_iso), self.structure(x, u1)),
                  lambda: P2.identity(fx))
            for y in objects:
                check(f"symmetry coherence fails at {x}, {y}",
                      lambda: P2.then(self.structure(x, y), self.mor(P1.symmetry(x, y))),
                      lambda: P2.then(P2.symmetry(fx, self.obj(y)), self.structure(y, x)))
                for z in objects:
                    check(f"associativity coherence fails at {x}, {y}, {z}",
                          lambda: P2.then(P2.tensor(self.structure(x, y), P2.identity(self.obj(z))),
                                          self.structure(x + y, z)),
                          lambda: P2.then(P2.tensor(P2.identity(fx), self.structure(y, z)),
                                          self.structure(x, y + z)))
        for f in mors:
            for g in mors:
                if f.tgt == g.src:
                    check(f"composition not preserved at {f}, {g}",
                          lambda: self.mor(P1.compose(g, f)),
                          lambda: P2.compose(self.mor(g), self.mor(f)))
                check(f"structure iso not natural at {f}, {g}",
                      lambda: P2.then(P2.tensor(self.mor(f), self.mor(g)), self.structure(f.tgt, g.tgt)),
                      lambda: P2.then(self.structure(f.src, g.src), self.mor(P1.tensor(f, g))))
        return out


# -- example functors ---------------------------------------------------------

def substitution(source: PermCatInstance, target: PermCatInstance,
                 table: Mapping[str, Obj]) -> MonoidalFunctorData:
    """The strict functor replacing each letter by a word; null letters must go to null words."""
    for a in source.null_letters:
        if target.visible(table[a]):
            raise InvalidFunctor(f"null letter {a!r} must map to a word of null letters")

    def obj(x: Obj) -> Obj:
        return tuple(b for a in x for b in table[a])

    def mor(f: PermMorphism) -> PermMorphism:
        starts_src = _block_starts(f.src, table)
        starts_tgt = _block_starts(f.tgt, table)
        pairs = []
        for i, j in f.pairs:
            word = table[f.src[i]]
            for k in target.visible(word):
                pairs.append((starts_src[i] + k, starts_tgt[j] + k))
        return target.morphism(obj(f.src), obj(f.tgt), pairs)

    return MonoidalFunctorData(source, target, obj, mor,
                               lambda x, y: target.identity(obj(x) + obj(y)),
                               target.identity(target.unit))


def _block_starts(x: Obj, table: Mapping[str, Obj]) -> list[int]:
    starts, pos = [], 0
    for a in x:
        starts.append(pos)
        pos += len(table[a])
    return starts


def reversal(P: PermCatInstance) -> MonoidalFunctorData:
    """``x -> reversed(x)``; strictly unital, with the block swap as structure iso."""
    def obj(x: Obj) -> Obj:
        return tuple(reversed(x))

    def mor(f: PermMorphism) -> PermMorphism:
        n, m = len(f.src), len(f.tgt)
        return P.morphism(obj(f.src), obj(f.tgt), [(n - 1 - i, m - 1 - j) for i, j in f.pairs])

    return MonoidalFunctorData(P, P, obj, mor, lambda x, y: P.symmetry(obj(x), obj(y)),
                               P.identity(P.unit))


def padded(F: MonoidalFunctorData, pad: str) -> MonoidalFunctorData:
    """Prefix every image with the null letter ``pad``: strong, but not strictly unital."""
    P2 = F.target
    if pad not in P2.null_letters:
        raise InvalidFunctor(f"padding letter {pad!r} must be null in the target")

    def obj(x: Obj) -> Obj:
        return (pad,) + F.obj(x)

    def mor(f: PermMorphism) -> PermMorphism:
        inner = F.mor(f)
        return PermMorphism(obj(f.src), obj(f.tgt), tuple((i + 1, j + 1) for i, j in inner.pairs))

    def structure(x: Obj, y: Obj) -> PermMorphism:
        fx, fy = F.obj(x), F.obj(y)
        drop = P2.from_order(obj(x) + obj(y), fx + fy)
        return P2.then(drop, F.structure(x, y), P2.from_order(F.obj(x + y), obj(x + y)))

    unit = P2.then(F.unit_iso, P2.from_order(F.obj(F.source.unit), obj(F.source.unit)))
    return MonoidalFunctorData(F.source, P2, obj, mor, structure, unit)


# -- operations -----------------------------------------------------------------

@dataclass(frozen=True)
class UnitalizedFunctor:
    functor: MonoidalFunctorData
    eta: Callable[[Obj], PermMorphism]


def strictly_unitalize(phi: MonoidalFunctorData, samples: Sequence[Obj] | None = None,
                       morphism_samples: Sequence[Obj] | None = None) -> UnitalizedFunctor:
    """Replace ``phi`` by a strictly unital functor ``psi`` with ``eta: psi => phi``.

    ``psi`` agrees with ``phi`` away from the unit and sends the unit to the
    unit; ``eta`` is ``phi``'s unit isomorphism at the unit and the identity
    elsewhere.  ``phi`` is checked on ``samples`` first.
    """
    P1, P2 = phi.source, phi.target
    if samples is not None:
        bad = phi.violations(samples, morphism_samples)
        if bad:
            raise InvalidFunctor(f"{len(bad)} coherence failures, first: {bad[0]}")
    u1, u2 = P1.unit, P2.unit

    def obj(x: Obj) -> Obj:
        return u2 if x == u1 else phi.obj(x)

    def eta(x: Obj) -> PermMorphism:
        return phi.unit_iso if x == u1 else P2.identity(phi.obj(x))

    def mor(f: PermMorphism) -> PermMorphism:
        return P2.then(eta(f.src), phi.mor(f), P2.inverse(eta(f.tgt)))

    def structure(x: Obj, y: Obj) -> PermMorphism:
        return P2.then(P2.tensor(eta(x), eta(y)), phi.structure(x, y), P2.inverse(eta(x + y)))

    return UnitalizedFunctor(MonoidalFunctorData(P1, P2, obj, mor, structure, P2.identity(u2)), eta)


def eta_violations(result: UnitalizedFunctor, phi: MonoidalFunctorData, objects: Sequence[Obj],
                   morphism_objects: Sequence[Obj] | None = None) -> list[str]:
    """Check ``eta: psi => phi`` is a natural monoidal isomorphism at the sampled points."""
    psi, eta = result.functor, result.eta
    P1, P2 = phi.source, phi.target
    out = []
    for x in objects:
        e = eta(x)
        if (e.src, e.tgt) != (psi.obj(x), phi.obj(x)):
            out.append(f"eta at {x} has the wrong endpoints")
            continue
        for y in objects:
            lhs = P2.then(psi.structure(x, y), eta(x + y))
            rhs = P2.then(P2.tensor(eta(x), eta(y)), phi.structure(x, y))
            if lhs != rhs:
                out.append(f"eta is not monoidal at {x}, {y}")
    if P2.then(psi.unit_iso, eta(P1.unit)) != phi.unit_iso:
        out.append("eta does not respect the unit isomorphisms")
    mobjs = objects if morphism_objects is None else morphism_objects
    for x in mobjs:
        for y in mobjs:
            for f in P1.morphisms(x, y):
                if P2.then(psi.mor(f), eta(y)) != P2.then(eta(x), phi.mor(f)):
                    out.append(f"eta is not natural at {f}")
    return out


def functor_sum_chain(F: MonoidalFunctorData, G: MonoidalFunctorData,
                      x: Obj, y: Obj) -> list[PermMorphism]:
    """The comparison ``(F+G)(x) + (F+G)(y) -> (F+G)(x+y)`` as four steps.

    Reassociate, swap the middle blocks, reassociate back, then apply both
    structure isomorphisms.  The reassociations are identities here.
    """
    P2 = F.target
    fx, gx, fy, gy = F.obj(x), G.obj(x), F.obj(y), G.obj(y)
    start = fx + gx + fy + gy
    swap = P2.tensor(P2.tensor(P2.identity(fx), P2.symmetry(gx, fy)), P2.identity(gy))
    mid = fx + fy + gx + gy
    return [P2.identity(start), swap, P2.identity(mid),
            P2.tensor(F.structure(x, y), G.structure(x, y))]


def functor_sum(F: MonoidalFunctorData, G: MonoidalFunctorData) -> MonoidalFunctorData:
    """Pointwise sum ``(F+G)(c) = F(c) + G(c)``."""
    if (F.source, F.target) != (G.source, G.target):
        raise InvalidFunctor("functors must be parallel to be added")
    P2 = F.target

    def structure(x: Obj, y: Obj) -> PermMorphism:
        return P2.then(*functor_sum_chain(F, G, x, y))

    return MonoidalFunctorData(
        F.source, P2,
        lambda x: F.obj(x) + G.obj(x),
        lambda f: P2.tensor(F.mor(f), G.mor(f)),
        structure,
        P2.tensor(F.unit_iso, G.unit_iso),
    )


def tilde_tensor(n: Any, m: Any, mul: Callable[[Any, Any], Any] = operator.mul, zero: Any = 0) -> Any:
    """``n (x) m`` except that a zero left factor gives zero on the nose."""
    return zero if n == zero else mul(n, m)


def tilde_tensor_objects(P: PermCatInstance, n: Obj, m: Obj) -> Obj:
    return tilde_tensor(n, m, P.product, P.unit)
