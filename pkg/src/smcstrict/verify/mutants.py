"""Deliberately broken models; each must be caught by some suite."""

from __future__ import annotations

from ..instances.span import SpanModel
from ..twocell import Semantics


class IdentityDistL(Semantics):
    """Left distributivity without its shuffle: the identity position map."""

    def _distl(self, c, sig):
        return range(len(self._nf(c.f, sig).monomials) * (
            len(self._nf(c.g, sig).monomials) + len(self._nf(c.h, sig).monomials)))


class SwappedPairModel(SpanModel):
    """Span composition that builds apex pairs as ``(outer, inner)``."""

    def pair(self, x, y):
        return (y, x)


MUTANTS = {"identity-distl": IdentityDistL, "swapped-pair": SwappedPairModel}
