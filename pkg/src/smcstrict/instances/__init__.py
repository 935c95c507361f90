"""Concrete models: semirings, spans of finite sets, free permutative categories."""

from .permcat import (MonoidalFunctorData, PermCatInstance, PermMorphism,
                      UnitalizedFunctor, eta_violations, functor_sum,
                      functor_sum_chain, padded, reversal, strictly_unitalize,
                      substitution, tilde_tensor, tilde_tensor_objects)
from .semiring import SemiringInstance, eval_one_cell, eval_two_cell
from .span import (DEFAULT_MODEL, FinSetObj, SpanCell, SpanInstance, SpanMap,
                   SpanModel, empty_span, identity_span, span_compose, span_sum)

__all__ = [
    "SemiringInstance", "eval_one_cell", "eval_two_cell",
    "FinSetObj", "SpanCell", "SpanMap", "SpanModel", "SpanInstance", "DEFAULT_MODEL",
    "span_compose", "span_sum", "identity_span", "empty_span",
    "PermCatInstance", "PermMorphism", "MonoidalFunctorData", "UnitalizedFunctor",
    "strictly_unitalize", "eta_violations", "functor_sum", "functor_sum_chain",
    "substitution", "reversal", "padded", "tilde_tensor", "tilde_tensor_objects",
]
