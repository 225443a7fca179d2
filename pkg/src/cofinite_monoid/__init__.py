"""Exact arithmetic in the inverse monoid of co-finite, almost monotone,
injective partial selfmaps of the positive integers."""
from .bicyclic import BicyclicWord, embed, projection_idempotent, recognize, word_mul
from .codec import decode, encode
from .core import (
    IDENTITY,
    PI,
    SIGMA,
    PartialBijection,
    Profile,
    apply,
    canonicalize,
    compose,
    dom,
    equals,
    eventual_shift,
    invert,
    is_idempotent,
    is_monotone_member,
    random_element,
    ran,
)
from .errors import InjectivityViolation, InvalidElement, NonPositiveValue, ParseError
from .expr import eval_expr
from .perms import FinPermutation, Parity
from .sets import CofiniteSet, FiniteSet

__all__ = [
    "BicyclicWord", "CofiniteSet", "FinPermutation", "FiniteSet", "IDENTITY",
    "InjectivityViolation", "InvalidElement", "NonPositiveValue", "PI", "Parity",
    "ParseError", "PartialBijection", "Profile", "SIGMA", "apply", "canonicalize",
    "compose", "decode", "dom", "embed", "encode", "equals", "eval_expr",
    "eventual_shift", "invert", "is_idempotent", "is_monotone_member",
    "projection_idempotent", "ran", "random_element", "recognize", "word_mul",
]
