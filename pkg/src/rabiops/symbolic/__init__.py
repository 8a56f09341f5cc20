"""Exact normal-ordering algebra for one boson mode and one spin-1/2."""
from .coeff import Coeff
from .engine import DEFINITIONS, NAMES, commutator_sym, equal, is_zero, named, normal_order
from .parser import Atom, Comm, Expr, ParseError, comm, parse
from .rewrite import Canonical, normal_order_boson_word, normal_order_word

__all__ = [
    "Atom", "Canonical", "Coeff", "Comm", "DEFINITIONS", "Expr", "NAMES", "ParseError",
    "comm", "commutator_sym", "equal", "is_zero", "named", "normal_order",
    "normal_order_boson_word", "normal_order_word", "parse",
]
