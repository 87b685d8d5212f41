"""Symbolic SL2 trace identities and character varieties of free and surface groups."""

from .engine import TraceEngine, quad_trace_formula, reduce_trace, triple_relation, ttt_identity_poly
from .poly import EPoly, Poly, resultant, trace_var
from .sl2 import SL2Mat, classify_conjugacy, random_sl2
from .words import Word, format_word, parse_word

__version__ = "0.1.0"
