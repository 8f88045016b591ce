"""Irreducibility checks for lattices acting on products of two trees."""

from .permcore import Permutation, PermGroup, parse_perm_list
from .vhdatum import analyze, parse_datum
from .verdict import theorem11_bound, theorem12_verdict

__all__ = [
    "Permutation",
    "PermGroup",
    "parse_perm_list",
    "analyze",
    "parse_datum",
    "theorem11_bound",
    "theorem12_verdict",
]

__version__ = "0.1.0"
