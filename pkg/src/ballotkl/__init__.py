"""Parabolic Kazhdan-Lusztig polynomials for (B_N, A_{N-1}) with unequal parameters.

Four independent routes compute the same polynomials:

* ``hecke``: canonical bases of the parabolic modules M^+ and M^-;
* ``ballot``: weighted tilings of skew diagrams by ballot strips;
* ``linkpattern``: a closed-form expansion of the M^- canonical basis;
* ``tree``: labellings of binary trees.

Strings over {1, 2} stand for cosets; ``eps`` is +1 or -1.
"""
from .ballot import enumerate_conf, q_polynomial, q_table
from .hecke import HeckeAction, canonical_basis, p_polynomial, p_table
from .laurent import CASE_A, Case, Laurent, T, TN, case_b
from .linkpattern import link_pattern, varpi, varpi_A, varpi_B
from .strings import MINUS, PLUS, all_strings, box_count, bruhat_leq, diagram, flip, skew
from .tree import build_tree, capacities, enumerate_labellings, r_polynomial

__version__ = "0.1.0"

__all__ = [
    "CASE_A", "Case", "HeckeAction", "Laurent", "MINUS", "PLUS", "T", "TN",
    "all_strings", "box_count", "bruhat_leq", "build_tree", "canonical_basis",
    "capacities", "case_b", "diagram", "enumerate_conf", "enumerate_labellings",
    "flip", "link_pattern", "p_polynomial", "p_table", "q_polynomial",
    "q_table", "r_polynomial", "skew", "varpi", "varpi_A", "varpi_B",
]
