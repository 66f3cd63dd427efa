"""Exact classification of root lattices over totally real abelian fields."""

from ._rootlat import (
    CycElem,
    Error,
    Field,
    chebyshev_q,
    classify,
    cyclotomic_unit,
    extend,
    gram_of_type,
    parse,
    qk,
    qk_dot,
    rank2_roots,
    root_count,
    roots_of_type,
    zeta,
    zeta_plus,
    zeta_power,
)

__all__ = [
    "CycElem",
    "Error",
    "Field",
    "chebyshev_q",
    "classify",
    "cyclotomic_unit",
    "extend",
    "gram_of_type",
    "parse",
    "qk",
    "qk_dot",
    "rank2_roots",
    "root_count",
    "roots_of_type",
    "zeta",
    "zeta_plus",
    "zeta_power",
]
