"""Computable models of lattice-ordered permutation groups.

Two model families are provided: PL automorphisms of Q with bounded
support (:mod:`lperm.pl`) and finite wreath towers of Z and PL components
(:mod:`lperm.wreath`).  On top sit blocks and spines (:mod:`lperm.blocks`),
a first-order formula language (:mod:`lperm.formula`), a bounded
three-valued evaluator (:mod:`lperm.evaluator`) and explicit witness
constructions (:mod:`lperm.constructions`).
"""

from .blocks import (
    OBlock,
    Spine,
    coloured_chain,
    hypothesis_report,
    irreducible_block,
    minimal_abelian,
    rst_member,
    spine,
    st_member,
)
from .constructions import Lemma31Instance, example_nc_decide, lemma31_witnesses, spine_order_props
from .ef import ef_brute_force, ef_equiv
from .evaluator import SearchBudget, TruthValue, cross_validate, enumerate_elements, evaluate, gamma_oracle
from .formula import FormulaSyntaxError, paper_formula, parse, print_formula, relativize
from .order import Interval, IntervalSet
from .pl import PLMap, PLQGroup, PreconditionError, pl_interpolate, pl_is_irreducible, pl_support
from .wreath import ChainSpec, RepresentabilityError, WreathElement, WreathGroup, wreath

__version__ = "0.1.0"

__all__ = [
    "ChainSpec", "FormulaSyntaxError", "Interval", "IntervalSet", "Lemma31Instance", "OBlock",
    "PLMap", "PLQGroup", "PreconditionError", "RepresentabilityError", "SearchBudget", "Spine",
    "TruthValue", "WreathElement", "WreathGroup", "coloured_chain", "cross_validate",
    "ef_brute_force", "ef_equiv", "enumerate_elements", "evaluate", "example_nc_decide",
    "gamma_oracle", "hypothesis_report", "irreducible_block", "lemma31_witnesses",
    "minimal_abelian", "paper_formula", "parse", "pl_interpolate", "pl_is_irreducible",
    "pl_support", "print_formula", "relativize", "rst_member", "spine", "spine_order_props",
    "st_member", "wreath",
]
