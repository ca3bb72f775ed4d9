"""Exact symmetric functions with their biring and plethysm structure.

The ring is handled in five bases (m, e, h, p, s) with exact rational
coefficients. Co-operations, plethysm, the sign rule for co-negation and
a group-algebra oracle for Schur functors sit on top of it.
"""
from ._native import BACKEND
from .birig import TensorElem, antipode, co_one, co_zero, coaddition, comultiplication, verify_birig_axioms
from .characters import CharacterTable, char_table, kronecker_coeff, tensor_with_sign
from .config import degree_cap, get_cap, set_cap
from .errors import CapExceededError, DomainError, LambdaRingError, OracleInapplicableError, ParseError
from .expr import parse_expression
from .partitions import Partition, conjugate, partitions_of
from .plethysm import adams, plethysm, plethysm_oracle, verify_plethory
from .symfunc import SymFunc, add, e, eval_adams, eval_principal, expand_polynomial, h, lr_coeff, m, mul, p, s, to_basis

__all__ = [
    "BACKEND",
    "CapExceededError",
    "CharacterTable",
    "DomainError",
    "LambdaRingError",
    "OracleInapplicableError",
    "ParseError",
    "Partition",
    "SymFunc",
    "TensorElem",
    "adams",
    "add",
    "antipode",
    "char_table",
    "co_one",
    "co_zero",
    "coaddition",
    "comultiplication",
    "conjugate",
    "degree_cap",
    "e",
    "eval_adams",
    "eval_principal",
    "expand_polynomial",
    "get_cap",
    "h",
    "kronecker_coeff",
    "lr_coeff",
    "m",
    "mul",
    "p",
    "parse_expression",
    "partitions_of",
    "plethysm",
    "plethysm_oracle",
    "s",
    "set_cap",
    "tensor_with_sign",
    "to_basis",
    "verify_birig_axioms",
    "verify_plethory",
]
