"""Linear relations over prime fields, the Leray functor, and Szymczak classes."""

from .canonical import InvariantFactors, Poly, invariant_factors, similar
from .classification import ClassTable, classify, enumerate_relations
from .field import Prime, Scalar
from .dynamics import LE, LM, EndoObject, LerayForm, gim, gker, leray
from .relation import (
    LinearRelation,
    bottom,
    compose,
    from_matrix,
    identity,
    image,
    inverse,
    power,
    preimage,
    to_matrix,
    top,
)
from .subspace import Subspace, enumerate_subspaces, span
from .szymczak import SzymClassLabel, oracle_szym_equiv, szym_equiv, szym_label

__version__ = "0.1.0"
