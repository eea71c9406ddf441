"""Partition algebras, the dual symmetric inverse monoid, the rook monoid
and the Schur-Weyl type bimodule W_{k,n}, with exact arithmetic throughout."""

from .combinatorics import bell, generalized_bell, partitions_of, syt_list, vacillating_count
from .diagrams import Diagram, compose, d_mu, enumerate_diagrams, format_diagram, parse_diagram, vconcat
from .exactlinalg import DELTA, DeltaScalar
from .palgebra import AlgebraElement, SubalgebraSpec, multiply
from .reps import ModuleRep, dual_module, find_character_reduction, specht_module, standard_module
from .rook import GrothendieckVector, decompose_by_character, iterate_ind_res
from .wbimodule import WBasisVector, act_left, act_right, bitrace, w_basis

__version__ = "0.1.0"
