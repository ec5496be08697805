"""Computations with automorphisms of spherically homogeneous rooted trees:
word problem, orders and orbits, reduced trees, and Engel conditions."""

from .autom import (GroupDef, Induced, LabelFn, Permutation, Recursive, Word, apply, commutator, conjugate,
                    in_rigid_stabilizer, label, level_permutation, parse_word, portrait, psi_n, section)
from .catalog import (GGSVector, finitary_element, finitary_group, ggs, grigorchuk, gupta_sidki, hanoi,
                      iterated_wreath_infinite_order, truncated_sylow)
from .engel import engel_commutator, engel_degree, left_engel_survey, liebeck_degree
from .orbitlab import fundamental_system, infinite_order_certificate, orbit, orbit_lengths, order_mod_level
from .reduce import induce, reduced_tree
from .tree import DegreeSequence
from .wordprob import ClosureBudget, OrderPolicy, equal, is_trivial, order

__version__ = "0.1.0"
