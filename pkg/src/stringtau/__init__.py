"""τ-tilting theory of string algebras through string combinatorics.

The main entry points are :func:`build_hasse` for the full classification of a
string algebra and :func:`oracle_cross_check` for an independent homological
verification of the combinatorial predicates.
"""
from .enumeration import (CompletionCountMismatch, EnumerationConfig, HassePoset, LengthCapExceeded,
                          SupportTauTiltingPair, build_hasse, mutation_completions, order_leq,
                          rigid_objects, support_tau_tilting_pairs)
from .homoracle import (TwoTermComplex, hom_shift_vanishes, oracle_cross_check, oracle_support_vanishes,
                        presentation_complex, shift_hom_matrix)
from .presentation import (AlgebraError, AlgebraPresentation, Arrow, ParseError, Path, build_algebra,
                           load_algebra, parse_algebra, validate_string_algebra)
from .rigidity import RigidityConfig, RigidObject, compatible, is_c_rigid, is_self_rigid
from .strings import (IllegalWord, StringWord, canonical, enumerate_strings, factor_directed, g_vector,
                      hook_closure, intermediate_points, make_string, parse_display, render,
                      support_vertices)

__version__ = "0.1.0"
