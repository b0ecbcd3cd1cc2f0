"""Exact toolkit for generic decompositions, cones of g-vectors and
τ-tilting fans of bound quiver algebras."""

from .algebra import (Arrow, BoundQuiverAlgebra, PathWord, Quiver, Relation,
                      build_algebra, builtin_algebra, load_algebra, parse_algebra)
from .cones import (RationalCone, boundary_faces, cone_from_generators, contains,
                    equal_cones, in_relative_interior, is_simplicial, span_dimension)
from .errors import GConesError
from .presentations import (TwoTermPresentation, decompose_presentation, e_invariant,
                            generic_decomposition, ind_set, is_tame, sample_presentation)
from .stability import build_catalog, tf_equivalent_probe, tf_signature, w_space_estimate
from .tau_tilting import chamber_fan, enumerate_tau_tilting, fan_covering_check, mutate
from .tf_probe import (cone_of_multiples, dimension_report, interior_membership_probe,
                       ray_condition_proxy, reduced_version, tame_part)

__version__ = "0.1.0"
