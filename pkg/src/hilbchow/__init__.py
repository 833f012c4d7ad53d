"""Equivariant Chow rings of Hilbert schemes of points on smooth toric surfaces.

The ring ``A_T^*(S^[d])`` is computed inside ``Q[t1, t2]^{fixed points}`` by
localisation: its image is the intersection, over the codimension-one
subtori ``T'``, of the images of the ``T'``-fixed loci, and each component of
such a locus is a product of graded Hilbert schemes and projective spaces.
"""

from .polynomial import (Character, Polynomial, complete_basis, divisible_by_linear_power, elementary_symmetric,
                         linear_form, linear_valuation)
from .linalg import Echelon, kernel, rank, rref
from .module import GradedSubmodule, GradedVector, piece_equal, piece_intersection, piece_membership, quotient_betti
from .staircase import (CleftCouple, ReversePlanePartition, Staircase, WeightedHilbertFunction, cleft_couples,
                        clefts, complement, complement_in_box, enumerate_ideals_with_hilbert_function,
                        enumerate_staircases, incidence_necessary, linkage, tangent_characters,
                        weighted_hilbert_function)
from .toric import Subtorus, ToricSurface, build_surface, fixed_locus
from .fixed_points import (HilbFixedPoint, TangentRep, betti_bb, enumerate_fixed_points, euler_class,
                           tangent_oracle, tangent_representation)
from .graded import GradedHilbModel, chern_generator, graded_hilbert_model, module_M
from .assembly import (ComponentModel, LineFactor, PointFactor, classical_betti, component_decomposition,
                       equivariant_chow, image_subtorus, kunneth_tensor, module_N, relevant_subtori)
from .relations import (CongruenceOracle, LabelMap, RelationSpec, SymmetryGroup, congruence_membership,
                        euler_classes, load_relations, relation_cut_module, verify_relations)

__version__ = "0.1.0"
