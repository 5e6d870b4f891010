"""Alon-Tarsi numbers of signed graphs: exact expansion, orientation counting and certificates."""
from .core import SignedGraph, delete_edge, is_antibalanced, signed_subgraph, switch
from .limits import InternalError, InvalidArgumentError, ResourceLimitError, SignedATError
from .polynomial import SignedPolynomial, at_number_poly, coefficient, expand
from .orientation import (ImbalanceReport, Orientation, at_number_orient, coefficient_via_orientation,
                          count_by_outdegree, enumerate_eulerian, enumerate_special, eulerian_imbalance,
                          sigma_parity)
from .triangulation import (NearTriangulation, at5_certificate, fan_neighbors, find_outer_chord,
                            nice_orientation, triangulate_embedding, validate)
from .density import at_all_negative, bounded_outdegree_orientation, mad
from .coloring import (chromatic_number, figure2_instance, is_proper, list_color, palette,
                       refute_choosability, verify_claims)

__version__ = "0.1.0"
