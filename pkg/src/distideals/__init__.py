"""Exact computational toolkit for distance ideals of graphs.

Decides how many distance ideals of a graph are trivial, computes Smith
normal forms of distance matrices, scans graphs against the forbidden
atlas for the at-most-two-trivial-ideals family, and re-verifies every
computational claim behind that atlas.
"""

from .graphs import (AtlasEntry, DisconnectedGraphError, Graph, Graph6Error,
                     GraphError, atlas, atlas_names, complete,
                     complete_bipartite, contains_induced, cycle, diameter,
                     distance_matrix, emit_graph6, find_odd_hole,
                     induced_subgraph, is_connected, load_graphs,
                     parse_edge_list, parse_graph6, path,
                     FORBIDDEN_FAMILY, LAMBDA1_OBSTRUCTIONS,
                     LAMBDA1_RATIONAL_OBSTRUCTIONS, DIAMETER2_MEMBERS)
from .intlinalg import IntMatrix, SnfResult, delta, phi_unit_count, snf
from .poly import (InexactDivisionError, Polynomial, Ring, SymMatrix,
                   determinant, determinant_bareiss, divexact,
                   generalized_distance_matrix, iter_minors, minors,
                   submatrix_det)
from .groebner import (BudgetExceededError, GroebnerBasis, MonomialOrder,
                       contains_one, grevlex_order, ideal_equal,
                       integer_ideal_contains_one, lex_order,
                       rational_groebner, strong_groebner, strong_reduce)
from .certmatrices import (ERRATA, generator_set, matrix_info, matrix_names,
                           transcription_checksum, witness_matrix)
from .ideals import (InconclusiveError, PhiResult, TrivialityVerdict,
                     distance_ideal_generators, ideal_triviality,
                     lambda_membership, phi_over_rationals, phi_trivial_count,
                     rational_ideal_triviality, verdict_record)
from .scan import (ScanReport, canonical_form, canonical_graph,
                   enumerate_connected_graphs,
                   enumerate_connected_graphs_bitmask, enumerate_trees,
                   forbidden_scan, verify_forbidden_contrapositive,
                   verify_lambda1_characterizations)
from .harness import ConformanceReport, LemmaReport, run_all
