"""Word-combinatorial invariants of torus two-bridge link groups.

Slopes, relator words, block sequences, small-cancellation checks,
annular fan diagrams, and the decision procedure for when two essential
simple loops on the bridge sphere are homotopic in the link complement,
together with independent conjugacy cross-examination.
"""

from .farey import (INFINITY, ONE, ZERO, ContinuedFraction, Slope,
                    cf_expand, cf_value, fundamental_intervals,
                    null_homotopic, orbit_equivalent_extended,
                    reduce_to_fundamental, tau)
from .words import (CyclicSequence, CyclicWord, cyclic_s_sequence,
                    free_reduce, inverse_word, is_alternating, reconstruct,
                    s_sequence)
from .relator import (Decomposition, RelatorBundle, ceil_star,
                      check_connection, decompose, floor_star, riley_word,
                      s_of_slope)
from .cancel import (SymmetrizedSet, check_C, check_T, enumerate_pieces,
                     maximal_n_pieces, min_piece_count, symmetrize)
from .diagram import (AnnularDiagram, PlanarMap, build_fan,
                      gauss_bonnet_check, is_pq_map, is_reduced_diagram,
                      layer_decomposition, validate_structure)
from .decide import (HomotopyVerdict, complement_cs, decide_homotopic,
                     partner_slope, partner_terms_check)
from .oracle import (OracleVerdict, SearchBudget, abelianization_separates,
                     finite_quotient_separates, witness_search)

__version__ = "0.1.0"
