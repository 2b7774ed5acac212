"""Exact tropical (min-plus) linear spaces and valuated matroids.

Scalars are rationals plus infinity; nothing here ever rounds.  The
package computes tropical Stiefel images (min-plus maximal minors),
the regular matroid subdivisions they induce, transversality tests
with certificates, the distinguished apex data that coordinatizes the
fiber of the Stiefel map, and valuated strict gammoids via min-weight
linkings in weighted digraphs.
"""

from .errors import (AllInfinite, CellNotFound, CountMismatch,
                     EmptyGroundSet, EmptyIntersection, EmptySupport,
                     InconsistentCell, InfiniteBase, NegativeCycle,
                     NoBasis, NotAFlat, NotAMatroid, NotCyclicFlat,
                     NotMinimalMatching, NotTransversal,
                     NotTransversalFacets, OutOfDomain, PointOutsideL,
                     RankCollapse, TroplinError, WrongArity)
from .gammoid import (WeightedDigraph, digraph_from_presentation,
                      gammoid_valuation, linking_value,
                      stable_intersect_hyperplanes)
from .matroid import (CyclicFlatData, FlatLattice, Matroid, direct_sum,
                      uniform_matroid)
from .presentations import (DistinguishedData, DistinguishedEntry,
                            contract_presentation, distinguished,
                            has_transversal_facets, is_transversal_valuated,
                            presentation_fan_member,
                            presentation_space_member, r0_member,
                            rinf_member, sample_presentation,
                            verify_presentation)
from .transversal import (beta_solutions, is_pseudopresentation,
                          is_transversal, max_presentation,
                          transversal_matroid, verify_set_presentation)
from .trop import (INF, min_assignment, normalize_point, relsupp, stiefel,
                   stiefel_domain_witness, trop_cone_sample, trop_minor,
                   zoom)
from .valuated import (CellComplex, SubdivisionCell, ValuatedMatroid,
                       cell_complex, cell_vertex, check_pluecker,
                       hyperplane, initial_matroid, maximal_cells,
                       membership, stable_intersection, stable_sum,
                       v_contract, v_dual, v_restrict)

__version__ = "0.1.0"
