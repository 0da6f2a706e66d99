"""Computing in the homomorphism order of finite relational structures."""

from .algebra import cycle, disjoint_sum, k1, path, product, top, transitive_tournament
from .classes import membership, tree_mappable
from .duality import dual_of_tree, duality_pair, gap_certificate, generalized_dual, verify_duality_bounded
from .enumeration import all_cores, all_structures, all_trees, all_trees_one_edge_per_kind
from .hom import (canonical_form, compare, core, core_of, count_homs, enumerate_homs, find_hom,
                  is_core, is_isomorphic)
from .model import (Structure, components, directed_shadow, incidence_graph, is_balanced,
                    is_connected, is_forest, is_tree, validate)
from .order import (antichain_from_duality, cutpoint_certificates, d_star, is_antichain,
                    is_maximal_antichain_bounded, is_small_bounded, split_antichain)

__version__ = "0.1.0"
