"""catbound: exact caterpillar bounds for trees.

Two ways of flattening a tree into a caterpillar are covered: contracting
edges (every m-edge tree reaches a guaranteed size, with spiders extremal)
and taking induced subtrees after vertex removal (with stars of beautiful
branches extremal).  A segment-family duality maps both questions to
alternating paths through disjoint segments in convex position.
"""

from .contraction import (
    ContractionPlan,
    ContractionStep,
    build_spider,
    contract_to_caterpillar,
    contraction_guarantee,
    extremal_size_contraction,
    extremal_spider,
    max_caterpillar_by_contraction,
    max_edges_diameter_leaves,
)
from .duality import (
    AlternatingPath,
    GeometricRealization,
    PathReport,
    SegmentFamily,
    among_path,
    compatible_path,
    realize_coordinates,
    segments_to_tree,
    tree_to_segments,
    validate_path,
)
from .induced import (
    BeautifulProfile,
    CaterpillarWitness,
    beautiful_profile,
    beautiful_tree,
    branch_arity,
    branch_star_bound,
    extremal_branch_star,
    extremal_size_induced,
    format_table,
    induced_guarantee,
    induced_guarantee_reference,
    induced_guarantee_residue,
    max_branch_size,
    max_caterpillar,
    star_of_branches_size,
    tree_from_profile,
    very_hungry_max,
)
from .oracle import (
    FREE_TREE_COUNTS,
    CheckRecord,
    VerificationReport,
    branch_size_recurrence,
    brute_contraction_guarantee,
    brute_induced_guarantee,
    brute_max_caterpillar,
    free_trees,
    guarantee_change_points,
    tree_from_pruefer,
    verify_all,
)
from .render import render_segments, render_tree
from .trees import (
    CanonicalCode,
    RootedTree,
    Tree,
    TreeParseError,
    canonical_code,
    centroids,
    contract_edge,
    diameter,
    diameter_path,
    format_tree,
    is_caterpillar,
    is_spider,
    leaves,
    parse_tree,
    remove_vertices,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingPath",
    "BeautifulProfile",
    "CanonicalCode",
    "CaterpillarWitness",
    "CheckRecord",
    "ContractionPlan",
    "ContractionStep",
    "FREE_TREE_COUNTS",
    "GeometricRealization",
    "PathReport",
    "RootedTree",
    "SegmentFamily",
    "Tree",
    "TreeParseError",
    "VerificationReport",
    "among_path",
    "beautiful_profile",
    "beautiful_tree",
    "branch_arity",
    "branch_size_recurrence",
    "branch_star_bound",
    "brute_contraction_guarantee",
    "brute_induced_guarantee",
    "brute_max_caterpillar",
    "build_spider",
    "canonical_code",
    "centroids",
    "compatible_path",
    "contract_edge",
    "contract_to_caterpillar",
    "contraction_guarantee",
    "diameter",
    "diameter_path",
    "extremal_branch_star",
    "extremal_size_contraction",
    "extremal_size_induced",
    "extremal_spider",
    "format_table",
    "format_tree",
    "free_trees",
    "guarantee_change_points",
    "induced_guarantee",
    "induced_guarantee_reference",
    "induced_guarantee_residue",
    "is_caterpillar",
    "is_spider",
    "leaves",
    "max_branch_size",
    "max_caterpillar",
    "max_caterpillar_by_contraction",
    "max_edges_diameter_leaves",
    "parse_tree",
    "realize_coordinates",
    "remove_vertices",
    "render_segments",
    "render_tree",
    "segments_to_tree",
    "star_of_branches_size",
    "tree_from_profile",
    "tree_from_pruefer",
    "tree_to_segments",
    "validate_path",
    "verify_all",
    "very_hungry_max",
    "__version__",
]
