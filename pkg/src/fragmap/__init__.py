"""fragmap: frequent-subgraph lattices, grouping and 2D co-occurrence maps."""

from .distance import (
    cluster_dist,
    dist,
    dist_parent_child,
    group_dist,
    pregroup_dist,
)
from .embedder import (
    EmbedConfig,
    EmbeddingModel,
    GroupDistanceSource,
    MatrixTargets,
    embed,
    init_model,
    rse,
    update_pair,
)
from .export import EdgeRender, RenderEdge, edges_at_threshold, export_csv, render_svg
from .graphs import (
    GraphDatabase,
    LabeledGraph,
    canonical_code,
    parse_graph_file,
    subgraph_isomorphic,
    write_graph_file,
)
from .lattice import Lattice, import_lattice, import_lattice_path
from .miner import mine
from .occurrence import AccessCounter, OccurrenceSet, OccurrenceStore, and_support, support
from .pregroup import Group, Grouping, MergeEvent, access_savings, pregroup

__version__ = "0.1.0"

__all__ = [
    "AccessCounter",
    "EdgeRender",
    "EmbedConfig",
    "EmbeddingModel",
    "Group",
    "GroupDistanceSource",
    "GraphDatabase",
    "Grouping",
    "LabeledGraph",
    "Lattice",
    "MatrixTargets",
    "MergeEvent",
    "OccurrenceSet",
    "OccurrenceStore",
    "RenderEdge",
    "access_savings",
    "and_support",
    "canonical_code",
    "cluster_dist",
    "dist",
    "dist_parent_child",
    "edges_at_threshold",
    "embed",
    "export_csv",
    "group_dist",
    "import_lattice",
    "import_lattice_path",
    "init_model",
    "mine",
    "parse_graph_file",
    "pregroup",
    "pregroup_dist",
    "render_svg",
    "rse",
    "subgraph_isomorphic",
    "support",
    "update_pair",
    "write_graph_file",
]
