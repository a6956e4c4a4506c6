"""Ego-network structural encodings and 1-WL color refinement for
undirected graphs, with a collection-level distinguishability harness."""

from .encode import (
    ConcatGraphEncoding,
    GraphEncoding,
    SparseVector,
    VertexEncoding,
    encode_all,
    encode_graph,
    encode_graph_concat,
    encode_vertex,
    igel_equivalent,
    vectorize,
)
from .families import (
    SrgParams,
    brute_force_isomorphic,
    gen_complete,
    gen_cycle,
    gen_disjoint_union,
    gen_gnp,
    gen_paley,
    gen_path,
    gen_petersen,
    gen_random_regular,
    gen_rook,
    gen_shrikhande,
    gen_star,
    srg_params,
)
from .features import IgelEncoder
from .gamma import (
    GammaVertexEncoding,
    gamma_encode_all,
    gamma_encode_graph,
    gamma_encode_vertex,
    gamma_equivalent,
    rel_degree,
    vectorize_gamma,
)
from .graph import (
    Graph,
    GraphCollection,
    GraphError,
    GraphFormatError,
    parse_edge_list,
    parse_edge_list_mapped,
    parse_graph6,
    parse_graph6_collection,
    write_edge_list,
    write_graph6,
)
from .survey import CompareResult, EncoderSpec, SurveyReport, pairwise_compare, run_survey
from .wl import Coloring, wl_joint_refine, wl_refine

__version__ = "0.1.0"

__all__ = [
    "Coloring",
    "CompareResult",
    "ConcatGraphEncoding",
    "EncoderSpec",
    "GammaVertexEncoding",
    "Graph",
    "GraphCollection",
    "GraphEncoding",
    "GraphError",
    "GraphFormatError",
    "IgelEncoder",
    "SparseVector",
    "SrgParams",
    "SurveyReport",
    "VertexEncoding",
    "brute_force_isomorphic",
    "encode_all",
    "encode_graph",
    "encode_graph_concat",
    "encode_vertex",
    "gamma_encode_all",
    "gamma_encode_graph",
    "gamma_encode_vertex",
    "gamma_equivalent",
    "gen_complete",
    "gen_cycle",
    "gen_disjoint_union",
    "gen_gnp",
    "gen_paley",
    "gen_path",
    "gen_petersen",
    "gen_random_regular",
    "gen_rook",
    "gen_shrikhande",
    "gen_star",
    "igel_equivalent",
    "pairwise_compare",
    "parse_edge_list",
    "parse_edge_list_mapped",
    "parse_graph6",
    "parse_graph6_collection",
    "rel_degree",
    "run_survey",
    "srg_params",
    "vectorize",
    "vectorize_gamma",
    "wl_joint_refine",
    "wl_refine",
    "write_edge_list",
    "write_graph6",
]
