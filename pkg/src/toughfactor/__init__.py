"""Exact toughness, 2-factors, and barrier machinery for plane triangulations."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    Multigraph,
    PlanarEmbedding,
    VertexMap,
    contract_subgraph,
    degree_three_separated,
    distance,
    embedding_from_faces,
    euler_residual,
    faces,
    induced_face,
    interior,
    is_plane_triangulation,
    smooth_degree2,
    split_vertex,
)
from .matching import (
    DeficiencyCertificate,
    Matching,
    bipartite_cover_matching,
    component_bipartite_graph,
    cover_matching_with_quota,
    deficiency,
    is_factor_critical,
    max_matching,
    maximal_deficiency_set,
    merge_matchings,
    near_perfect_matching,
)
from .toughness import INFINITY, ExactRational, ToughnessResult, is_t_tough, toughness, vertex_connectivity
from .twofactor import (
    BarrierPair,
    ComponentClassification,
    TwoFactor,
    biased_barrier,
    check_biased_properties,
    classify_components,
    extract_two_factor,
    find_all_barriers,
    has_two_factor,
    is_hamiltonian,
    tutte_delta,
)
from .machinery import (
    CutsetReport,
    LinkGraphLedger,
    MatchingPipelineReport,
    TriBound,
    assemble_cutset,
    build_link_graph,
    dense_component_walks,
    outerplanar_cover,
    select_component_cut,
    matching_pipeline,
    survey_link_components,
    tri_component_bound,
)
from .generators import (
    CorpusEntry,
    GeneratorSpec,
    annotate,
    apollonian,
    connected_graph_catalog,
    filter_corpus,
    icosahedron,
    octahedron,
    petersen_graph,
    random_flip_triangulation,
    stellate,
    tetrahedron,
)
from .formats import graph6_decode, graph6_encode, parse_instance, serialize_edge_list
