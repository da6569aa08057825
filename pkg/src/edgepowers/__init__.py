"""Bounded top powers of edge ideals and the Gorenstein property of their toric rings."""

from .bounded_powers import (
    GeneratorSet,
    delta,
    edge_product_cap,
    realizable_degree_sequence,
    top_bounded_generators,
)
from .classification import (
    VeroneseSpec,
    classify_complete_graph,
    classify_multipartite_minus_matching,
    classify_tree_unit_caps,
    gorenstein,
    gorenstein_universal,
    nocomp_witness,
    segre_gorenstein,
    veronese_generators,
)
from .errors import BudgetExceeded, HilbertSeriesError, InputError, RouteDisagreement
from .graphs import Graph, MultipartiteSpec
from .polymatroid import check_exchange, dual_matroidal
from .toric_oracle import GorensteinVerdict, HilbertData, gorenstein_oracle, h_vector, krull_dim

__all__ = [
    "BudgetExceeded",
    "GeneratorSet",
    "GorensteinVerdict",
    "Graph",
    "HilbertData",
    "HilbertSeriesError",
    "InputError",
    "MultipartiteSpec",
    "RouteDisagreement",
    "VeroneseSpec",
    "check_exchange",
    "classify_complete_graph",
    "classify_multipartite_minus_matching",
    "classify_tree_unit_caps",
    "delta",
    "dual_matroidal",
    "edge_product_cap",
    "gorenstein",
    "gorenstein_oracle",
    "gorenstein_universal",
    "h_vector",
    "krull_dim",
    "nocomp_witness",
    "realizable_degree_sequence",
    "segre_gorenstein",
    "top_bounded_generators",
    "veronese_generators",
]
