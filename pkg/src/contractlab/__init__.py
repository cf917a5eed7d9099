"""Graph contractibility testing and hypergraph 2-colouring hardness gadgets."""

from .dcs import TwoDCSSolution, check_2dcs, p4_contractible, solve_2dcs
from .graph import (
    Graph,
    GraphError,
    connected_components,
    contract_edge,
    diameter,
    distances,
    is_bipartite,
    is_connected,
    is_connected_subset,
    quotient,
    subdivide_edge,
)
from .hypergraph import (
    Hypergraph,
    NormalizationError,
    TwoColouring,
    check_colouring,
    enumerate_instances,
    is_two_colourable,
    normalize,
)
from .reductions import (
    GadgetError,
    LabeledGadget,
    Role,
    VertexRole,
    build_c6_gadget,
    build_p5_gadget,
    build_p6_gadget,
    colouring_to_c6_witness,
    colouring_to_p5_witness,
    colouring_to_p6_witness,
    p5_witness_to_colouring,
)
from .search import (
    SearchBudgetExceeded,
    SuitablePair,
    c3_contractible,
    contracts_to,
    cyclicity,
    find_suitable_pair,
)
from .witness import PatternSpec, WitnessCheck, WitnessStructure, verify_witness

__version__ = "0.1.0"
