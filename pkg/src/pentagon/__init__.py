"""Induced k-cycle graphs: the operator that sends a graph to the
edge-intersection graph of its induced k-cycles, its iteration, and the
vanishing / periodic / expanding classification.

The cycle kernels come from the compiled ``_kernels`` extension when it
built; otherwise a pure-Python fallback is used. ``backend_name()`` reports
which one is active and ``set_backend`` switches.
"""

from ._backend import active as backend_name, available as compiled_available, set_backend
from .canon import (
    CanonicalCertificate,
    OrbitPartition,
    canonical_certificate,
    canonical_form,
    is_isomorphic,
    is_vertex_transitive,
    orbit_partition,
)
from .cycles import (
    CycleLimitExceeded,
    InducedCycle,
    KTooSmall,
    count_induced_cycles,
    enumerate_induced_cycles,
    oracle_induced_cycles,
)
from .dynamics import (
    Classification,
    EventuallyPeriodic,
    ExpandingSuspected,
    Trajectory,
    Vanishing,
    classify,
    expansion_evidence,
    iterate,
)
from .graph import Graph, GraphError, copolar_pairs, distance, induced_subgraph
from .io import parse_graph6, write_dot, write_graph6
from .operator import OperatorResult, cycle_operator, edge_pentagon_count
from .zoo import (
    add_hats,
    cycle,
    dodecahedron,
    enumerate_induced_tadpoles,
    from_name,
    hatted_icosahedron,
    i1_paper,
    icosahedron,
    petersen,
    tadpole31,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalCertificate",
    "Classification",
    "CycleLimitExceeded",
    "EventuallyPeriodic",
    "ExpandingSuspected",
    "Graph",
    "GraphError",
    "InducedCycle",
    "KTooSmall",
    "OperatorResult",
    "OrbitPartition",
    "Trajectory",
    "Vanishing",
    "add_hats",
    "backend_name",
    "canonical_certificate",
    "canonical_form",
    "classify",
    "compiled_available",
    "copolar_pairs",
    "count_induced_cycles",
    "cycle",
    "cycle_operator",
    "distance",
    "dodecahedron",
    "edge_pentagon_count",
    "enumerate_induced_cycles",
    "enumerate_induced_tadpoles",
    "expansion_evidence",
    "from_name",
    "hatted_icosahedron",
    "i1_paper",
    "icosahedron",
    "induced_subgraph",
    "is_isomorphic",
    "is_vertex_transitive",
    "iterate",
    "oracle_induced_cycles",
    "orbit_partition",
    "parse_graph6",
    "petersen",
    "set_backend",
    "tadpole31",
    "write_dot",
    "write_graph6",
]
