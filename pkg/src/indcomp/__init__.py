"""Independence complexes of ternary graphs: exact homology, homotopy-type
classification, and exhaustive theorem verification."""

from .classifier import (
    CONTRACTIBLE,
    STAR,
    Classifier,
    HomotopyClass,
    NonTernaryDetected,
    NonTernarySignal,
    WedgeOfTwoSpheres,
    classify,
    combine,
    cycle_homotopy_type,
    select_pivot,
    sphere,
)
from .complexes import (
    IntegerMatrix,
    SimplicialComplex,
    boundary_matrix,
    f_vector,
    face_euler,
    independence_complex,
)
from .cycles import CycleWitness, enumerate_chordless_cycles, is_ternary
from .enumeration import (
    canonical_form,
    canonical_graph6,
    enumerate_graphs,
    refined_canonical_graph6,
)
from .formats import Graph6Error, encode_graph6, parse_edge_list, parse_graph6
from .graphs import Graph, GraphError, residual
from .harness import (
    AggregateReport,
    VerificationReport,
    check_converse,
    check_euler_bound,
    check_main_theorem,
    check_mv_subadditivity,
    check_total_betti_bound,
    run_checks,
    verify_exhaustive,
    verify_stream,
)
from .homology import (
    HomologyGroups,
    HomologyType,
    SmithForm,
    betti,
    euler_from_betti,
    homology_class,
    reduced_homology,
    smith_normal_form,
    total_betti,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport",
    "CONTRACTIBLE",
    "Classifier",
    "CycleWitness",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HomologyGroups",
    "HomologyType",
    "HomotopyClass",
    "IntegerMatrix",
    "NonTernaryDetected",
    "NonTernarySignal",
    "STAR",
    "SimplicialComplex",
    "SmithForm",
    "VerificationReport",
    "WedgeOfTwoSpheres",
    "betti",
    "boundary_matrix",
    "canonical_form",
    "canonical_graph6",
    "check_converse",
    "check_euler_bound",
    "check_main_theorem",
    "check_mv_subadditivity",
    "check_total_betti_bound",
    "classify",
    "combine",
    "cycle_homotopy_type",
    "encode_graph6",
    "enumerate_chordless_cycles",
    "enumerate_graphs",
    "euler_from_betti",
    "f_vector",
    "face_euler",
    "homology_class",
    "independence_complex",
    "is_ternary",
    "parse_edge_list",
    "parse_graph6",
    "refined_canonical_graph6",
    "reduced_homology",
    "residual",
    "run_checks",
    "select_pivot",
    "smith_normal_form",
    "sphere",
    "total_betti",
    "verify_exhaustive",
    "verify_stream",
]
