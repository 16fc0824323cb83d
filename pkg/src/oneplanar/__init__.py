"""Verification workbench for matching extendability of 1-planar graphs."""

__version__ = "0.1.0"

from .builder import (
    BarrierCycle,
    Classification,
    Quadrangulation,
    barrier_cycle_search,
    classify_3matching,
    generate_quadrangulation,
    make_quadrangulation,
    optimal_fixture,
    optimal_from_quadrangulation,
    random_drawing,
    three_matching_witness,
)
from .discharge import (
    ChargeAssignment,
    Non5ExtCertificate,
    apply_rules,
    charge_ledger,
    claims_audit,
    initial_charge,
    negative_report,
    non5ext_certificate,
)
from .drawing import (
    AssociatedPlaneGraph,
    Face,
    FaceProfile,
    OnePlanarDrawing,
    alternation_check,
    build_associated,
    face_profile,
    false_run_scan,
    q_of,
    trace_faces,
    validate_drawing,
)
from .fileformat import parse_drawing, read_drawing, serialize_drawing, write_drawing
from .graph import (
    Graph,
    components_with_parity,
    induced_neighborhood,
    vertex_connectivity,
)
from .matching import (
    CriticalityVerdict,
    DeanCertificate,
    ExtendabilityVerdict,
    count_perfect_matchings,
    criticality_upper_bound,
    dean_certificate,
    enumerate_n_matchings,
    has_perfect_matching,
    is_k_factor_critical,
    is_n_extendable,
    maximum_matching,
)
