"""sftkit: exact arithmetic for shifts of finite type.

Presentations, eventually periodic points, cylinder functions, cohomology
positivity with certificates, the tail-equivalence groupoid, towers and
flow-equivalence invariants, and the constructive orbit-equivalence to
flow-equivalence pipeline.
"""

from .presentation import (
    Presentation,
    build_presentation,
    from_forbidden_words,
    full_shift,
    golden_mean,
    higher_block,
    language,
    word,
)
from .points import (
    BiPoint,
    EvPerPoint,
    is_isolated,
    least_period,
    normalize_point,
    shift_point,
)
from .cylinders import (
    CylinderFunction,
    eval_cylinder,
    orbit_sum,
    pullback_and_coboundary,
)
from .maps import (
    PointMap,
    apply_prefix_exchange,
    identity_map,
    prefix_exchange,
    relabel_map,
    sliding_block_conjugacy,
)
from .cohomology import (
    NegativeCycleWitness,
    PositivityCertificate,
    Potential,
    WeightedTransitionGraph,
    class_is_positive,
    decompose_positive,
    find_potential,
    groupoid_cocycle_eval,
    solve_coboundary,
    transition_graph,
)
from .groupoid import (
    CylinderBisection,
    GroupoidElement,
    TowerGroupoidElement,
    bisection_apply,
    compose,
    invert,
    make_element,
    make_tower_element,
    phi_from_oe_data,
    tower_iso,
    unit,
)
from .flow import (
    InvariantReport,
    Tower,
    TowerSpec,
    attach_head,
    bowen_franks,
    build_tower,
    first_return,
    graph_move,
    in_split,
    out_split,
    out_split_conjugacy,
)
from .suspension import (
    ClaimReport,
    FlowMapData,
    SuspensionPoint,
    bold_varphi,
    m_eval,
    psi_eval,
    quarter_grid,
    r_eval,
    verify_flow_claims,
)
from .orbit import (
    CocyclePair,
    COEReport,
    OrbitEquivalence,
    check_least_period_preserving,
    coe_to_flow_pipeline,
    derive_cocycle_pair,
    find_scoe_transfer,
    verify_coe,
)

__version__ = "0.1.0"
