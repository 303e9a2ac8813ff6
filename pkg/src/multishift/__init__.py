"""Multiplicative subshifts: deciders, witness builders, and an exact oracle.

A base shift space (finite-type or gap-set) induces a multiplicative
subshift whose points restrict to base-space points along every
geometric position chain.  This package decides the mixing hierarchy of
the base space, constructs certified connection witnesses in the
multiplicative subshift, and cross-validates every claim with an exact
finite-constraint oracle.
"""

from .dimension import SeriesResult, dimB_goldenmean, fib
from .errors import (
    ConnectorNotFound,
    HorizonExceeded,
    InadmissiblePattern,
    MultishiftError,
    NoCoprimePrime,
    OutputGuardExceeded,
    PreconditionFailed,
    SpecError,
    UndecidableProperty,
)
from .lambda_arith import (
    Decomposition,
    LambdaClass,
    OffsetBound,
    a_set,
    class_image,
    class_of,
    decompose,
    offset_bound,
    offset_of,
    xi,
)
from .mult_shift import (
    Pattern,
    assemble,
    count_blocks,
    enumerate_blocks,
    fiber,
    format_pattern,
    is_admissible,
    parse_pattern,
    pi_positions,
)
from .oracle import (
    CampaignReport,
    SearchBudget,
    binary_sft_family,
    budget_from_env,
    campaign,
    dedupe_by_language,
    exists_witness_exact,
    probe_directional_q,
    probe_transitive_X,
    random_sft_family,
    verify_certificate,
)
from .shift_core import (
    PropertyVerdict,
    SftSpec,
    SpacingSpec,
    blocks,
    build_graph,
    connector_gaps,
    decide,
    graph_dot,
    mixing_gap_index,
    partial_extendable,
    sft,
    simultaneous_connector,
    spacing,
    spec_from_dict,
    spec_to_dict,
)
from .witness import (
    WitnessCertificate,
    extract_fiber_point,
    witness_directional_coprime,
    witness_directional_power,
    witness_mixing,
    witness_transitive,
)

__version__ = "0.1.0"
