"""VGIT chambers for torus actions and combinatorial A_k-stable curves."""

from .charts import (
    LabeledWeightSystem,
    NotMaximallyDegenerate,
    build_weight_system,
    chain_chamber_formula,
    chain_system,
    crosscheck_local_vgit,
    crosscheck_system,
    expected_h_locus,
    expected_s_locus,
)
from .crimping import (
    CrimpingVector,
    TruncatedSeries,
    ValuedCrimping,
    ValuedEntry,
    crimping_equivalent,
    crimping_weights,
    h_weight_table,
    limit_crimping,
    subalgebra_contains,
    subalgebra_generators,
)
from .curve import (
    Component,
    CurveGraph,
    HDeclaration,
    Singularity,
    arithmetic_genus,
    is_ample,
    omega_degree,
    validate,
)
from .decompose import Decomposition, NotStable, canonical_decomposition, reassemble
from .degenerate import (
    ClosednessVerdict,
    closed_limit_class,
    is_maximally_degenerate,
    maximal_degeneration,
)
from .hcurves import (
    AttachingType,
    find_h_bridges,
    find_h_chains,
    find_h_links,
    find_h_tails,
    is_destabilizing,
)
from .isomorphism import curves_isomorphic
from .lp import fm_feasible, lp_feasible
from .stability import StabilityVerdict, stability
from .vgit import (
    EnumerationTooLarge,
    StratumUnion,
    WeightSystem,
    WeightSystemError,
    brute_force_in_minus,
    brute_force_in_plus,
    in_minus,
    in_plus,
    limit_exists,
    minus_locus,
    plus_locus,
    product_system,
    restrict_system,
    semi_invariant_monomials,
    unique_closed_point,
)

__version__ = "0.1.0"
