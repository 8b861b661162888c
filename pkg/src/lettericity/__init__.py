"""Letter-graph encodings, exact lettericity and random-graph event checks."""
from lettericity._kernels import BACKEND
from lettericity.constructor import (
    Core,
    SavingsGuarantee,
    compress,
    extend_core_to_lettering,
    find_homogeneous_core,
    find_palindromic_core,
    k_guarantee,
)
from lettericity.exact import (
    Budget,
    BudgetExceeded,
    SolveResult,
    brute_force_oracle,
    cochromatic_number,
    is_k_letter,
    lettericity_exact,
)
from lettericity.graph import (
    Graph,
    Graph6Error,
    RandomSpec,
    Signature,
    agrees_on,
    complement,
    from_graph6,
    induced_subgraph,
    random_graph,
    signature,
    to_graph6,
)
from lettericity.lettering import (
    Inconsistent,
    Lettering,
    decode,
    infer_decoder,
    reverse_lettering,
    threshold_lettering,
    verify,
)
from lettericity.probability import (
    EventKind,
    ExperimentConfig,
    ExperimentResult,
    check_core_tuple,
    check_separated_quad,
    check_triple,
    exact_tuple_probability_C,
    exists_event,
    lower_bound_threshold,
    monte_carlo,
    union_bound_A,
    union_bound_B,
    union_bound_C,
)

__version__ = "0.1.0"
