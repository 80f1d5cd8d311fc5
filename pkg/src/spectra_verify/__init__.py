"""Verification engine for an incidence-energy inequality on simple graphs.

For a graph with incidence matrix X and directed incidence matrix D (any
orientation), the energies e_x and e_d are the sums of the singular values
of X and D, equivalently the sums of the square roots of the signless
Laplacian and Laplacian eigenvalues.  The package checks the claim
e_d <= e_x exhaustively over all isomorphism classes in a vertex range,
validates the bipartite equality and regular-graph special cases, and
hunts for counterexamples heuristically at larger sizes.

Hot kernels (eigensolver, canonicalization) run through a compiled
extension when available and an equivalent pure-Python lane otherwise;
see ``spectra_verify.kernels.BACKEND``.
"""

from .enumeration import (
    CanonicalForm,
    canonical_form,
    canonical_representative,
    enumerate_graphs,
    enumerate_labeled_graphs,
)
from .errors import (
    CanonicalBudgetError,
    ContractViolation,
    ConvergenceError,
    Graph6Error,
    NegativeEigenvalueError,
    SpectraVerifyError,
    UnsupportedSizeError,
)
from .graph6 import iter_graph6_file, parse_graph6, to_graph6, write_graph6_file
from .graphs import (
    Graph,
    Orientation,
    adjacency_matrix,
    complete_graph,
    connected_components,
    cycle_graph,
    directed_incidence_matrix,
    incidence_matrix,
    is_bipartite,
    is_connected,
    is_regular,
    laplacian,
    path_graph,
    signless_laplacian,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .search import (
    DescentResult,
    SearchConfig,
    SearchResult,
    anneal,
    exhaustive_neighborhood_descent,
    gap_objective,
    polish_result,
)
from .spectral import (
    EnergyPair,
    Spectrum,
    energy_of_spectrum,
    energy_pair,
    singular_values_direct,
    sym_eigenvalues,
)
from .verify import (
    CampaignReport,
    ConjectureRecord,
    RegularReformulation,
    Tolerances,
    Verdict,
    check_graph,
    check_regular_reformulation,
    run_campaign,
)

__version__ = "0.1.0"

__all__ = [
    "CampaignReport",
    "CanonicalBudgetError",
    "CanonicalForm",
    "ConjectureRecord",
    "ContractViolation",
    "ConvergenceError",
    "DescentResult",
    "EnergyPair",
    "Graph",
    "Graph6Error",
    "KERNEL_BACKEND",
    "NegativeEigenvalueError",
    "Orientation",
    "RegularReformulation",
    "SearchConfig",
    "SearchResult",
    "SpectraVerifyError",
    "Spectrum",
    "Tolerances",
    "UnsupportedSizeError",
    "Verdict",
    "adjacency_matrix",
    "anneal",
    "canonical_form",
    "canonical_representative",
    "check_graph",
    "check_regular_reformulation",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "directed_incidence_matrix",
    "energy_of_spectrum",
    "energy_pair",
    "enumerate_graphs",
    "enumerate_labeled_graphs",
    "exhaustive_neighborhood_descent",
    "gap_objective",
    "incidence_matrix",
    "is_bipartite",
    "is_connected",
    "is_regular",
    "iter_graph6_file",
    "laplacian",
    "parse_graph6",
    "path_graph",
    "polish_result",
    "run_campaign",
    "signless_laplacian",
    "singular_values_direct",
    "sym_eigenvalues",
    "to_graph6",
    "write_graph6_file",
]
