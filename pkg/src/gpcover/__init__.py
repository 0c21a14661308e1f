"""Exact covers of complete r-uniform hypergraphs by complete r-partite
blocks, a brute-force verifier, an exhaustive minimum search, and exact
rational evaluation of the leading coefficients c_r."""

from .bounds import (
    Coefficient,
    PowerBound,
    crossover_even,
    even_coefficients,
    finite_bound_trace,
    lemma3_bound,
    lower_bound_coefficient,
    odd_coefficient,
    prior_coefficient,
    smallest_odd_below_one,
    theorem1_closed_form,
)
from .constructions import (
    ConstructionStrategy,
    baseline_count,
    baseline_cover,
    construct,
    halving_cover,
    identity_cover,
    lemma1_cover,
    odd_pairing_cover,
    product_cover,
)
from .hypergraph import (
    Block,
    CompleteFamily,
    Cover,
    MixedProfileFamily,
    block_edges,
    complete,
    family_edges,
    make_block,
    mixed_profile,
)
from .search import SearchBudget, SearchResult, enumerate_blocks, exact_min_cover
from .verifier import VerificationReport, count_blocks, verify_exact_cover

__version__ = "0.1.0"
