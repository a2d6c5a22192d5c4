"""Bounded symmetric domains, their invariants, and the stratified
spectra of the associated Toeplitz algebras."""

from .cartan import (
    MAX_PARAM,
    CartanFactor,
    Family,
    InvariantTriple,
    invariant_triple,
    is_tube,
    make_factor,
    rank,
    real_dim,
    shilov_dim,
)
from .domain import (
    Domain,
    SymGroupDescriptor,
    invariants,
    is_isomorphic,
    product,
    sym_group,
)
from .errors import (
    Ambiguous,
    DomainSyntaxError,
    EmptyProduct,
    InvalidTuple,
    NotCoordinateInduced,
    NotFound,
    OutOfCanonicalRange,
    PosetMismatch,
    SizeLimit,
    SymdomError,
    WeightOutOfRange,
    WrongArity,
)
from .parsing import DomainExpression, format_domain, parse_domain, parse_factor
from .reconstruct import (
    ReconstructionReport,
    SpectrumSweepReport,
    check_spectrum_rigidity,
    factor_data_of_spectrum,
    from_invariants,
    iter_canonical_factors,
    reconstruct_product,
    verify_complete_invariant,
    verify_spectrum_sweep,
)
from .spectrum import (
    IdealDownSet,
    PosetAutomorphism,
    StratumPoset,
    build_spectrum,
    bullet,
    decompose_weight_ideal,
    factor_permutation_of,
    ideal_of_weight,
    ideal_union,
    layer_components,
    maximal_chain_count,
    maximal_chain_lengths,
    poset_automorphisms,
    principal_downset,
    solvable_length,
    to_dot,
    to_json_dict,
)

__version__ = "0.1.0"
