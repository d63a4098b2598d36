"""Construction and exact verification of complete complementary codes
(CCCs) and N-shift cross-orthogonal sequence families."""

from .cyclo import CycloNum, cyclotomic_polynomial
from .model import (
    Sequence,
    SequenceFamily,
    SequenceSet,
    canonical_form,
    energy,
    equal_up_to_indexing,
    from_signs,
    set_energy,
    singleton_family,
)
from .corr import (
    acorr,
    check_size_bound,
    corr_profile,
    corr_sum,
    corr_sum_profile,
    is_ccc,
    is_complementary_set,
    is_n_co_sf,
    pcorr,
    zccc_zone,
)
from .matrices import (
    UnitaryLike,
    custom_matrix,
    dft_matrix,
    hadamard_matrix,
    identity_matrix,
)
from .construct import (
    ccc_from_unitary,
    connect,
    cosf_to_ccc,
    dyadic_sum,
    elongate_cosf,
    enlarge_ccc,
    entrywise,
    generate_cosf,
    kron_expand,
)
from .planner import (
    Recipe,
    UnconstructibleError,
    constructible,
    execute,
    plan,
)

__all__ = [
    "CycloNum", "cyclotomic_polynomial",
    "Sequence", "SequenceSet", "SequenceFamily",
    "canonical_form", "equal_up_to_indexing", "energy", "set_energy",
    "from_signs", "singleton_family",
    "acorr", "pcorr", "corr_profile", "corr_sum", "corr_sum_profile",
    "is_complementary_set", "is_ccc", "is_n_co_sf", "zccc_zone",
    "check_size_bound",
    "UnitaryLike", "dft_matrix", "hadamard_matrix", "identity_matrix",
    "custom_matrix",
    "connect", "kron_expand", "entrywise", "dyadic_sum",
    "generate_cosf", "elongate_cosf", "cosf_to_ccc", "ccc_from_unitary",
    "enlarge_ccc",
    "Recipe", "plan", "execute", "constructible", "UnconstructibleError",
]
