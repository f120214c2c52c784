"""Exact-arithmetic kernel for Petrie symmetric functions."""

from .partitions import (
    Partition,
    beta_numbers,
    concat_sort,
    contains,
    dominates,
    make_partition,
    partitions_of,
    size,
    transpose,
)
from .symfunc import (
    SymFunc,
    add,
    alpha_eval,
    degree_component,
    from_json_dict,
    gen,
    hall,
    jacobi_trudi_e,
    multiply,
    multiply_oracle,
    pretty,
    scale,
    skew_apply,
    skew_schur,
    to_basis,
    to_json_dict,
)
from .gkm import (
    PetrieExplicitData,
    VanishingReason,
    det_int,
    is_petrie_matrix,
    pet_alpha,
    pet_det,
    pet_explicit,
    pet_matrix,
    pet_nonzero_criterion,
    petrie_g,
    petrie_modified,
    petrie_via_frobenius,
    pieri_expand,
)
from .hopf import (
    TensorFunc,
    antipode,
    bernstein,
    convolve_with_identity,
    coproduct,
    frobenius,
    tensor,
    u_map,
    v_map,
    verschiebung,
)
from .verify import (
    VerifyReport,
    check_gessel,
    check_genset,
    check_liu_polo,
    petriefication,
    scan_alexandersson,
)

__version__ = "0.1.0"
