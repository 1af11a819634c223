"""Exact combinatorics of permutations, Young tableaux and dimension-2 posets."""

from .core import (
    GUARDS,
    DegreeMismatch,
    DimsTooSmall,
    GeneralizedTableau,
    GuardExceeded,
    InternalError,
    MultiplicityMatrix,
    NonIntegerResult,
    NotABijection,
    NotARecordingTableau,
    NotLexSorted,
    OutOfRange,
    Partition,
    Permutation,
    PermOrderError,
    ShapeMismatch,
    SizeMismatch,
    StandardTableau,
    TwoLineArray,
    binomial,
    factorial,
    make_permutation,
    partitions,
)
from .rsk import (
    array_to_matrix,
    knuth_forward,
    knuth_inverse,
    matrix_to_array,
    perm_to_array,
    rsk_forward,
    rsk_inverse,
    schensted_insert,
)
from .stats import catalan, hook_lengths, is_k_divisible, lds, syt_count_hook, syt_enumerate
from .posets import (
    LinearOrder,
    Poset,
    canonical_form,
    epsilon_exact,
    intersect_linear_orders,
    is_isomorphic,
    max_antichain,
    poset_from_permutation,
)
from .counting import beth_exact, lds_distribution, xi3_closed, xi_brute, xi_shapes
from .bounds import (
    BoundsReport,
    BoundsRow,
    beth_bound,
    epsilon_bound,
    multilinear_bound,
    multilinear_exact,
    verify,
    xi_bound,
)
from .genfunc import (
    MultiPoly,
    TruncatedSeries,
    bessel_b,
    complete_homogeneous,
    gessel_U,
    rk_coefficient,
    schur,
    series_add,
    series_det,
    series_mul,
    syt_count_schur,
    xi_from_series,
)

__version__ = "0.1.0"
