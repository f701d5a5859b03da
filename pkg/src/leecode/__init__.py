"""Few Lee weight codes over Z2[u] built from triples of support sets,
with closed form weight distributions and Gray image analysis."""

from .builder import (
    DefiningSet,
    WeightDistribution,
    brute_force_distribution,
    build_defining_set,
    distinct_codeword_distribution,
    encode,
    kernel,
)
from .closed_form import (
    WeightRow,
    code_size_formula,
    complement_sign_sum,
    distribution_formula,
    enumerator_string,
    kernel_size_formula,
    lee_weight_formula,
    weight_rows,
)
from .gray import (
    DEFAULT_BUDGET_BYTES,
    ABCheck,
    AnalysisReport,
    BinaryCode,
    all_weights_divisible_by_4,
    analyze,
    ashikhmin_barg_check,
    equal_size_minimality_guarantee,
    gray_image,
    is_minimal_exact,
    is_self_orthogonal_exact,
)
from .ring import (
    BinaryWord,
    BitVec,
    CodewordZ2u,
    MixedWord,
    Z2U_ELEMENTS,
    Z2uElement,
    gray_map_elem,
    gray_map_word,
    inner_product_mixed,
    lee_weight,
    parity_dot,
)
from .simplicial import (
    DisjointnessCounts,
    SupportSet,
    chi,
    complement_members,
    complex_members,
    eval_H_at_signs,
    meet_pattern_counts,
    subset_disjointness_counts,
)

__version__ = "0.1.0"
