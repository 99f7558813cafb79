"""Card-shuffle permutation groups.

Deal-and-stack unshuffles (L, R), perfect faro shuffles (I, O) and the deck
reversal V, with exact group computations on top: BFS element enumeration,
a deterministic Schreier-Sims stabilizer chain, closed-form order
predictions and a verification pipeline comparing the two.
"""

from .bsgs import (
    DEFAULT_CAP,
    Closure,
    EnumerationCapExceeded,
    StabilizerChain,
    bfs_enumerate,
    group_order,
    schreier_sims,
)
from .elmsley import (
    binary_shuffle_image,
    bits_index,
    index_bits,
    perfect_elmsley_word,
    unshuffle_swap_word,
)
from .groups import (
    FAMILIES,
    GroupPrediction,
    SubstitutionResult,
    VerificationRecord,
    diaconis_words,
    family_generators,
    kernel_rule_applies,
    pair_kernel_order,
    parity_row,
    predict_group,
    predicted_kernel_order,
    records_to_json,
    substitute_unshuffles,
    verify_deck_size,
    verify_deck_sizes,
    write_report,
)
from .perm import Permutation, compose, random_centrally_symmetric
from .shuffles import (
    LETTERS,
    MAX_DECK,
    Step,
    Word,
    as_word,
    check_deck_size,
    deal_permutation,
    format_word,
    invert_word,
    multiplicative_order,
    parse_word,
    shuffle_order,
    shuffle_permutation,
    word_permutation,
    word_power,
)

__all__ = [
    "DEFAULT_CAP",
    "Closure",
    "EnumerationCapExceeded",
    "FAMILIES",
    "GroupPrediction",
    "LETTERS",
    "MAX_DECK",
    "Permutation",
    "Step",
    "StabilizerChain",
    "SubstitutionResult",
    "VerificationRecord",
    "Word",
    "as_word",
    "bfs_enumerate",
    "binary_shuffle_image",
    "bits_index",
    "check_deck_size",
    "compose",
    "deal_permutation",
    "diaconis_words",
    "family_generators",
    "format_word",
    "group_order",
    "index_bits",
    "invert_word",
    "kernel_rule_applies",
    "multiplicative_order",
    "pair_kernel_order",
    "parity_row",
    "parse_word",
    "perfect_elmsley_word",
    "predict_group",
    "predicted_kernel_order",
    "random_centrally_symmetric",
    "records_to_json",
    "schreier_sims",
    "shuffle_order",
    "shuffle_permutation",
    "substitute_unshuffles",
    "unshuffle_swap_word",
    "verify_deck_size",
    "verify_deck_sizes",
    "word_permutation",
    "word_power",
    "write_report",
]
