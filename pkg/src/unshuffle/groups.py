"""Shuffle groups: theoretical predictions and mechanical verification.

The two generator families are the unshuffles ``<L, R>`` and the perfect
shuffles ``<I, O>``.  For every even deck size the exact order of each
group is known in closed form; :func:`predict_group` routes a deck size to
the matching case and :func:`verify_deck_sizes` recomputes the order with
an enumeration engine and reports whether theory and computation agree.

Every element of either family preserves the mirror pairing i <-> 2n-1-i,
so both groups sit inside the group of centrally symmetric permutations
(order n! * 2^n).  Collapsing a symmetric permutation to its action on the
n pairs is a homomorphism; the sign of a shuffle and the sign of its pair
action, tabulated by n mod 4, drive the classification, and the kernel of
the pair action on <L, R> has order 2^(n-1) when n = 0 (mod 4) and 2^n
otherwise (for n > 1, n not a power of two, n not 6 or 12).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import NamedTuple

from .bsgs import DEFAULT_CAP, EnumerationCapExceeded, StabilizerChain, bfs_enumerate
from .perm import Permutation
from .shuffles import (
    Step,
    Word,
    as_word,
    check_deck_size,
    invert_word,
    parse_word,
    shuffle_permutation,
    word_power,
)

FAMILIES = {"unshuffle": ("L", "R"), "perfect": ("I", "O")}


def family_generators(family: str, deck_size: int) -> tuple[Permutation, Permutation]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    a, b = FAMILIES[family]
    return shuffle_permutation(a, deck_size), shuffle_permutation(b, deck_size)


def power_of_two_exponent(m: int) -> int | None:
    if m >= 1 and m & (m - 1) == 0:
        return m.bit_length() - 1
    return None


@dataclass(frozen=True)
class GroupPrediction:
    family: str
    deck_size: int
    case: str
    order: int
    order_factored: str
    characterization: str


def predict_group(family: str, deck_size: int) -> GroupPrediction:
    """Predicted order and structure of a shuffle group, no enumeration.

    Special deck sizes take precedence: 12, 24, then powers of two; every
    other size routes by n mod 4.  Every even size lands in exactly one
    case.
    """
    check_deck_size(deck_size)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    n = deck_size // 2

    if deck_size == 12:
        return GroupPrediction(
            family, deck_size, "special12", 2**6 * 120, "2^6*120", "Z_2^6 : S_5"
        )
    if deck_size == 24:
        return GroupPrediction(
            family, deck_size, "special24", 2**11 * 95040, "2^11*95040", "Z_2^11 : M_12"
        )
    k = power_of_two_exponent(deck_size)
    if k is not None:
        return GroupPrediction(
            family, deck_size, "power_of_two", k * 2**k, f"{k}*2^{k}", f"Z_2^{k} : Z_{k}"
        )

    residue = n % 4
    if residue == 0:
        order, factored = factorial(n) * 2 ** (n - 2), f"{n}!*2^{n - 2}"
        what = "intersection of the kernels of sign and pair sign"
    elif residue == 1:
        order, factored = factorial(n) * 2 ** (n - 1), f"{n}!*2^{n - 1}"
        what = "kernel of pair sign"
    elif residue == 2:
        order, factored = factorial(n) * 2**n, f"{n}!*2^{n}"
        what = "all centrally symmetric permutations"
    else:
        if family == "unshuffle":
            order, factored = factorial(n) * 2**n, f"{n}!*2^{n}"
            what = "all centrally symmetric permutations"
        else:
            order, factored = factorial(n) * 2 ** (n - 1), f"{n}!*2^{n - 1}"
            what = "kernel of sign times pair sign"
    return GroupPrediction(family, deck_size, f"mod{residue}", order, factored, what)


# sign of L, sign of R, sign of pair action of L, sign of pair action of R,
# keyed by n mod 4
_PARITY_ROWS = {
    0: (1, 1, 1, 1),
    1: (1, -1, 1, 1),
    2: (-1, -1, -1, 1),
    3: (-1, 1, 1, -1),
}


def parity_row(n: int) -> tuple[int, int, int, int]:
    """Predicted signs (L, R, pair action of L, pair action of R)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _PARITY_ROWS[n % 4]


def computed_parity_row(deck_size: int) -> tuple[int, int, int, int]:
    left, right = family_generators("unshuffle", deck_size)
    return (left.parity(), right.parity(), left.pair_parity(), right.pair_parity())


def kernel_rule_applies(n: int) -> bool:
    return n > 1 and power_of_two_exponent(n) is None and n not in (6, 12)


def predicted_kernel_order(n: int) -> int:
    if not kernel_rule_applies(n):
        raise ValueError(f"kernel order rule does not apply to n={n}")
    return 2 ** (n - 1) if n % 4 == 0 else 2**n


def pair_kernel_order(generators, group_order: int | None = None) -> int:
    """Order of the kernel of the pair action on the generated group.

    Computed as |G| / |image| via two stabilizer chains and the first
    isomorphism theorem; pass ``group_order`` if |G| is already known.
    """
    gens = list(generators)
    if group_order is None:
        group_order = StabilizerChain(gens).order
    images = [g.pair_permutation() for g in gens]
    image_order = StabilizerChain(images).order
    if group_order % image_order:
        raise ValueError("group order is not divisible by pair-image order")
    return group_order // image_order


# --- classic generator words over the perfect shuffles ---


def _split_power_of_two(deck_size: int) -> tuple[int, int]:
    k = 0
    v = deck_size
    while v % 2 == 0:
        v //= 2
        k += 1
    return k, v


def diaconis_words(
    deck_size: int | None = None,
    k: int | None = None,
    r_values=None,
) -> dict[str, Word]:
    """The c, w, b, c' and h(r) words over in/out shuffles.

    These are the workhorses of the classic perfect-shuffle analysis: for
    odd half-deck sizes, c and w generate every permutation fixing the top
    half of the deck whose restriction there is even.  The strings read
    left to right in performance order; evaluating them that way is what
    makes the top-half invariance hold (the tests check it).

    ``k`` defaults to the exponent of 2 in the deck size and ``r_values``
    to 1..k-1; b and h(r) are the only words that depend on them.
    """
    if k is None:
        if deck_size is None:
            raise ValueError("need a deck size or an explicit k")
        check_deck_size(deck_size)
        k, _ = _split_power_of_two(deck_size)
    if k < 1:
        raise ValueError("k must be a positive integer")
    if r_values is None:
        r_values = range(1, k)

    c = parse_word("O") + word_power("I'OIO'", 2) + parse_word("O'")
    w = (
        parse_word("O'I")
        + invert_word(c)
        + parse_word("O'I")
        + word_power(c, 2)
        + parse_word("I'O")
        + invert_word(c)
        + parse_word("I'O")
    )
    b = word_power(word_power("I", k) + word_power("O'", k) + parse_word("I'O"), -2)
    out: dict[str, Word] = {
        "c": c,
        "w": w,
        "b": b,
        "c'": parse_word("O") + b + parse_word("O'"),
    }
    for r in r_values:
        if not 1 <= r:
            raise ValueError(f"r must be positive, got {r}")
        out[f"h({r})"] = word_power("O'", r) + word_power("I", r)
    return out


class SubstitutionResult(NamedTuple):
    word: Word
    leading_reversal: bool


_UNSHUFFLE_FORMS = {
    # I = V L^-1 and O = V R^-1, performed inverse first since V is last
    ("I", False): (Step("L", True), Step("V")),
    ("I", True): (Step("V"), Step("L")),
    ("O", False): (Step("R", True), Step("V")),
    ("O", True): (Step("V"), Step("R")),
    ("V", False): (Step("V"),),
    ("V", True): (Step("V"),),
}


def substitute_unshuffles(word) -> SubstitutionResult:
    """Rewrite a word over I, O, V as one over L and R.

    V commutes with every shuffle here and squares to the identity, so the
    reversals introduced by I = VL' and O = VR' cancel in pairs.  An odd
    number survives as a single leading V; the result is flagged so callers
    know the word did not reduce to pure unshuffles.
    """
    expanded: list[Step] = []
    for step in as_word(word):
        expanded.extend(_UNSHUFFLE_FORMS.get((step.letter, step.inverted), (step,)))
    reversals = sum(1 for s in expanded if s.letter == "V")
    kept = tuple(s for s in expanded if s.letter != "V")
    if reversals % 2:
        return SubstitutionResult((Step("V"),) + kept, True)
    return SubstitutionResult(kept, False)


# --- verification records ---


@dataclass(frozen=True)
class VerificationRecord:
    two_n: int
    family: str
    engine_used: str
    computed_order: int | None
    predicted_order: int
    predicted_order_factored: str
    match: bool
    parities: tuple[int, int, int, int]
    kernel_order_computed: int | None = None
    kernel_order_predicted: int | None = None

    def to_fields(self) -> dict:
        """Serialization dict, fixed key order, orders as decimal strings."""
        fields: dict = {
            "two_n": self.two_n,
            "family": self.family,
            "engine_used": self.engine_used,
            "computed_order": None if self.computed_order is None else str(self.computed_order),
            "predicted_order": str(self.predicted_order),
            "predicted_order_factored": self.predicted_order_factored,
            "match": self.match,
            "parities": {
                "sign_L": self.parities[0],
                "sign_R": self.parities[1],
                "pair_sign_L": self.parities[2],
                "pair_sign_R": self.parities[3],
            },
        }
        if self.kernel_order_computed is not None:
            fields["kernel_order_computed"] = str(self.kernel_order_computed)
            fields["kernel_order_predicted"] = str(self.kernel_order_predicted)
        return fields


def verify_deck_size(
    deck_size: int, family: str, engine: str = "auto", cap: int = DEFAULT_CAP
) -> VerificationRecord:
    """Recompute one group order and compare against the prediction.

    ``auto`` enumerates by BFS when the predicted order fits under the cap
    and uses a stabilizer chain otherwise.  A forced ``bfs`` run that blows
    the cap yields a record with no computed order and ``match`` false
    rather than an exception, so a sweep over many deck sizes degrades per
    record.
    """
    prediction = predict_group(family, deck_size)
    gens = family_generators(family, deck_size)

    if engine == "auto":
        chosen = "bfs" if prediction.order <= cap else "schreier"
    elif engine in ("bfs", "schreier"):
        chosen = engine
    else:
        raise ValueError(f"unknown engine {engine!r}")

    computed: int | None
    if chosen == "bfs":
        try:
            computed = bfs_enumerate(gens, cap).order
        except EnumerationCapExceeded:
            computed = None
    else:
        computed = StabilizerChain(gens).order

    n = deck_size // 2
    kernel_computed = kernel_predicted = None
    if family == "unshuffle" and kernel_rule_applies(n) and computed is not None:
        kernel_computed = pair_kernel_order(gens, group_order=computed)
        kernel_predicted = predicted_kernel_order(n)

    return VerificationRecord(
        two_n=deck_size,
        family=family,
        engine_used=chosen,
        computed_order=computed,
        predicted_order=prediction.order,
        predicted_order_factored=prediction.order_factored,
        match=computed == prediction.order,
        parities=computed_parity_row(deck_size),
        kernel_order_computed=kernel_computed,
        kernel_order_predicted=kernel_predicted,
    )


def verify_deck_sizes(
    deck_sizes, engine: str = "auto", cap: int = DEFAULT_CAP
) -> list[VerificationRecord]:
    """Verification records for both families at each deck size, sorted by
    deck size then family name, so equal inputs give identical output."""
    sizes = sorted({check_deck_size(s) for s in deck_sizes})
    records = []
    for deck_size in sizes:
        for family in sorted(FAMILIES):
            records.append(verify_deck_size(deck_size, family, engine=engine, cap=cap))
    return records


def records_to_json(records) -> str:
    records = list(records)
    if not records:
        raise ValueError("no verification records to serialize")
    return json.dumps([r.to_fields() for r in records], indent=2) + "\n"


def write_report(records, path) -> None:
    text = records_to_json(records)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
