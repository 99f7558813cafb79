"""The five basic shuffles of an even deck and words built from them.

Positions run 0..2n-1 with 0 the top card.  With n = deck_size // 2:

  L  left shuffle    L(i) = n*i + n - 1  (mod 2n+1)
  R  right shuffle   R(i) = (n-1)*i      (mod 2n-1), except R(0) = 2n-1
  I  in shuffle      I(i) = 2*i + 1      (mod 2n+1)
  O  out shuffle     O(i) = 2*i          (mod 2n-1), except O(2n-1) = 2n-1
  V  reversal        V(i) = 2n - 1 - i

L and R deal the deck alternately into two piles (top card starts the left
pile) and stack the named pile on top; I and O cut exactly in half and
interlace perfectly.  The closed forms are checked against the literal
dealing simulation in the tests, which is why both constructions live here.

Words are read left to right in performance order: "RL'" means do R, then
the inverse of L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .perm import Permutation, _wrap

LETTERS = "LRIOV"
MAX_DECK = 1 << 20


@dataclass(frozen=True)
class Step:
    """One shuffle in a word: a letter from LRIOV, possibly inverted."""

    letter: str
    inverted: bool = False

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise ValueError(f"unknown shuffle letter {self.letter!r}")

    def inverse(self) -> "Step":
        return Step(self.letter, not self.inverted)

    def __str__(self) -> str:
        return self.letter + ("'" if self.inverted else "")


Word = tuple[Step, ...]


def parse_word(text: str) -> Word:
    """Parse "RL'V" style notation; whitespace between steps is allowed."""
    steps: list[Step] = []
    for ch in text:
        if ch.isspace():
            continue
        if ch == "'":
            if not steps:
                raise ValueError(f"dangling inverse mark in {text!r}")
            steps[-1] = steps[-1].inverse()
        elif ch in LETTERS:
            steps.append(Step(ch))
        else:
            raise ValueError(f"bad character {ch!r} in shuffle word {text!r}")
    return tuple(steps)


def format_word(word: Word) -> str:
    return "".join(str(s) for s in word)


def as_word(word) -> Word:
    if isinstance(word, str):
        return parse_word(word)
    return tuple(word)


def invert_word(word) -> Word:
    return tuple(s.inverse() for s in reversed(as_word(word)))


def word_power(word, k: int) -> Word:
    w = as_word(word)
    if k < 0:
        w, k = invert_word(w), -k
    return w * k


def check_deck_size(deck_size: int) -> int:
    if not isinstance(deck_size, int) or deck_size < 2 or deck_size % 2:
        raise ValueError(f"deck size must be a positive even integer, got {deck_size!r}")
    if deck_size > MAX_DECK:
        raise ValueError(f"deck size {deck_size} exceeds the supported maximum {MAX_DECK}")
    return deck_size


@lru_cache(maxsize=64)
def _images(letter: str, deck_size: int) -> tuple[int, ...]:
    n = deck_size // 2
    last = deck_size - 1
    if letter == "L":
        m = deck_size + 1
        return tuple((n * i + n - 1) % m for i in range(deck_size))
    if letter == "R":
        # the i = 0 exception is genuine: (n-1)*0 is 0, not 2n-1
        m = deck_size - 1
        return (last,) + tuple(((n - 1) * i) % m for i in range(1, deck_size))
    if letter == "I":
        m = deck_size + 1
        return tuple((2 * i + 1) % m for i in range(deck_size))
    if letter == "O":
        m = deck_size - 1
        return tuple((2 * i) % m for i in range(last)) + (last,)
    if letter == "V":
        return tuple(last - i for i in range(deck_size))
    raise ValueError(f"unknown shuffle letter {letter!r}")


def shuffle_permutation(step, deck_size: int) -> Permutation:
    """The permutation a single shuffle performs on a deck of the given size."""
    check_deck_size(deck_size)
    if isinstance(step, str):
        step = Step(step)
    p = _wrap(_images(step.letter, deck_size))
    return p.inverse() if step.inverted else p


def deal_permutation(top_pile: str, deck_size: int) -> Permutation:
    """Literal simulation of dealing into two piles and stacking.

    Cards are dealt one at a time from the top, first card to the left pile,
    alternating; each dealt card lands on top of its pile.  ``top_pile``
    says which pile ends up on top of the other ("left" gives the left
    shuffle, "right" the right shuffle).
    """
    check_deck_size(deck_size)
    if top_pile not in ("left", "right"):
        raise ValueError(f"top_pile must be 'left' or 'right', got {top_pile!r}")
    left = list(range(0, deck_size, 2))
    right = list(range(1, deck_size, 2))
    if top_pile == "left":
        stacked = left[::-1] + right[::-1]
    else:
        stacked = right[::-1] + left[::-1]
    image = [0] * deck_size
    for position, card in enumerate(stacked):
        image[card] = position
    return Permutation(image)


def word_permutation(word, deck_size: int) -> Permutation:
    """Evaluate a shuffle word (string or Step sequence) on a deck."""
    check_deck_size(deck_size)
    current = tuple(range(deck_size))
    for step in as_word(word):
        g = _images(step.letter, deck_size)
        if step.inverted:
            inv = [0] * deck_size
            for i, x in enumerate(g):
                inv[x] = i
            g = inv
        current = tuple(map(g.__getitem__, current))
    return _wrap(current)


def multiplicative_order(value: int, modulus: int) -> int:
    """Least r >= 1 with value**r = 1 (mod modulus)."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    a = value % modulus
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{value} is not a unit mod {modulus}")
    x, r = a, 1
    while x != 1:
        x = x * a % modulus
        r += 1
    return r


def shuffle_order(letter: str, deck_size: int) -> int:
    """Order of the left or right shuffle from modular arithmetic alone.

    ord(L) = ord(-2 mod 2n+1).  With r = ord(-2 mod 2n-1), ord(R) is r when
    r is even and 2r when r is odd.  The two-card deck is handled directly
    (R is the swap, modulus 1 carries no information).
    """
    check_deck_size(deck_size)
    if letter == "L":
        return multiplicative_order(-2, deck_size + 1)
    if letter == "R":
        if deck_size == 2:
            return 2
        r = multiplicative_order(-2, deck_size - 1)
        return r if r % 2 == 0 else 2 * r
    raise ValueError(
        f"closed-form order is defined for 'L' and 'R' only, got {letter!r}; "
        "use Permutation.order() for the others"
    )
