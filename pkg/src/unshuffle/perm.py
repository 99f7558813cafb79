"""Permutations of {0, ..., d-1} stored as image arrays.

Convention used everywhere in this package: ``image[i]`` is the position
that the card currently at position i moves to, and products read left to
right, so ``p * q`` means "do p, then q".  A deck written out top to bottom
shows the *inverse* map: after applying p to a sorted deck, the card label
at position j is ``p.inverse().image[j]``.  Use :meth:`Permutation.arrangement`
for that display form.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Iterator


class Permutation:
    __slots__ = ("image",)

    image: tuple[int, ...]

    def __init__(self, image: Iterable[int]):
        img = tuple(image)
        d = len(img)
        if d == 0:
            raise ValueError("empty permutation")
        seen = [False] * d
        for x in img:
            if not isinstance(x, int) or not 0 <= x < d or seen[x]:
                raise ValueError(f"not a permutation of 0..{d - 1}: {img!r}")
            seen[x] = True
        object.__setattr__(self, "image", img)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __len__(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation([{', '.join(map(str, self.image))}])"

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Apply self first, then other."""
        if len(other.image) != len(self.image):
            raise ValueError("degree mismatch")
        out = tuple(map(other.image.__getitem__, self.image))
        return _wrap(out)

    def inverse(self) -> "Permutation":
        out = [0] * len(self.image)
        for i, x in enumerate(self.image):
            out[x] = i
        return _wrap(tuple(out))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(len(self.image)))
        square = self.image
        while k:
            if k & 1:
                result = tuple(map(square.__getitem__, result))
            square = tuple(map(square.__getitem__, square))
            k >>= 1
        return _wrap(result)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element,
        listed in increasing order of that element."""
        out = []
        seen = [False] * len(self.image)
        for start in range(len(self.image)):
            if seen[start] or self.image[start] == start:
                seen[start] = True
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        out = 1
        seen = [False] * len(self.image)
        for start in range(len(self.image)):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
                length += 1
            out = math.lcm(out, length)
        return out

    def parity(self) -> int:
        """+1 for even, -1 for odd."""
        cycle_count = 0
        seen = [False] * len(self.image)
        for start in range(len(self.image)):
            if seen[start]:
                continue
            cycle_count += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.image[j]
        return 1 if (len(self.image) - cycle_count) % 2 == 0 else -1

    def is_centrally_symmetric(self) -> bool:
        """True when mirror positions stay mirrored: i + j = d-1 implies
        image[i] + image[j] = d-1.  Only even degrees qualify."""
        d = len(self.image)
        if d % 2:
            return False
        last = d - 1
        img = self.image
        return all(img[i] + img[last - i] == last for i in range(d // 2))

    def pair_permutation(self) -> "Permutation":
        """Collapse a centrally symmetric permutation of 2n points to its
        action on the n mirror pairs {i, 2n-1-i}, indexed by the smaller
        element in each pair."""
        if not self.is_centrally_symmetric():
            raise ValueError("pair action requires a centrally symmetric permutation")
        d = len(self.image)
        return Permutation(min(x, d - 1 - x) for x in self.image[: d // 2])

    def pair_parity(self) -> int:
        return self.pair_permutation().parity()

    def arrangement(self) -> tuple[int, ...]:
        """Card labels top to bottom after applying this shuffle to a sorted
        deck.  This is the inverse of the image map."""
        return self.inverse().image

    # --- text forms (bit-exact, shared with the command line) ---

    def to_image_text(self) -> str:
        return ",".join(map(str, self.image))

    @classmethod
    def from_image_text(cls, text: str) -> "Permutation":
        parts = text.strip().split(",")
        try:
            return cls(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"bad image text: {text!r}") from None

    def to_cycle_text(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    @classmethod
    def from_cycle_text(cls, text: str, degree: int) -> "Permutation":
        stripped = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s]*\))+", stripped):
            raise ValueError(f"bad cycle text: {text!r}")
        image = list(range(degree))
        touched = set()
        for body in re.findall(r"\(([^()]*)\)", stripped):
            points = [int(tok) for tok in body.split()]
            if any(p >= degree for p in points):
                raise ValueError(f"cycle point out of range for degree {degree}")
            if len(set(points)) != len(points) or touched & set(points):
                raise ValueError("cycles are not disjoint")
            touched.update(points)
            for a, b in zip(points, points[1:] + points[:1]):
                image[a] = b
        return cls(image)


def _wrap(img: tuple[int, ...]) -> Permutation:
    # internal fast path: img is already known to be a bijection
    p = object.__new__(Permutation)
    object.__setattr__(p, "image", img)
    return p


def compose(first: Permutation, second: Permutation) -> Permutation:
    """Apply ``first``, then ``second``."""
    return first * second


def compose_all(perms: Iterable[Permutation], degree: int) -> Permutation:
    out = Permutation.identity(degree)
    for p in perms:
        out = out * p
    return out


def random_centrally_symmetric(rng, n: int) -> Permutation:
    """A uniformly random centrally symmetric permutation of 2n points,
    built from a random pair action plus independent mirror flips."""
    top = list(range(n))
    rng.shuffle(top)
    d = 2 * n
    image = [0] * d
    for i in range(n):
        target = top[i] if rng.random() < 0.5 else d - 1 - top[i]
        image[i] = target
        image[d - 1 - i] = d - 1 - target
    return Permutation(image)


def all_permutations(degree: int) -> Iterator[Permutation]:
    from itertools import permutations as _perms

    for img in _perms(range(degree)):
        yield _wrap(img)
