"""Exact computations in finite permutation groups given by generators.

Two independent engines, kept deliberately separate so they can check each
other:

* :func:`bfs_enumerate` walks the Cayley graph breadth first and returns the
  full element set.  Exact but memory bound; it refuses to grow past a cap.

* :class:`StabilizerChain` runs the deterministic Schreier-Sims procedure,
  producing a base, strong generating set and transversals.  The group
  order falls out as the product of orbit sizes and membership testing is
  sifting; factorial-scale orders are fine since Python integers do not
  overflow.

Internally permutations are raw image tuples (BFS packs them into bytes for
compact hashing, which caps that engine at degree 255).  Composition is
"left then right" throughout, matching :mod:`unshuffle.perm`.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .perm import Permutation, _wrap

DEFAULT_CAP = 10_000_000


class EnumerationCapExceeded(RuntimeError):
    """BFS closure grew past the element cap; use a StabilizerChain instead."""


def _raw(p) -> tuple[int, ...]:
    if isinstance(p, Permutation):
        return p.image
    return Permutation(p).image


def _mul(p, q):
    # apply p then q, raw tuples
    return tuple(map(q.__getitem__, p))


def _inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _normalize(generators, degree=None):
    raws = [_raw(g) for g in generators]
    if degree is None:
        if not raws:
            raise ValueError("degree is required when no generators are given")
        degree = len(raws[0])
    if any(len(g) != degree for g in raws):
        raise ValueError("generators must all have the same degree")
    identity = tuple(range(degree))
    return [g for g in raws if g != identity], degree, identity


class Closure:
    """Result of a BFS enumeration: the packed element set of a group."""

    __slots__ = ("degree", "elements")

    def __init__(self, degree: int, elements: frozenset[bytes]):
        self.degree = degree
        self.elements = elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return bytes(_raw(p)) in self.elements

    def __iter__(self) -> Iterator[Permutation]:
        for packed in sorted(self.elements):
            yield _wrap(tuple(packed))

    def __eq__(self, other) -> bool:
        return isinstance(other, Closure) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)


def bfs_enumerate(generators: Iterable, cap: int = DEFAULT_CAP) -> Closure:
    """Enumerate every element of the group the generators produce.

    Raises :class:`EnumerationCapExceeded` as soon as the element count
    passes ``cap``.
    """
    raws, degree, identity = _normalize(generators)
    if degree > 255:
        raise ValueError("bfs_enumerate packs images into bytes; degree must be <= 255")
    gens = [bytes(g) for g in raws]
    start = bytes(identity)
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for p in frontier:
            for g in gens:
                q = bytes(map(g.__getitem__, p))
                if q not in seen:
                    if len(seen) >= cap:
                        raise EnumerationCapExceeded(
                            f"group has more than {cap} elements; "
                            "enumeration is infeasible, use the schreier engine"
                        )
                    seen.add(q)
                    next_frontier.append(q)
        frontier = next_frontier
    return Closure(degree, frozenset(seen))


class StabilizerChain:
    """Base and strong generating set via deterministic Schreier-Sims.

    Base points are chosen greedily as the smallest point moved by the
    permutation that forced a new level, so reruns on the same generator
    list produce the identical chain.  Level i stores the generators of the
    stabilizer of the first i base points, the orbit of base point i under
    them, and a transversal of coset representatives (with cached inverses;
    ``transversal[i][x]`` maps base[i] to x).

    The build closes every level under Schreier generators, so on return
    ``order`` is exact and ``contains`` is a complete membership test.
    """

    def __init__(self, generators: Iterable, degree: int | None = None):
        raws, degree, identity = _normalize(generators, degree)
        self.degree = degree
        self._identity = identity
        self._points: list[int] = []
        self._gens: list[list[tuple[int, ...]]] = []
        self._tr: list[dict[int, tuple[int, ...]]] = []
        self._trinv: list[dict[int, tuple[int, ...]]] = []

        for g in raws:
            if all(g[b] == b for b in self._points):
                self._add_level(g)
        for i, _ in enumerate(self._points):
            self._gens[i] = [g for g in raws if all(g[b] == b for b in self._points[:i])]
        for i in reversed(range(len(self._points))):
            self._complete_level(i)

        self.base: tuple[int, ...] = tuple(self._points)
        order = 1
        for tr in self._tr:
            order *= len(tr)
        self.order: int = order

    # --- public views ---

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        seen: dict[tuple[int, ...], None] = {}
        for level in self._gens:
            for g in level:
                seen.setdefault(g)
        return tuple(_wrap(g) for g in seen)

    @property
    def transversals(self) -> tuple[dict[int, Permutation], ...]:
        return tuple({x: _wrap(u) for x, u in tr.items()} for tr in self._tr)

    def contains(self, p) -> bool:
        raw = _raw(p)
        if len(raw) != self.degree:
            return False
        residue, _ = self._sift(raw, 0)
        return residue == self._identity

    __contains__ = contains

    def sift(self, p) -> Permutation:
        """Residue after stripping coset representatives; identity means member."""
        residue, _ = self._sift(_raw(p), 0)
        return _wrap(residue)

    # --- construction ---

    def _add_level(self, moving: tuple[int, ...]) -> None:
        point = next(i for i, x in enumerate(moving) if x != i)
        self._points.append(point)
        self._gens.append([])
        self._tr.append({point: self._identity})
        self._trinv.append({point: self._identity})

    def _rebuild_transversal(self, i: int) -> None:
        point = self._points[i]
        gens = self._gens[i]
        tr = {point: self._identity}
        trinv = {point: self._identity}
        frontier = [point]
        while frontier:
            next_frontier = []
            for x in frontier:
                u = tr[x]
                for g in gens:
                    y = g[x]
                    if y not in tr:
                        v = _mul(u, g)
                        tr[y] = v
                        trinv[y] = _inv(v)
                        next_frontier.append(y)
            frontier = next_frontier
        self._tr[i] = tr
        self._trinv[i] = trinv

    def _sift(self, p: tuple[int, ...], start: int):
        for i in range(start, len(self._points)):
            x = p[self._points[i]]
            uinv = self._trinv[i].get(x)
            if uinv is None:
                return p, i
            p = _mul(p, uinv)
        return p, len(self._points)

    def _complete_level(self, i: int) -> None:
        # close level i under Schreier generators, assuming deeper levels
        # are already closed; newly found residues are pushed down and the
        # touched levels are re-closed deepest first
        self._rebuild_transversal(i)
        tr = self._tr[i]
        trinv = self._trinv[i]
        orbit = list(tr)
        gens = self._gens[i]  # stable: additions go to deeper levels only
        for x in orbit:
            u = tr[x]
            for g in gens:
                schreier = _mul(_mul(u, g), trinv[g[x]])
                if schreier == self._identity:
                    continue
                residue, j = self._sift(schreier, i + 1)
                if residue == self._identity:
                    continue
                if j == len(self._points):
                    self._add_level(residue)
                for level in range(i + 1, j + 1):
                    self._gens[level].append(residue)
                for level in range(j, i, -1):
                    self._complete_level(level)


def schreier_sims(generators: Iterable, degree: int | None = None) -> StabilizerChain:
    """Convenience constructor for :class:`StabilizerChain`."""
    return StabilizerChain(generators, degree)


def group_order(generators: Sequence, cap: int = DEFAULT_CAP, engine: str = "auto") -> int:
    """Order of the generated group by the requested engine.

    A stabilizer chain answers order-only questions quickly at any scale,
    so that is what ``auto`` uses; ask for ``bfs`` when you want the same
    number from the independent engine (it raises
    :class:`EnumerationCapExceeded` past the cap).
    """
    if engine == "bfs":
        return bfs_enumerate(generators, cap).order
    if engine in ("auto", "schreier"):
        return StabilizerChain(generators).order
    raise ValueError(f"unknown engine {engine!r}")
