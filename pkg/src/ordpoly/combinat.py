"""Base combinatorial vocabulary shared by every module.

A face of a polytope or of a triangulation is identified with its vertex
set, stored as a strictly increasing tuple of integer labels.  This module
supplies the primitive operations on such sets: retraction (clamping into
[0, n]), Gale evenness, paired subsets, maximal runs, even positions, and
the colexicographic order used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

VertexSet = tuple[int, ...]


class Interval(NamedTuple):
    """Integer interval [lo, hi], inclusive; empty when hi < lo."""

    lo: int
    hi: int

    @property
    def size(self) -> int:
        return max(0, self.hi - self.lo + 1)

    @property
    def is_empty(self) -> bool:
        return self.hi < self.lo

    def members(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and self.lo <= v <= self.hi


@dataclass(frozen=True, order=True)
class Params:
    """Parameter triple (d, k, n) of an ordinary polytope P^{d,k,n}.

    Valid combinations:

    * k > d: the genuinely nonsimplicial, nonmultiplex family; requires
      d odd with d >= 5.
    * k == d: multiplex mode M^{d,n}; any d >= 2 is allowed.
    * n == k: cyclic mode C^{d,k} (simplicial boundary).

    Always n >= k >= d.
    """

    d: int
    k: int
    n: int

    def __post_init__(self) -> None:
        d, k, n = self.d, self.k, self.n
        if not (isinstance(d, int) and isinstance(k, int) and isinstance(n, int)):
            raise ValueError("d, k, n must be integers")
        if not n >= k >= d:
            raise ValueError(f"need n >= k >= d, got d={d}, k={k}, n={n}")
        if k == d:
            if d < 2:
                raise ValueError(f"multiplex mode needs d >= 2, got d={d}")
        else:
            if d < 5 or d % 2 == 0:
                raise ValueError(
                    f"k > d requires odd d >= 5, got d={d}, k={k}"
                )

    @property
    def m(self) -> int:
        return (self.d - 1) // 2

    @property
    def is_multiplex(self) -> bool:
        return self.k == self.d

    @property
    def is_cyclic(self) -> bool:
        return self.n == self.k

    def __str__(self) -> str:
        return f"P^{{{self.d},{self.k},{self.n}}}"


def vertex_set(values: Iterable[int]) -> VertexSet:
    """Sorted, deduplicated tuple of integer labels."""
    return tuple(sorted(set(values)))


def retract(values: Iterable[int], n: int) -> VertexSet:
    """Clamp every element into [0, n], then deduplicate and sort.

    Negative elements collapse onto 0 and elements above n collapse onto n,
    so the result can be much smaller than the input.
    """
    if n < 0:
        raise ValueError(f"retraction bound must be >= 0, got {n}")
    return tuple(sorted({min(max(v, 0), n) for v in values}))


def maximal_runs(face: VertexSet) -> list[Interval]:
    """Partition a vertex set into maximal intervals of consecutive labels."""
    runs: list[Interval] = []
    if not face:
        return runs
    lo = prev = face[0]
    for v in face[1:]:
        if v != prev + 1:
            runs.append(Interval(lo, prev))
            lo = v
        prev = v
    runs.append(Interval(lo, prev))
    return runs


def run_containing(face: VertexSet, v: int) -> Interval:
    """The maximal run of consecutive labels of ``face`` that contains v."""
    for run in maximal_runs(face):
        if v in run:
            return run
    raise ValueError(f"{v} is not in {face}")


def even_positions(iv: Interval) -> VertexSet:
    """Second, fourth, ... elements of the interval: {lo+1, lo+3, ...}."""
    return tuple(range(iv.lo + 1, iv.hi + 1, 2))


def is_gale(subset: Iterable[int], ground: Interval) -> bool:
    """Gale evenness of ``subset`` inside the ordered ground interval.

    True iff between any two consecutive elements of ground minus the
    subset there is an even count of subset elements.  Runs touching an
    end of the ground interval are exempt.
    """
    sub = set(subset)
    if not all(v in ground for v in sub):
        raise ValueError(f"{sorted(sub)} is not a subset of [{ground.lo},{ground.hi}]")
    complement = [v for v in ground.members() if v not in sub]
    for left, right in zip(complement, complement[1:]):
        if (right - left - 1) % 2 != 0:
            return False
    return True


def colex_key(face: VertexSet) -> tuple[int, ...]:
    """Sort key realizing colex order: compare largest elements first.

    Reversing the tuple makes Python's lexicographic tuple comparison read
    the sets right to left; a set that runs out of elements compares as if
    padded with minus infinity, which is exactly the colex convention for
    sets of different sizes.
    """
    return tuple(reversed(face))


def colex_compare(a: VertexSet, b: VertexSet) -> int:
    """-1, 0, or 1 as ``a`` precedes, equals, or follows ``b`` in colex."""
    ka, kb = colex_key(a), colex_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def colex_sorted(faces: Iterable[VertexSet]) -> list[VertexSet]:
    return sorted(faces, key=colex_key)


def _paired_from(lo: int, hi: int, size: int) -> Iterator[list[int]]:
    # Place the leftmost maximal run (even length, followed by a gap),
    # then recurse on the remainder of the interval.
    if size == 0:
        yield []
        return
    for start in range(lo, hi - size + 2):
        for length in range(2, size + 1, 2):
            if start + length - 1 > hi:
                break
            head = list(range(start, start + length))
            for rest in _paired_from(start + length + 1, hi, size - length):
                yield head + rest


def paired_subsets(window: Interval, size: int) -> list[VertexSet]:
    """All size-``size`` subsets of ``window`` whose maximal runs all have
    even length, in colex order.

    Odd sizes admit no such subset; the result is then empty.
    """
    if size < 0:
        raise ValueError(f"size must be >= 0, got {size}")
    if size % 2 != 0 or size > window.size:
        return [] if size else [()]
    return colex_sorted(tuple(y) for y in _paired_from(window.lo, window.hi, size))
