"""Colex shellings with minimal new faces, plus shelling verification.

Listing the facets of P^{d,k,n} in colexicographic order is a shelling,
and the minimal new face G_j of each step has two independent
descriptions: a direct run-parity rule on the facet (nonrecursive) and a
reduction through the left-shift map to the cyclic case n = k
(recursive).  Both are implemented; their agreement on every instance is
one of the standing cross-checks.

The verifiers at the bottom certify shellings from first principles:
interval partition of the face lattice, Booleanness of each step
interval, and the topological definition (each facet meets the earlier
ones in an initial segment of a shelling of its own boundary, checked
recursively).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .combinat import (
    Interval,
    Params,
    VertexSet,
    even_positions,
    maximal_runs,
    run_containing,
)
from .lattice import FaceLattice
from .multiplex import multiplex_facets
from .ordinary import enumerate_facets, lsh


@dataclass(frozen=True)
class ShellingStep:
    """Step j of a shelling: facet F_j with its minimal new face G_j."""

    index: int
    facet: VertexSet
    new_face: VertexSet


@dataclass(frozen=True)
class FaceDecomposition:
    """Run decomposition of a facet driving the new-face rule.

    ``anchored`` collects the vertices glued to colex-earlier facets (the
    exceptional left part), ``evens`` the even-length interior runs, and
    ``tail`` the trailing run of unconditionally new vertices: the run
    containing n when n is in the facet, or the singleton {max F} in
    multiplex mode with k <= max F <= n-1.
    """

    anchored: VertexSet
    evens: tuple[Interval, ...]
    tail: Interval | None


def decompose_facet(face: VertexSet, p: Params) -> FaceDecomposition:
    """Split a facet into anchored part, even interior runs, and tail.

    Raises ValueError when the leftover runs are not all of even length,
    which signals that the input is not a facet of p.
    """
    if not face:
        raise ValueError("empty face")
    k, n = p.k, p.n
    mx = face[-1]
    if p.is_multiplex and k <= mx <= n - 1:
        # The general rule below assumes k > d here; in multiplex mode
        # every vertex but the maximum is anchored and the maximum alone
        # is new.
        return FaceDecomposition(face[:-1], (), Interval(mx, mx))

    runs = maximal_runs(face)
    tail = runs[-1] if mx == n else None
    anchored_runs: list[Interval] = []
    if mx <= k - 1:
        if 0 not in face:
            raise ValueError(f"{face}: low facet must contain 0")
        anchored_runs.append(run_containing(face, 0))
    elif mx <= n - 1:
        if mx - k not in face:
            raise ValueError(f"{face}: expected {mx - k} in a middle facet")
        anchored_runs.append(run_containing(face, mx - k))
        if mx - k + 2 in face:
            second = run_containing(face, mx - k + 2)
            if second not in anchored_runs:
                anchored_runs.append(second)
    else:
        if n - k in face:
            anchored_runs.append(run_containing(face, n - k))
    if tail is not None and tail in anchored_runs:
        raise ValueError(f"{face}: anchored run collides with the tail run")

    evens: list[Interval] = []
    for run in runs:
        if run in anchored_runs or run == tail:
            continue
        if run.size % 2 != 0:
            raise ValueError(f"{face}: leftover run {run} has odd length")
        evens.append(run)
    anchored = tuple(v for run in anchored_runs for v in run.members())
    return FaceDecomposition(tuple(sorted(anchored)), tuple(evens), tail)


def minimal_new_face_nonrecursive(face: VertexSet, p: Params) -> VertexSet:
    """G_j by the direct rule: even positions of the even runs, plus tail."""
    dec = decompose_facet(face, p)
    out: list[int] = []
    for run in dec.evens:
        out.extend(even_positions(run))
    if dec.tail is not None:
        out.extend(dec.tail.members())
    return tuple(sorted(out))


def _cyclic_new_face(face: VertexSet, p: Params) -> VertexSet:
    """Base case n = k: runs touching k are new, runs touching 0 anchored,
    interior runs contribute their even positions."""
    out: list[int] = []
    for run in maximal_runs(face):
        if p.k in run:
            out.extend(run.members())
        elif 0 in run:
            continue
        else:
            if run.size % 2 != 0:
                raise ValueError(f"{face}: interior run {run} has odd length")
            out.extend(even_positions(run))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def minimal_new_face_recursive(face: VertexSet, p: Params) -> VertexSet:
    """G_j by reduction to the cyclic base through left shifts.

    A facet not touching the top two labels is already a facet of the
    polytope one size down; otherwise its left shift is, and the new face
    shifts back up with it.
    """
    d, k, n = p.d, p.k, p.n
    if n == k:
        return _cyclic_new_face(face, p)
    if face[-1] <= n - 2:
        return minimal_new_face_recursive(face, Params(d, k, n - 1))
    below = minimal_new_face_recursive(lsh(face, p), Params(d, k, n - 1))
    if not below:
        # The left shift hit the colex-first facet, whose new face is
        # empty; this only happens in multiplex mode at n = d+1, where
        # the correct new face is the top vertex alone.
        return (face[-1],)
    return tuple(v + 1 for v in below)


def colex_shelling(p: Params) -> list[ShellingStep]:
    """The colex facet order with each step's minimal new face."""
    facets = enumerate_facets(p)
    steps = [
        ShellingStep(j, f, minimal_new_face_nonrecursive(f, p))
        for j, f in enumerate(facets, 1)
    ]
    if steps[0].new_face != ():
        raise AssertionError("first shelling step must introduce no new face")
    if steps[-1].new_face != steps[-1].facet:
        raise AssertionError("last shelling step must be entirely new")
    return steps


# -- verification ---------------------------------------------------------


def verify_shelling_partition(
    lattice: FaceLattice, steps: list[ShellingStep]
) -> tuple[bool, VertexSet | None]:
    """Every face except the top must lie in exactly one [G_j, F_j].

    The empty face belongs to step 1.  Returns (ok, witness).
    """
    counts = np.zeros(len(lattice), dtype=np.int64)
    for step in steps:
        counts[lattice.interval_rows(step.new_face, step.facet)] += 1
    expected = np.ones(len(lattice), dtype=np.int64)
    expected[-1] = 0
    bad = np.flatnonzero(counts != expected)
    if bad.size:
        return False, lattice.faces[int(bad[0])]
    return True, None


def boolean_interval_check(lattice: FaceLattice, bottom: VertexSet, top: VertexSet) -> bool:
    """Certify that the interval [bottom, top] is a Boolean lattice.

    Checks the element count 2^c, the atom count c, and that joins of
    atom subsets are pairwise distinct, which pins the isomorphism type.
    """
    rows = lattice.interval_rows(bottom, top)
    c = lattice.dim(top) - lattice.dim(bottom)
    if len(rows) != 2**c:
        return False
    dims = np.asarray(lattice.dims)
    bottom_dim = lattice.dim(bottom)
    atom_rows = [r for r in rows.tolist() if dims[r] == bottom_dim + 1]
    if len(atom_rows) != c:
        return False
    interval_masks = lattice._masks[rows]
    atom_masks = [int(lattice._masks[r]) for r in atom_rows]
    bottom_mask = int(lattice._masks[lattice.index(bottom)])
    joins: set[int] = set()
    for bits in range(2**c):
        union = bottom_mask
        for t in range(c):
            if bits >> t & 1:
                union |= atom_masks[t]
        covering = interval_masks[(interval_masks & np.uint64(union)) == union]
        joins.add(int(np.bitwise_and.reduce(covering)))
    return len(joins) == 2**c


# -- topological shelling (Definition-level certification) ----------------

_STATE_BUDGET = 500_000


def _positional_ridges(e: int, p: int) -> list[VertexSet]:
    """Facets of an e-multiplex with p+1 vertices, in position space."""
    if e == 1:
        if p != 1:
            raise ValueError(f"a 1-face has exactly 2 vertices, got {p + 1}")
        return [(0,), (1,)]
    return multiplex_facets(e, p)


@lru_cache(maxsize=None)
def _ridge_sets(e: int, p: int) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(r) for r in _positional_ridges(e, p))


class _SegmentChecker:
    """Decides whether a ridge set is an initial segment of some shelling
    of the boundary of an e-multiplex, by memoized depth-first search."""

    def __init__(self) -> None:
        self.segment_memo: dict[tuple[int, int, frozenset[int]], bool] = {}
        self.complete_memo: dict[tuple[int, int, frozenset[int]], bool] = {}
        self.states = 0

    def _spend(self) -> None:
        self.states += 1
        if self.states > _STATE_BUDGET:
            raise RuntimeError(
                "topological shelling search exceeded its state budget"
            )

    def is_initial_segment(self, e: int, p: int, chosen: frozenset[int]) -> bool:
        """Can ``chosen`` be ordered as the start of a shelling of the
        whole boundary of the e-multiplex with p+1 vertices?"""
        if e <= 1:
            return True
        key = (e, p, chosen)
        if key in self.segment_memo:
            return self.segment_memo[key]
        result = self._search(e, p, frozenset(), chosen)
        self.segment_memo[key] = result
        return result

    def _facet_ok(
        self, e: int, p: int, placed: frozenset[int], f: int
    ) -> bool:
        if not placed:
            return True
        facets = _ridge_sets(e, p)
        fv = facets[f]
        sub_e = e - 1
        sub_p = len(fv) - 1
        fv_sorted = sorted(fv)
        sub_ridges = _ridge_sets(sub_e, sub_p)
        ridge_vertex_sets = [
            frozenset(fv_sorted[t] for t in ridge) for ridge in sub_ridges
        ]
        covering = [
            idx
            for idx, rv in enumerate(ridge_vertex_sets)
            if any(rv <= facets[q] for q in placed)
        ]
        if not covering:
            return False
        covering_sets = [ridge_vertex_sets[idx] for idx in covering]
        for q in placed:
            meet = fv & facets[q]
            if meet and not any(meet <= rv for rv in covering_sets):
                return False
        return self.is_initial_segment(
            sub_e, sub_p, frozenset(covering)
        )

    def _search(
        self, e: int, p: int, placed: frozenset[int], chosen: frozenset[int]
    ) -> bool:
        seen: set[frozenset[int]] = set()
        return self._order_chosen(e, p, placed, chosen, seen)

    def _order_chosen(
        self,
        e: int,
        p: int,
        placed: frozenset[int],
        chosen: frozenset[int],
        seen: set[frozenset[int]],
    ) -> bool:
        if chosen <= placed:
            return self._completable(e, p, placed)
        if placed in seen:
            return False
        seen.add(placed)
        self._spend()
        for f in sorted(chosen - placed):
            if self._facet_ok(e, p, placed, f):
                if self._order_chosen(e, p, placed | {f}, chosen, seen):
                    return True
        return False

    def _completable(self, e: int, p: int, placed: frozenset[int]) -> bool:
        """Can ``placed`` be extended by the remaining facets to a full
        shelling?  Depends only on the placed set, so globally memoized."""
        key = (e, p, placed)
        if key in self.complete_memo:
            return self.complete_memo[key]
        self._spend()
        total = len(_ridge_sets(e, p))
        if len(placed) == total:
            self.complete_memo[key] = True
            return True
        result = False
        for f in range(total):
            if f in placed:
                continue
            if self._facet_ok(e, p, placed, f):
                if self._completable(e, p, placed | {f}):
                    result = True
                    break
        self.complete_memo[key] = result
        return result


_checker = _SegmentChecker()


def verify_shelling_topological(
    lattice: FaceLattice, facet_order: list[VertexSet]
) -> bool:
    """Certify a facet order as a shelling straight from the definition.

    For each facet past the first: its intersections with the earlier
    facets must be covered by the ridges fully contained in earlier
    facets, that ridge set must be nonempty, and it must be orderable as
    the start of a shelling of the facet's own boundary (recursively).
    Ridges come from the facet's own multiplex structure in position
    space, so only the vertex sets are needed.
    """
    d = lattice.d
    for j, face in enumerate(facet_order):
        if j == 0:
            continue
        fv = set(face)
        ridge_positions = _ridge_sets(d - 1, len(face) - 1)
        ridge_sets = [frozenset(face[t] for t in ridge) for ridge in ridge_positions]
        earlier = [set(g) for g in facet_order[:j]]
        covering = [
            idx
            for idx, rv in enumerate(ridge_sets)
            if any(rv <= g for g in earlier)
        ]
        if not covering:
            return False
        covering_sets = [ridge_sets[idx] for idx in covering]
        for g in earlier:
            meet = fv & g
            if meet and not any(meet <= rv for rv in covering_sets):
                return False
        if not _checker.is_initial_segment(
            d - 1, len(face) - 1, frozenset(covering)
        ):
            return False
    return True


# -- table emitters -------------------------------------------------------


def presence_grid(face: VertexSet, n: int) -> str:
    """Vertex v printed as its last digit at column v, blank elsewhere."""
    return "".join(str(v % 10) if v in set(face) else " " for v in range(n + 1))


def face_digits(face: VertexSet, n: int) -> str:
    """Compact rendering of a face: digit string for n <= 9, else commas."""
    if not face:
        return "-"
    if n <= 9:
        return "".join(str(v) for v in face)
    return ",".join(str(v) for v in face)


def shelling_table_rows(p: Params) -> list[dict]:
    return [
        {"j": s.index, "F": list(s.facet), "G": list(s.new_face)}
        for s in colex_shelling(p)
    ]


def shelling_table_text(p: Params) -> str:
    n = p.n
    steps = colex_shelling(p)
    header_axis = "".join(str(v % 10) for v in range(n + 1))
    lines = [f"  j  {header_axis}  G"]
    for s in steps:
        lines.append(
            f"{s.index:>3}  {presence_grid(s.facet, n)}  {face_digits(s.new_face, n)}"
        )
    return "\n".join(lines) + "\n"
