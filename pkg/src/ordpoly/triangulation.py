"""Shallow boundary triangulation, its shelling, and shallowness checks.

The boundary of P^{d,k,n} is triangulated by the d-element Gale subsets
of the length-k vertex windows, which are exactly the runs of d
consecutive vertices of the facets.  Listing those windows inside the
colex facet order gives a shelling whose minimal new faces U follow a
right-to-left recursion within each facet.

A generic restriction-face computation for shellings of pure simplicial
complexes lives here too; it certifies the shelling property from first
principles and serves as the independent check on the U recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .combinat import Interval, Params, VertexSet, colex_sorted, is_gale
from .hvector import HVector
from .lattice import FaceLattice
from .shelling import colex_shelling, face_digits, presence_grid


@dataclass(frozen=True)
class TriangulationStep:
    """Window ell of shelled facet j: simplex T with minimal new face U."""

    facet_index: int
    window_index: int
    simplex: VertexSet
    new_face: VertexSet


def boundary_triangulation(p: Params) -> list[VertexSet]:
    """All simplices of the triangulation, built without the shelling.

    A d-subset of the window [i, i+k] joins the triangulation when it is
    Gale in the window and contains 0, or n, or both window ends.  The
    window qualification is per window: the same set may qualify in one
    window and not another.
    """
    d, k, n = p.d, p.k, p.n
    out: set[VertexSet] = set()
    for i in range(n - k + 1):
        window = Interval(i, i + k)
        for sub in combinations(window.members(), d):
            picked = set(sub)
            if not (0 in picked or n in picked or {i, i + k} <= picked):
                continue
            if is_gale(sub, window):
                out.add(sub)
    return colex_sorted(out)


def facet_windows(face: VertexSet, d: int) -> list[VertexSet]:
    """Runs of d consecutive vertices of a facet, in position order."""
    return [face[ell : ell + d] for ell in range(len(face) - d + 1)]


def triangulation_shelling(p: Params) -> list[TriangulationStep]:
    """Steps (j, ell) in shelling order with their minimal new faces.

    The last window of facet j gets U = G_j; walking left, each window
    drops the maximum z of its right neighbor and picks up z-k and z-1.
    Every non-final window must span exactly one period (max - min = k),
    and no simplex may repeat across facets; both are asserted.
    """
    d, k = p.d, p.k
    out: list[TriangulationStep] = []
    seen: set[VertexSet] = set()
    for step in colex_shelling(p):
        windows = facet_windows(step.facet, d)
        count = len(windows)
        new_faces: list[VertexSet] = [()] * count
        new_faces[-1] = step.new_face
        for ell in range(count - 1, 0, -1):
            z = windows[ell][-1]
            lower = set(new_faces[ell])
            lower.discard(z)
            lower.update((z - k, z - 1))
            new_faces[ell - 1] = tuple(sorted(lower))
        for ell0, (simplex, new_face) in enumerate(zip(windows, new_faces)):
            if ell0 < count - 1 and simplex[-1] - simplex[0] != k:
                raise AssertionError(
                    f"window {simplex} of facet {step.facet} skips a period"
                )
            if not set(new_face) <= set(simplex):
                raise AssertionError(f"new face {new_face} escapes {simplex}")
            if simplex in seen:
                raise AssertionError(f"simplex {simplex} repeats across facets")
            seen.add(simplex)
            out.append(TriangulationStep(step.index, ell0 + 1, simplex, new_face))
    return out


def simplicial_h(steps: Sequence, d: int) -> HVector:
    """h_i = number of steps whose new face has i vertices."""
    out = [0] * (d + 1)
    for s in steps:
        out[len(s.new_face)] += 1
    return tuple(out)


def shelling_restriction_faces(simplices: Sequence[VertexSet]) -> list[VertexSet]:
    """Restriction faces of an ordered pure simplicial complex.

    U_j collects the vertices of simplex j whose opposite wall lies in an
    earlier simplex.  The shelling property itself is certified along the
    way: past the first step some wall must be covered, and every
    intersection with an earlier simplex must sit inside a covered wall.
    """
    earlier: list[int] = []
    out: list[VertexSet] = []
    for idx, simplex in enumerate(simplices):
        smask = 0
        for v in simplex:
            smask |= 1 << v
        covered = [
            (v, w)
            for v in simplex
            for w in (smask & ~(1 << v),)
            if any(w & ~e == 0 for e in earlier)
        ]
        if idx and not covered:
            raise ValueError(f"step {idx + 1} meets no earlier simplex in a wall")
        for e in earlier:
            meet = smask & e
            if meet and not any(meet & ~w == 0 for _, w in covered):
                raise ValueError(
                    f"step {idx + 1}: {simplex} meets an earlier simplex "
                    "outside every covered wall"
                )
        out.append(tuple(sorted(v for v, _ in covered)))
        earlier.append(smask)
    return out


def shallowness_check(
    simplices: Sequence[VertexSet], lattice: FaceLattice
) -> tuple[bool, VertexSet | None]:
    """Certify dim carrier(sigma) <= 2 dim sigma for every simplex face.

    Returns (True, None) or (False, witness face).
    """
    faces: set[VertexSet] = set()
    for simplex in simplices:
        for size in range(1, len(simplex) + 1):
            faces.update(combinations(simplex, size))
    ordered = sorted(faces)
    masks = np.array(
        [sum(1 << v for v in f) for f in ordered], dtype=np.uint64
    )
    carrier_dims = lattice.carrier_dims(masks)
    for face, cdim in zip(ordered, carrier_dims):
        if int(cdim) > 2 * (len(face) - 1):
            return False, face
    return True, None


# -- table emitters -------------------------------------------------------


def triangulation_table_rows(p: Params) -> list[dict]:
    return [
        {
            "j": s.facet_index,
            "l": s.window_index,
            "T": list(s.simplex),
            "U": list(s.new_face),
        }
        for s in triangulation_shelling(p)
    ]


def triangulation_table_text(p: Params) -> str:
    n = p.n
    header_axis = "".join(str(v % 10) for v in range(n + 1))
    lines = [f"  j  l  {header_axis}  U"]
    for s in triangulation_shelling(p):
        lines.append(
            f"{s.facet_index:>3} {s.window_index:>2}  "
            f"{presence_grid(s.simplex, n)}  {face_digits(s.new_face, n)}"
        )
    return "\n".join(lines) + "\n"
