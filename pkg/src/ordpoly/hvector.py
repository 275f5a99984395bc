"""Toric h-vectors by four independent routes, plus step contributions.

The four routes: the toric g/h recursion over the whole face lattice, a
closed binomial form, the modified-f-vector expansion, and the h-vector
of the shallow boundary triangulation (module ``triangulation``).  Their
exact agreement on every instance is the library's core claim.

Also here: the fake-simplicial h' (from the shelling's new-face sizes or
from the f-vector), and the per-step contribution polynomials a_j that
measure h - h', computed by two routes that must agree.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

import numpy as np

from .combinat import Params, VertexSet
from .lattice import FaceLattice
from .polynomial import IntPolynomial, x_minus_one_power

HVector = tuple[int, ...]


def h_to_polynomial(h: Sequence[int]) -> IntPolynomial:
    """Encode (h_0..h_d) as sum of h_i x^{d-i}."""
    return IntPolynomial(list(reversed(h)))


def polynomial_to_h(poly: IntPolynomial, d: int) -> HVector:
    """Decode a degree-<=d polynomial into (h_0..h_d), h_i at x^{d-i}."""
    if poly.degree > d:
        raise ValueError(f"degree {poly.degree} exceeds {d}")
    return tuple(poly.coefficient(d - i) for i in range(d + 1))


# -- toric recursion ------------------------------------------------------


def toric_tables(lattice: FaceLattice) -> tuple[list[HVector], list[tuple[int, ...]]]:
    """h-vector and g-coefficients of (the boundary of) every face.

    Faces are processed bottom-up; the g of a face only depends on faces
    strictly below it, so one pass suffices.  Index -1 into the h table
    is the empty face whose g is 1 by convention.
    """
    dims = np.asarray(lattice.dims)
    count = len(lattice.faces)
    g_width = lattice.d // 2 + 1
    g_table = np.zeros((count, g_width), dtype=np.int64)
    h_list: list[HVector] = [()] * count
    g_list: list[tuple[int, ...]] = [(1,)] * count

    for row in range(count):
        e = int(dims[row])
        if e == -1:
            g_table[row, 0] = 1
            h_list[row] = (1,)
            continue
        below = lattice.downset(row)
        below = below[below != row]
        h_coeffs = [0] * (e + 1)
        for t in range(-1, e):
            group = below[dims[below] == t]
            if not group.size:
                continue
            g_sum = g_table[group].sum(axis=0)
            pascal = x_minus_one_power(e - 1 - t)
            for i, gi in enumerate(g_sum.tolist()):
                if gi:
                    for jdx, b in enumerate(pascal):
                        h_coeffs[i + jdx] += gi * b
        h_vec = tuple(reversed(h_coeffs))
        if h_vec[0] != 1:
            raise ValueError(
                f"toric recursion gave h_0 = {h_vec[0]} on a {e}-face; "
                "the input lattice is not Eulerian"
            )
        h_list[row] = h_vec
        g_coeffs = [1] + [
            h_vec[i] - h_vec[i - 1] for i in range(1, e // 2 + 1)
        ]
        g_list[row] = tuple(g_coeffs)
        g_table[row, : len(g_coeffs)] = g_coeffs
    return h_list, g_list


def toric_h(lattice: FaceLattice) -> HVector:
    """Toric h-vector of the polytope, by the g-recursion over all faces."""
    h_list, _ = toric_tables(lattice)
    return h_list[-1]


def toric_g(lattice: FaceLattice, face: VertexSet | None = None) -> IntPolynomial:
    """Toric g-polynomial of a face (default: the whole polytope)."""
    h_list, g_list = toric_tables(lattice)
    if face is None:
        h = h_list[-1]
        e = lattice.d
        return IntPolynomial([1] + [h[i] - h[i - 1] for i in range(1, e // 2 + 1)])
    return IntPolynomial(g_list[lattice.index(face)])


def face_g_polynomials(lattice: FaceLattice) -> list[IntPolynomial]:
    """g-polynomial of every face, aligned with ``lattice.faces``."""
    _, g_list = toric_tables(lattice)
    return [IntPolynomial(g) for g in g_list]


# -- closed form ----------------------------------------------------------


def h_closed_form(p: Params) -> HVector:
    """Binomial closed form for odd d, symmetric by construction."""
    d, k, n = p.d, p.k, p.n
    if d % 2 == 0:
        raise ValueError("the closed form applies to odd dimension only")
    half = [1] + [
        comb(k - d + i, i) + (n - k) * comb(k - d + i - 1, i - 1)
        for i in range(1, p.m + 1)
    ]
    return tuple(half + list(reversed(half)))


# -- modified f-vector route ----------------------------------------------


def modified_f(f: Sequence[int], flag0: Sequence[int]) -> tuple[int, ...]:
    """Modified f-vector (fbar_{-1} .. fbar_{d-1}) from f and f_{0,i}.

    Each face's vertex surplus over a simplex is charged to the face and
    to its one-lower neighbors, which is what makes the plain simplicial
    transform exact for multiplicial polytopes.
    """
    d = len(f)
    if len(flag0) != d - 1:
        raise ValueError(f"need {d - 1} flag entries, got {len(flag0)}")
    fb = [0] * (d + 1)
    fb[0] = 1
    fb[1] = f[0]
    for j in range(1, d - 1):
        fb[j + 1] = (
            f[j]
            + (flag0[j] - (j + 2) * f[j + 1])
            + (flag0[j - 1] - (j + 1) * f[j])
        )
    if d >= 2:
        fb[d] = f[d - 1] + (flag0[d - 2] - d * f[d - 1])
    return tuple(fb)


def _simplicial_transform(counts: Sequence[int], d: int) -> HVector:
    """Expand sum of counts[i] (x-1)^{d-i} and read off h_i at x^{d-i}."""
    if len(counts) != d + 1:
        raise ValueError(f"need d+1 = {d + 1} counts, got {len(counts)}")
    acc = IntPolynomial.zero()
    for i, c in enumerate(counts):
        acc = acc + c * IntPolynomial(x_minus_one_power(d - i))
    return polynomial_to_h(acc, d)


def multiplicial_h(f: Sequence[int], flag0: Sequence[int]) -> HVector:
    """Toric h from f and flag data alone, via the modified f-vector."""
    fb = modified_f(f, flag0)
    return _simplicial_transform(fb, len(f))


# -- fake-simplicial h' ---------------------------------------------------


def h_prime_from_shelling(steps, d: int) -> HVector:
    """h'_i = number of shelling steps whose new face has i vertices."""
    out = [0] * (d + 1)
    for step in steps:
        size = len(step.new_face)
        if size > d:
            raise ValueError(f"new face {step.new_face} larger than d")
        out[size] += 1
    return tuple(out)


def h_prime_from_f(f: Sequence[int], d: int) -> HVector:
    """The simplicial f-to-h transform applied to a possibly nonsimplicial
    f-vector."""
    if len(f) != d:
        raise ValueError(f"need {d} entries, got {len(f)}")
    return _simplicial_transform((1, *f), d)


def f_from_h_prime(h_prime: Sequence[int]) -> tuple[int, ...]:
    """Inverse transform: recover the f-vector from h'."""
    d = len(h_prime) - 1
    return tuple(
        sum(comb(d - i, ell - i + 1) * h_prime[i] for i in range(ell + 2))
        for ell in range(d)
    )


# -- per-step contribution polynomials ------------------------------------


def shelling_contributions(
    p: Params,
    lattice: FaceLattice | None = None,
    steps=None,
    triangulation_steps=None,
) -> dict[int, IntPolynomial]:
    """Contribution a_j of each shelling step to h - h'.

    Computed two ways: (a) vertex-surplus counting over the step interval
    [G_j, F_j], basis-changed from powers of (x-1); (b) counting the
    new-face sizes of the non-final triangulation windows inside F_j.
    The routes must agree entry by entry; any mismatch raises.

    Each a_j is returned in the h alignment: a_{j,i} is the coefficient
    of x^{d-i}.
    """
    from .lattice import build_face_lattice
    from .ordinary import enumerate_facets
    from .shelling import colex_shelling
    from .triangulation import triangulation_shelling

    d = p.d
    if lattice is None:
        lattice = build_face_lattice(enumerate_facets(p), d)
    if steps is None:
        steps = colex_shelling(p)
    if triangulation_steps is None:
        triangulation_steps = triangulation_shelling(p)

    by_facet: dict[int, list] = {}
    for t in triangulation_steps:
        by_facet.setdefault(t.facet_index, []).append(t)

    dims = np.asarray(lattice.dims)
    out: dict[int, IntPolynomial] = {}
    for step in steps:
        rows = lattice.interval_rows(step.new_face, step.facet)
        b_coeffs = [0] * d
        for r in rows.tolist():
            e = int(dims[r])
            if 0 <= e <= d - 1:
                surplus = len(lattice.faces[r]) - (e + 1)
                if surplus:
                    b_coeffs[d - 1 - e] += surplus
        a_poly = IntPolynomial(b_coeffs).taylor_shift(-1)
        flag_route = tuple(a_poly.coefficient(d - 1 - i) for i in range(d + 1))

        windows = by_facet.get(step.index, [])
        last = len(step.facet) - d + 1
        window_route = [0] * (d + 1)
        for t in windows:
            if t.window_index <= last - 1:
                window_route[len(t.new_face)] += 1
        if flag_route != tuple(window_route):
            raise RuntimeError(
                f"contribution routes disagree at step {step.index}: "
                f"interval counting gives {flag_route}, "
                f"window counting gives {tuple(window_route)}"
            )
        out[step.index] = IntPolynomial.monomial(1, 1) * a_poly
    return out


def contribution_total(contributions: dict[int, IntPolynomial]) -> IntPolynomial:
    acc = IntPolynomial.zero()
    for poly in contributions.values():
        acc = acc + poly
    return acc
