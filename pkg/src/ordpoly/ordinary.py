"""Facet enumeration of P^{d,k,n} and the left/right shift maps.

Two independent constructions of the facet list are provided: direct
enumeration of the generator family (windows [i,i+2r-1] u Y u
[i+k,i+k+2r-1] retracted into [0,n]) and a recursion on n that shifts the
high facets of P^{d,k,n-1} to the right.  Their agreement is a standing
cross-check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .combinat import (
    Interval,
    Params,
    VertexSet,
    colex_sorted,
    is_gale,
    paired_subsets,
    retract,
)
from .multiplex import multiplex_facet, multiplex_facets

RawGenerator = tuple[int, ...]


def _generator_windows(p: Params):
    """Yield every raw generator set for p, as a sorted tuple of integers.

    The window origin i ranges over [-k, n]: for i < -k the left block and
    the paired part clamp onto {0} while the right block covers at most
    [0, d-3], so the retraction has fewer than d elements; for i > n the
    whole set clamps onto {n}.  Origins in between are exhaustive.
    """
    d, k, n = p.d, p.k, p.n
    for r in range(1, p.m + 1):
        paired_size = d - 2 * r - 1
        for i in range(-k, n + 1):
            blocks = list(range(i, i + 2 * r)) + list(range(i + k, i + k + 2 * r))
            for y in paired_subsets(Interval(i + 2 * r + 1, i + k - 2), paired_size):
                yield tuple(sorted(blocks + list(y)))


@lru_cache(maxsize=None)
def _facet_generator_map(p: Params) -> dict[VertexSet, list[RawGenerator]]:
    """Map each facet to every raw generator that retracts onto it."""
    d, n = p.d, p.n
    if p.is_multiplex and (d % 2 == 0 or d < 5):
        # The generator family is empty for even d (the paired part would
        # need odd size); facets come straight from the clamped-window
        # definition.  Odd d >= 5 goes through the generators even when
        # k = d, so the multiplex identity P^{d,d,n} = M^{d,n} is a real
        # cross-check.
        return {f: [] for f in multiplex_facets(d, n)}
    out: dict[VertexSet, list[RawGenerator]] = {}
    for gen in _generator_windows(p):
        facet = retract(gen, n)
        if len(facet) >= d:
            out.setdefault(facet, []).append(gen)
    return out


def enumerate_facets(p: Params) -> list[VertexSet]:
    """All facets of P^{d,k,n}, colex-sorted and deduplicated."""
    facets = colex_sorted(_facet_generator_map(p))
    if not facets:
        raise AssertionError(f"no facets found for {p}")
    return facets


def lsh(face: VertexSet, p: Params) -> VertexSet:
    """Left shift: the facet of P^{d,k,n-1} obtained by shifting down.

    Generator-free evaluation: the result minus 0 is (F-1) restricted to
    positive labels, and 0 belongs to the result iff 0 or 1 is in F.  Only
    facets with max F >= k are guaranteed to shift onto facets.
    """
    if p.n <= p.k:
        raise ValueError(f"{p} admits no left shift (n must exceed k)")
    if not face or max(face) < p.k:
        raise ValueError(f"left shift needs max F >= k, got F={face}")
    shifted = [v - 1 for v in face if v >= 2]
    if 0 in face or 1 in face:
        shifted.insert(0, 0)
    return tuple(shifted)


def rsh(face: VertexSet, p: Params) -> VertexSet:
    """Right shift: maps a facet of P^{d,k,n-1} to a facet of p.

    The shift acts on generators, not vertex sets, so every generator of
    the facet is shifted and the images are required to agree.
    """
    d, k, n = p.d, p.k, p.n
    source = Params(d, k, n - 1)
    if p.is_multiplex:
        # Clamped windows shift by index: the facet omitting i becomes the
        # facet omitting i+1, and F_0 of the source maps onto F_0 again
        # only through its generator; index lookup keeps this exact.
        facets = multiplex_facets(d, n - 1)
        try:
            i = facets.index(face)
        except ValueError:
            raise ValueError(f"{face} is not a facet of {source}") from None
        return multiplex_facet(d, n, i + 1)
    gens = _facet_generator_map(source).get(face)
    if gens is None:
        raise ValueError(f"{face} is not a facet of {source}")
    images = {retract([x + 1 for x in gen], n) for gen in gens}
    if len(images) != 1:
        raise AssertionError(f"ambiguous right shift of {face}: {sorted(images)}")
    return images.pop()


def _gale_facets(p: Params) -> list[VertexSet]:
    """Base case n = k: the d-element Gale subsets of [0, k]."""
    ground = Interval(0, p.k)
    return colex_sorted(
        f for f in combinations(ground.members(), p.d) if is_gale(f, ground)
    )


def facets_by_recursion(p: Params) -> list[VertexSet]:
    """Facet list built by recursion on n from the cyclic base n = k.

    Facets of the smaller polytope with max <= n-2 persist; those with
    max >= n-2 are right-shifted.  The two groups stay disjoint because
    shifting raises the maximum to at least n-1.
    """
    facets = _gale_facets(Params(p.d, p.k, p.k))
    for nn in range(p.k + 1, p.n + 1):
        target = Params(p.d, p.k, nn)
        kept = [f for f in facets if max(f) <= nn - 2]
        shifted = [rsh(f, target) for f in facets if max(f) >= nn - 2]
        if set(kept) & set(shifted):
            raise AssertionError(f"facet recursion overlap at n={nn}")
        facets = colex_sorted(kept + shifted)
    return facets
