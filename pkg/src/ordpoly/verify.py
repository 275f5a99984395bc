"""Cross-verification suite: every structural claim, checked per instance.

Each check is independent and returns a pass/fail verdict with a witness
on failure.  The suite is deliberately redundant: the same quantity is
computed along unrelated routes (facet enumeration vs recursion, four
h-vector routes, new-face rule vs lattice oracle, interval counting vs
window counting) and any disagreement is a failure, never a warning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .bijection import bijection_records, count_by_size, subset_to_facet
from .combinat import Params, VertexSet, colex_key
from .hvector import (
    HVector,
    h_closed_form,
    h_prime_from_f,
    h_prime_from_shelling,
    h_to_polynomial,
    multiplicial_h,
    shelling_contributions,
    toric_tables,
)
from .lattice import FaceLattice, build_face_lattice, euler_check
from .multiplex import (
    multiplex_boundary_triangulation,
    multiplex_facet,
    multiplex_g,
    multiplex_triangulation,
)
from .polynomial import IntPolynomial
from .ordinary import (
    _gale_facets,
    enumerate_facets,
    facets_by_recursion,
    lsh,
)
from .shelling import (
    boolean_interval_check,
    colex_shelling,
    minimal_new_face_recursive,
    verify_shelling_partition,
    verify_shelling_topological,
)
from .triangulation import (
    boundary_triangulation,
    shelling_restriction_faces,
    simplicial_h,
    shallowness_check,
    triangulation_shelling,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


class InstanceBundle:
    """Shared computations for one parameter triple.

    Everything is computed lazily and at most once; the check functions
    below only read from here.
    """

    def __init__(self, p: Params):
        self.p = p

    @cached_property
    def facets(self) -> list[VertexSet]:
        return enumerate_facets(self.p)

    @cached_property
    def lattice(self) -> FaceLattice:
        return build_face_lattice(self.facets, self.p.d)

    @cached_property
    def steps(self):
        return colex_shelling(self.p)

    @cached_property
    def tri_steps(self):
        return triangulation_shelling(self.p)

    @cached_property
    def toric(self) -> tuple[list[HVector], list[tuple[int, ...]]]:
        return toric_tables(self.lattice)

    @property
    def h(self) -> HVector:
        return self.toric[0][-1]

    @cached_property
    def h_prime(self) -> HVector:
        return h_prime_from_shelling(self.steps, self.p.d)

    @cached_property
    def contributions(self):
        return shelling_contributions(
            self.p, self.lattice, self.steps, self.tri_steps
        )


def _check_facet_routes(b: InstanceBundle) -> str:
    direct = b.facets
    recursed = facets_by_recursion(b.p)
    if direct != recursed:
        return f"direct list has {len(direct)} facets, recursion {len(recursed)}"
    if b.p.is_cyclic and direct != _gale_facets(b.p):
        return "cyclic facet list disagrees with the Gale brute force"
    return ""


def _check_lattice_build(b: InstanceBundle) -> str:
    lattice = b.lattice
    if lattice.top() != tuple(range(b.p.n + 1)):
        return f"vertex set is {lattice.top()}, expected 0..{b.p.n}"
    return ""


def _check_eulerian(b: InstanceBundle) -> str:
    return "" if euler_check(b.lattice) else "Moebius condition fails"


def _check_facet_g(b: InstanceBundle) -> str:
    _, g_list = b.toric
    lattice = b.lattice
    for f in b.facets:
        got = IntPolynomial(g_list[lattice.index(f)])
        want = multiplex_g(b.p.d - 1, len(f))
        if got != want:
            return f"facet {f}: g is {got}, multiplex form says {want}"
    return ""


def _check_new_face_routes(b: InstanceBundle) -> str:
    for step in b.steps:
        other = minimal_new_face_recursive(step.facet, b.p)
        if other != step.new_face:
            return (
                f"facet {step.facet}: direct rule {step.new_face}, "
                f"recursion {other}"
            )
    return ""


def _check_shelling_partition(b: InstanceBundle) -> str:
    ok, witness = verify_shelling_partition(b.lattice, b.steps)
    return "" if ok else f"face {witness} is not covered exactly once"


def _check_boolean_intervals(b: InstanceBundle) -> str:
    for step in b.steps:
        if not boolean_interval_check(b.lattice, step.new_face, step.facet):
            return f"interval [{step.new_face}, {step.facet}] is not Boolean"
    return ""


def _check_topological(b: InstanceBundle) -> str:
    p = b.p
    if p.n > p.k + 4 or p.d > 7:
        return "skipped: instance above the search gate"
    order = [s.facet for s in b.steps]
    if not verify_shelling_topological(b.lattice, order):
        return "colex order fails the definition-level shelling test"
    return ""


def _check_four_way_h(b: InstanceBundle) -> str:
    p = b.p
    h = b.h
    routes = {"toric": h}
    if p.d % 2 == 1:
        routes["closed"] = h_closed_form(p)
    routes["multiplicial"] = multiplicial_h(
        b.lattice.f_vector(), b.lattice.flag_f0()
    )
    routes["triangulation"] = simplicial_h(b.tri_steps, p.d)
    bad = {name: v for name, v in routes.items() if v != h}
    return "" if not bad else f"routes disagree: {routes}"


def _check_h_symmetric(b: InstanceBundle) -> str:
    h = b.h
    if h != tuple(reversed(h)):
        return f"h = {h} is not symmetric"
    if h[0] != 1:
        return f"h_0 = {h[0]}"
    return ""


def _cyclic_reference(p: Params) -> HVector:
    if p.d % 2 == 1:
        return h_closed_form(Params(p.d, p.k, p.k))
    # Even dimension only occurs in multiplex mode, where the n = k case
    # is the simplex.
    return (1,) * (p.d + 1)


def _check_h_vs_h_prime(b: InstanceBundle) -> str:
    p = b.p
    h, hp = b.h, b.h_prime
    if any(x < y for x, y in zip(h, hp)):
        return f"h = {h} is not >= h' = {hp}"
    ref = _cyclic_reference(p)
    for i in range(p.d + 1):
        if hp[i] < ref[i]:
            return f"h'_{i} = {hp[i]} below the cyclic value {ref[i]}"
        if 2 * i > p.d and hp[i] != ref[i]:
            return f"h'_{i} = {hp[i]} != cyclic value {ref[i]} above d/2"
    return ""


def _check_h_prime_routes(b: InstanceBundle) -> str:
    via_f = h_prime_from_f(b.lattice.f_vector(), b.p.d)
    if via_f != b.h_prime:
        return f"shelling count {b.h_prime}, f-transform {via_f}"
    return ""


def _check_sum_h(b: InstanceBundle) -> str:
    d = b.p.d
    f = b.lattice.f_vector()
    flag0 = b.lattice.flag_f0()
    expected = f[d - 1] + (flag0[d - 2] - d * f[d - 1])
    if sum(b.h) != expected:
        return f"sum h = {sum(b.h)}, modified top count = {expected}"
    return ""


def _check_contributions(b: InstanceBundle) -> str:
    d = b.p.d
    total = h_to_polynomial(b.h) - h_to_polynomial(b.h_prime)
    acc = sum(b.contributions.values(), start=IntPolynomial.zero())
    if acc != total:
        return f"sum of contributions {acc} != h - h' {total}"
    by_index = {s.index: s for s in b.steps}
    for j, poly in b.contributions.items():
        coeffs = [poly.coefficient(d - i) for i in range(d + 1)]
        if any(c < 0 for c in coeffs):
            return f"step {j}: negative contribution {coeffs}"
        expected = len(by_index[j].facet) - d
        if sum(coeffs) != expected:
            return f"step {j}: contributions sum to {sum(coeffs)}, not {expected}"
    return ""


def _check_triangulation_cover(b: InstanceBundle) -> str:
    from_steps = {s.simplex for s in b.tri_steps}
    direct = set(boundary_triangulation(b.p))
    if from_steps != direct:
        extra = from_steps ^ direct
        return f"window and Gale-subset routes differ on {sorted(extra)[:3]}"
    return ""


def _check_triangulation_oracle(b: InstanceBundle) -> str:
    simplices = [s.simplex for s in b.tri_steps]
    oracle = shelling_restriction_faces(simplices)
    for s, u in zip(b.tri_steps, oracle):
        if s.new_face != u:
            return (
                f"step ({s.facet_index},{s.window_index}): recursion "
                f"{s.new_face}, wall oracle {u}"
            )
    return ""


def _check_shallow(b: InstanceBundle) -> str:
    ok, witness = shallowness_check([s.simplex for s in b.tri_steps], b.lattice)
    return "" if ok else f"face {witness} has a too-deep carrier"


def _check_lsh(b: InstanceBundle) -> str:
    p = b.p
    if p.is_cyclic:
        return "skipped: no smaller instance"
    smaller = set(enumerate_facets(Params(p.d, p.k, p.n - 1)))
    shifted = [lsh(f, p) for f in b.facets if f[-1] >= p.k]
    for f in shifted:
        if f not in smaller:
            return f"left shift {f} is not a facet one size down"
    for a, c in zip(shifted, shifted[1:]):
        if colex_key(a) > colex_key(c):
            return f"left shift breaks colex order at {a} > {c}"
    return ""


def _check_multiplex_suite(b: InstanceBundle) -> str:
    p = b.p
    if not p.is_multiplex:
        return "skipped: k > d"
    d, n = p.d, p.n
    r = n - d
    expected_order = (
        [multiplex_facet(d, n, i) for i in range(r + 1)]
        + [multiplex_facet(d, n, i) for i in range(n - 1, r, -1)]
        + [multiplex_facet(d, n, n)]
    )
    if b.facets != expected_order:
        return "colex order is not the window pattern"
    if b.h != (1,) + (r + 1,) * (d - 1) + (1,):
        return f"toric h = {b.h}, expected flat {r + 1}"
    if b.h_prime != (1, r + 1) + (1,) * (d - 1):
        return f"h' = {b.h_prime}"
    solid = multiplex_triangulation(d, n)
    solid_new = shelling_restriction_faces(solid)
    solid_h = [0] * (d + 2)
    for u in solid_new:
        solid_h[len(u)] += 1
    if solid_h != [1, r] + [0] * d:
        return f"solid subdivision h = {solid_h}"
    boundary = multiplex_boundary_triangulation(d, n)
    if {bs.simplex for bs in boundary} != {s.simplex for s in b.tri_steps}:
        return "boundary triangulations disagree"
    boundary_new = shelling_restriction_faces([bs.simplex for bs in boundary])
    counts = [0] * (d + 1)
    for u in boundary_new:
        counts[len(u)] += 1
    if tuple(counts) != b.h:
        return f"boundary walk h = {counts} != toric {b.h}"
    h = b.h
    mine = IntPolynomial([1] + [h[i] - h[i - 1] for i in range(1, d // 2 + 1)])
    if mine != multiplex_g(d, n + 1):
        return f"polytope g = {mine}, window form {multiplex_g(d, n + 1)}"
    return ""


def _expected_increment(p: Params) -> HVector:
    if p.d % 2 == 1:
        high = h_closed_form(p)
        low = h_closed_form(Params(p.d, p.k, p.n - 1))
        return tuple(a - c for a, c in zip(high, low))
    return (0,) + (1,) * (p.d - 1) + (0,)


def _check_bijection_counts(b: InstanceBundle) -> str:
    p = b.p
    if p.n < p.d + p.k - 1:
        return "skipped: below the stability threshold"
    incr = _expected_increment(p)
    for i in range(1, p.d):
        got = count_by_size(p, i)
        if got != incr[i]:
            return f"size {i}: counted {got}, h increment {incr[i]}"
    return ""


def _check_bijection_roundtrip(b: InstanceBundle) -> str:
    p = b.p
    if p.n < p.d + p.k - 1:
        return "skipped: below the stability threshold"
    size = p.k - p.d
    for i in range(1, (p.d - 1) // 2 + 1):
        records = bijection_records(p, i)
        subsets = [r.A for r in records]
        if len(set(subsets)) != len(subsets):
            return f"size {i}: subset map is not injective"
        universe = range(1, size + i)
        wanted = {tuple(c) for c in combinations(universe, size)}
        if set(subsets) != wanted:
            return f"size {i}: image has {len(set(subsets))} of {len(wanted)}"
        for r in records:
            if len(r.Y) != 2 * i - 2 * r.a1:
                return f"|Y| = {len(r.Y)} != 2i - 2a1 for {r.simplex}"
            if subset_to_facet(r.A, p, i) != r.simplex:
                return f"round trip fails at {r.A}"
    return ""


_CHECKS = [
    ("facet_routes", _check_facet_routes),
    ("lattice_build", _check_lattice_build),
    ("eulerian", _check_eulerian),
    ("facet_g", _check_facet_g),
    ("new_face_routes", _check_new_face_routes),
    ("shelling_partition", _check_shelling_partition),
    ("boolean_intervals", _check_boolean_intervals),
    ("topological_shelling", _check_topological),
    ("four_way_h", _check_four_way_h),
    ("h_symmetric", _check_h_symmetric),
    ("h_vs_h_prime", _check_h_vs_h_prime),
    ("h_prime_routes", _check_h_prime_routes),
    ("sum_h", _check_sum_h),
    ("contributions", _check_contributions),
    ("triangulation_cover", _check_triangulation_cover),
    ("triangulation_oracle", _check_triangulation_oracle),
    ("shallow", _check_shallow),
    ("lsh_monotone", _check_lsh),
    ("multiplex_suite", _check_multiplex_suite),
    ("bijection_counts", _check_bijection_counts),
    ("bijection_roundtrip", _check_bijection_roundtrip),
]

CHECK_NAMES = [name for name, _ in _CHECKS]


def verify_instance(p: Params) -> list[CheckResult]:
    """Run every check on one instance; exceptions count as failures."""
    bundle = InstanceBundle(p)
    results: list[CheckResult] = []
    for name, fn in _CHECKS:
        try:
            detail = fn(bundle)
        except Exception as exc:  # noqa: BLE001 - verdicts must not abort
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            continue
        if detail.startswith("skipped"):
            results.append(CheckResult(name, True, detail))
        else:
            results.append(CheckResult(name, detail == "", detail))
    return results


def grid_instances() -> list[Params]:
    """The standard verification grid, multiplex family included."""
    out: list[Params] = []
    for d in (5, 7):
        for k in range(d, d + 4):
            for n in range(k, k + 5):
                out.append(Params(d, k, n))
    for d in (4, 5, 6):
        for n in range(d, d + 5):
            p = Params(d, d, n)
            if p not in out:
                out.append(p)
    return out
