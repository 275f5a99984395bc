"""Exact combinatorics of ordinary polytopes.

The package constructs the facet lists, face lattices, colex shellings,
shallow boundary triangulations, and toric h-vectors of the ordinary
polytopes, and cross-checks every quantity by independent routes.
"""

from .bijection import (
    BijectionRecord,
    bijection_records,
    bijection_table_text,
    count_by_size,
    decompose_step_simplex,
    facet_to_subset,
    increment_steps,
    subset_to_facet,
)
from .combinat import (
    Interval,
    Params,
    colex_key,
    colex_sorted,
    is_gale,
    maximal_runs,
    paired_subsets,
    retract,
    vertex_set,
)
from .hvector import (
    f_from_h_prime,
    h_closed_form,
    h_prime_from_f,
    h_prime_from_shelling,
    h_to_polynomial,
    multiplicial_h,
    shelling_contributions,
    toric_g,
    toric_h,
)
from .lattice import FaceLattice, build_face_lattice, euler_check, lattice_from_json
from .multiplex import (
    multiplex_boundary_triangulation,
    multiplex_facet,
    multiplex_facets,
    multiplex_g,
    multiplex_triangulation,
)
from .ordinary import enumerate_facets, facets_by_recursion, lsh, rsh
from .polynomial import IntPolynomial
from .shelling import (
    ShellingStep,
    colex_shelling,
    minimal_new_face_nonrecursive,
    minimal_new_face_recursive,
    shelling_table_text,
    verify_shelling_partition,
    verify_shelling_topological,
)
from .triangulation import (
    TriangulationStep,
    boundary_triangulation,
    shallowness_check,
    shelling_restriction_faces,
    simplicial_h,
    triangulation_shelling,
    triangulation_table_text,
)
from .verify import CheckResult, InstanceBundle, grid_instances, verify_instance

__version__ = "0.1.0"

__all__ = [
    "BijectionRecord",
    "CheckResult",
    "FaceLattice",
    "InstanceBundle",
    "Interval",
    "IntPolynomial",
    "Params",
    "ShellingStep",
    "TriangulationStep",
    "bijection_records",
    "bijection_table_text",
    "boundary_triangulation",
    "build_face_lattice",
    "colex_key",
    "colex_shelling",
    "colex_sorted",
    "count_by_size",
    "decompose_step_simplex",
    "enumerate_facets",
    "euler_check",
    "f_from_h_prime",
    "facet_to_subset",
    "facets_by_recursion",
    "grid_instances",
    "h_closed_form",
    "h_prime_from_f",
    "h_prime_from_shelling",
    "h_to_polynomial",
    "increment_steps",
    "is_gale",
    "lattice_from_json",
    "lsh",
    "maximal_runs",
    "minimal_new_face_nonrecursive",
    "minimal_new_face_recursive",
    "multiplex_boundary_triangulation",
    "multiplex_facet",
    "multiplex_facets",
    "multiplex_g",
    "multiplex_triangulation",
    "multiplicial_h",
    "paired_subsets",
    "retract",
    "rsh",
    "shallowness_check",
    "shelling_contributions",
    "shelling_restriction_faces",
    "shelling_table_text",
    "simplicial_h",
    "subset_to_facet",
    "toric_g",
    "toric_h",
    "triangulation_shelling",
    "triangulation_table_text",
    "verify_instance",
    "verify_shelling_partition",
    "verify_shelling_topological",
    "vertex_set",
]
