"""homplex: exact-arithmetic homomorphism complexes and dissection combinatorics."""

from homplex.complexes import (
    BudgetExceededError,
    LabelTuple,
    ProjectedCell,
    SimplicialComplex,
    common_face_test,
    f_vector,
    label_tuple,
    simplicial_complex,
    skeleton,
)
from homplex.graphs import Graph, complete_graph, cycle_graph, empty_graph, make_graph
from homplex.hom import (
    HomComplex,
    build_hom,
    cayley_slice,
    hom_f_vector,
    is_projection_polytopal,
    minkowski_vertices,
    project_pi,
    projected_complex,
)
from homplex.homology import reduced_homology
from homplex.linalg import Circuit, affine_circuits, rational_kernel, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "Circuit",
    "Graph",
    "HomComplex",
    "LabelTuple",
    "ProjectedCell",
    "SimplicialComplex",
    "affine_circuits",
    "build_hom",
    "cayley_slice",
    "common_face_test",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "f_vector",
    "hom_f_vector",
    "is_projection_polytopal",
    "label_tuple",
    "make_graph",
    "minkowski_vertices",
    "project_pi",
    "projected_complex",
    "rational_kernel",
    "reduced_homology",
    "simplicial_complex",
    "skeleton",
    "smith_normal_form",
]
