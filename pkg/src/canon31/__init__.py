"""(3,1)-canonical orderings of 4-connected planar triangulations, with
rectangular-dual and rectangle-of-influence constructions and exact verifiers."""

from .disk import TriangulatedDisk, is_internally_4_connected, is_triangulated_disk, remove_outer_set
from .generator import GenSpec, double_wheel, random_4ct
from .graph_core import (
    Embedding,
    EmbeddingError,
    has_separating_triangle,
    induced_subgraph,
    is_k_connected,
    is_triangulation,
    trace_faces,
)
from .ordering import (
    CanonicalOrdering,
    Fan,
    Singleton,
    compute_31_ordering,
    peel,
    verify_ordering,
)
from .rect_dual import Rect, RectLayout, build_rect_dual, verify_rect_dual
from .report import Report
from .ri_drawing import PointDrawing, build_ri_drawing, verify_ri

__all__ = [
    "CanonicalOrdering", "Embedding", "EmbeddingError", "Fan", "GenSpec", "PointDrawing", "Rect",
    "RectLayout", "Report", "Singleton", "TriangulatedDisk", "build_rect_dual", "build_ri_drawing",
    "compute_31_ordering", "double_wheel", "has_separating_triangle", "induced_subgraph",
    "is_internally_4_connected", "is_k_connected", "is_triangulated_disk", "is_triangulation", "peel",
    "random_4ct", "remove_outer_set", "trace_faces", "verify_ordering", "verify_rect_dual", "verify_ri",
]
