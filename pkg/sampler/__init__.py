from .gluing import (
    SAMPLER_MODELS,
    GluingConfig,
    base_gluing,
    draw_gluing,
    enumerate_gluings,
    exact_genus_distribution,
    flip_edge,
    flip_triangulation,
    genus_histogram,
    genus_of_triangulation,
    max_genus,
    sample_gluing,
    sample_triangulation,
    subdivide_triangle,
    triangle_faces,
)

__all__ = [
    "SAMPLER_MODELS",
    "GluingConfig",
    "base_gluing",
    "draw_gluing",
    "enumerate_gluings",
    "exact_genus_distribution",
    "flip_edge",
    "flip_triangulation",
    "genus_histogram",
    "genus_of_triangulation",
    "max_genus",
    "sample_gluing",
    "sample_triangulation",
    "subdivide_triangle",
    "triangle_faces",
]
