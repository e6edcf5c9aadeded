"""Reuleaux and Meissner polyhedra in R^3.

Builds the ball polyhedron of an extremal point set, extracts its circular
edges and dual edge pairs, evaluates closed-form volumes and surface areas
for the body and its Meissner smoothing, and cross-checks everything with
seeded Monte Carlo sampling and divergence-theorem integration over generated
boundary meshes.
"""

from .errors import (DegenerateInputError, DomainError, GeometryError,
                     MeshError, NotExtremalError, StructureError)
from .formulas import (AnglePair, BodyScalars, blaschke_defect_term,
                       blaschke_gap, meissner_area_term, meissner_scalars,
                       reuleaux_area_term, reuleaux_scalars,
                       reuleaux_volume_term, sliver_area, sliver_flux,
                       spindle_area, spindle_flux, surface_meissner,
                       surface_reuleaux, volume_meissner, volume_reuleaux,
                       wedge_volume, wedge_volume_via_flux)
from .geom import (AngularIntervalSet, ArcOnCircle, Circle3, Tolerances,
                   ball_constraint_interval, circle_of_sphere_pair,
                   intersect_interval_sets, max_distance_to_arc)
from .mesh import (MeshBuilder, SpindleFrame, TriangleMesh, build_body_mesh,
                   export_obj, export_ply, import_obj, import_ply,
                   inspect_mesh, mesh_area, mesh_volume, spindle_point)
from .oracle import (BodySpec, McConfig, McEstimate, body_from_structure,
                     bounding_box, contains, mc_volume)
from .polyhedron import (DiameterGraph, DualPair, EdgeArc, ExtremalityReport,
                         PointConfig, Structure, StructureReport,
                         analyze_config, angle_pairs, check_extremal,
                         config_from_generator, config_from_json_dict,
                         diameter_graph, extract_edges, load_config,
                         pair_duals, pentad_points, tetra_points)

__all__ = [
    # geometry primitives
    "AngularIntervalSet", "ArcOnCircle", "Circle3", "Tolerances",
    "ball_constraint_interval", "circle_of_sphere_pair",
    "intersect_interval_sets", "max_distance_to_arc",
    # structure
    "DiameterGraph", "DualPair", "EdgeArc", "ExtremalityReport",
    "PointConfig", "Structure", "StructureReport", "analyze_config",
    "angle_pairs", "check_extremal", "config_from_generator",
    "config_from_json_dict", "diameter_graph", "extract_edges", "load_config",
    "pair_duals", "pentad_points", "tetra_points",
    # closed forms
    "AnglePair", "BodyScalars", "blaschke_defect_term", "blaschke_gap",
    "meissner_area_term", "meissner_scalars", "reuleaux_area_term",
    "reuleaux_scalars", "reuleaux_volume_term", "sliver_area", "sliver_flux",
    "spindle_area", "spindle_flux", "surface_meissner", "surface_reuleaux",
    "volume_meissner", "volume_reuleaux", "wedge_volume",
    "wedge_volume_via_flux",
    # Monte Carlo oracle
    "BodySpec", "McConfig", "McEstimate", "body_from_structure",
    "bounding_box", "contains", "mc_volume",
    # meshes
    "MeshBuilder", "SpindleFrame", "TriangleMesh", "build_body_mesh",
    "export_obj", "export_ply", "import_obj", "import_ply", "inspect_mesh",
    "mesh_area", "mesh_volume", "spindle_point",
    # errors
    "DegenerateInputError", "DomainError", "GeometryError", "MeshError",
    "NotExtremalError", "StructureError",
]

__version__ = "0.1.0"
