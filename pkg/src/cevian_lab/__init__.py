"""Exact cevian-configuration geometry: area-ratio closed forms, a coordinate
oracle, theorem checks and parameter-space exploration."""

from .kernel import (HLine, HPoint, concurrent, division_ratio, incident, join,
                     meet, point, section_point, signed_area)
from .params import RatioParams
from .scene import Scene, build_scene, geometric_ratio, scene_ratios, unit_scene

__all__ = [
    "HLine", "HPoint", "RatioParams", "Scene", "build_scene", "concurrent",
    "division_ratio", "geometric_ratio", "incident", "join", "meet", "point",
    "scene_ratios", "section_point", "signed_area", "unit_scene",
]
