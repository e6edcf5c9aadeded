"""Seeded Monte Carlo volume estimation via exact membership predicates.

A point is in the Reuleaux body when it is within distance 1 of every center.
The Meissner body additionally requires distance at most 1 from every point
of each kept edge arc; the wedge cut away at pair i is the part of the
Reuleaux body at max-distance >= 1 from the i-th kept arc.  Membership uses
closed inequalities with no epsilon: the boundaries have measure zero.

Sampling is hit-or-miss over an axis-aligned box.  Chunk k of the run draws
from the Philox substream jumped(k) of the seed, so estimates are
bit-identical for a fixed (seed, samples, batch) regardless of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .geom import ArcOnCircle, max_distance_to_arc_many
from .polyhedron import PointConfig, Structure

BODY_KINDS = ("reuleaux", "meissner", "wedge")


@dataclass(frozen=True)
class BodySpec:
    """Which body a membership test targets.

    ``arcs`` are the kept arcs of all dual pairs, in pair order; they are
    required for the Meissner and wedge kinds and ignored for Reuleaux.
    """

    kind: str
    config: PointConfig
    arcs: tuple[ArcOnCircle, ...] = ()
    wedge_index: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in BODY_KINDS:
            raise ValueError(f"kind must be one of {BODY_KINDS}")
        if self.kind in ("meissner", "wedge") and not self.arcs:
            raise ValueError(f"{self.kind} body requires the kept edge arcs")
        if self.kind == "wedge":
            if self.wedge_index is None or not 0 <= self.wedge_index < len(self.arcs):
                raise ValueError("wedge body requires a valid pair index")


def body_from_structure(structure: Structure, kind: str,
                        wedge_index: int | None = None) -> BodySpec:
    return BodySpec(kind=kind, config=structure.config,
                    arcs=tuple(dp.kept.arc for dp in structure.pairs),
                    wedge_index=wedge_index)


@dataclass(frozen=True)
class McConfig:
    seed: int
    samples: int
    batch: int = 1_000_000
    workers: int = 1

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.batch < 1 or self.workers < 1:
            raise ValueError("batch and workers must be at least 1")


@dataclass(frozen=True)
class McEstimate:
    volume_mean: float
    std_error: float
    hit_count: int
    sample_count: int
    bbox_volume: float

    def to_dict(self) -> dict:
        return {
            "volume_mean": self.volume_mean,
            "std_error": self.std_error,
            "hit_count": self.hit_count,
            "sample_count": self.sample_count,
            "bbox_volume": self.bbox_volume,
        }


def contains_many(body: BodySpec, points: np.ndarray) -> np.ndarray:
    """Vectorized membership for an (N, 3) array of sample points."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    centers = body.config.points
    diff = pts[:, None, :] - centers[None, :, :]
    inside = (np.einsum("ijk,ijk->ij", diff, diff) <= 1.0).all(axis=1)
    if body.kind == "reuleaux" or not inside.any():
        return inside
    sub = pts[inside]
    if body.kind == "meissner":
        ok = np.ones(len(sub), dtype=bool)
        for arc in body.arcs:
            ok &= max_distance_to_arc_many(sub, arc) <= 1.0
            if not ok.any():
                break
        inside[np.flatnonzero(inside)] = ok
    else:  # wedge
        far = max_distance_to_arc_many(sub, body.arcs[body.wedge_index]) >= 1.0
        inside[np.flatnonzero(inside)] = far
    return inside


def contains(body: BodySpec, p) -> bool:
    """Exact membership test for a single point."""
    return bool(contains_many(body, np.asarray(p, dtype=float)[None, :])[0])


def bounding_box(body: BodySpec) -> tuple[np.ndarray, np.ndarray]:
    """Axis-aligned box guaranteed to contain the body.

    Every body point lies within 1 of all centers, so the global box is the
    centers' box expanded by 1.  Wedge boxes are tightened to the box of the
    ball-pair lens of the kept arc's endpoints, whose spheres carry the
    wedge's sliver patches.
    """
    pts = body.config.points
    lo = pts.min(axis=0) - 1.0
    hi = pts.max(axis=0) + 1.0
    if body.kind == "wedge":
        arc = body.arcs[body.wedge_index]
        p = arc.circle.point(arc.start_angle)
        q = arc.circle.point(arc.end_angle)
        d = float(np.linalg.norm(p - q))
        axis = (p - q) / d
        mid = 0.5 * (p + q)
        along = 1.0 - d / 2.0
        across = math.sqrt(max(1.0 - d * d / 4.0, 0.0))
        extent = along * np.abs(axis) + across * np.sqrt(
            np.maximum(1.0 - axis * axis, 0.0))
        lo = np.maximum(lo, mid - extent)
        hi = np.minimum(hi, mid + extent)
    return lo, hi


def _chunk_hits(body: BodySpec, lo: np.ndarray, span: np.ndarray,
                seed: int, chunk: int, size: int) -> int:
    rng = np.random.Generator(np.random.Philox(key=seed).jumped(chunk))
    pts = lo + rng.random((size, 3)) * span
    return int(contains_many(body, pts).sum())


def mc_volume(body: BodySpec, mc: McConfig) -> McEstimate:
    """Unbiased hit-or-miss volume estimate over the bounding box."""
    lo, hi = bounding_box(body)
    span = hi - lo
    box_volume = float(np.prod(span))
    sizes = []
    remaining = mc.samples
    while remaining > 0:
        sizes.append(min(mc.batch, remaining))
        remaining -= sizes[-1]
    if mc.workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=mc.workers) as pool:
            hits = sum(pool.map(
                lambda k: _chunk_hits(body, lo, span, mc.seed, k, sizes[k]),
                range(len(sizes))))
    else:
        hits = sum(_chunk_hits(body, lo, span, mc.seed, k, sizes[k])
                   for k in range(len(sizes)))
    n = mc.samples
    p = hits / n
    return McEstimate(
        volume_mean=box_volume * p,
        std_error=box_volume * math.sqrt(p * (1.0 - p) / n),
        hit_count=hits,
        sample_count=n,
        bbox_volume=box_volume,
    )
