"""Planar point sets, sphere-of-influence graphs, and empirical checks.

Every point gets a closed disk whose radius is the distance to its nearest
neighbor.  Two points are adjacent in the closed graph when their disks
intersect (touching counts), in the open variant when the interiors
overlap.  The weighted digraph replaces each closed edge {a, b} by two
arcs: arc (a, b) weighs 1 when r_b/r_a > p, 1/2 when q <= r_b/r_a <= p,
and 0 when r_b/r_a < q, so the two arcs of an edge always sum to 1 and the
total arc weight equals the closed edge count.

Closed-variant comparisons use exact <= on computed doubles: the
closed/open distinction IS the tie, so no epsilon is injected into the
edge rule.  All algorithms are the O(n^2) brute force; a vectorized path
and a pure-Python oracle are kept separate so they can cross-check each
other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .bounds import Annulus, Params, PolarPoint, radial_project
from .errors import DomainError, PointFileError


@dataclass(frozen=True)
class PlanarPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"coordinates must be finite, got ({self.x}, {self.y})")


class PointSet:
    """An ordered list of pairwise-distinct planar points."""

    def __init__(self, points: Iterable[tuple[float, float]]):
        coords = np.asarray(list(points), dtype=float)
        if coords.size == 0:
            coords = coords.reshape(0, 2)
        if coords.ndim != 2 or coords.shape[1] != 2:
            raise DomainError("points must be (x, y) pairs")
        if not np.all(np.isfinite(coords)):
            raise DomainError("coordinates must be finite")
        self.coords = coords
        if len(self) != len({(float(x), float(y)) for x, y in coords}):
            raise DomainError("points must be pairwise distinct")

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __getitem__(self, i: int) -> PlanarPoint:
        return PlanarPoint(float(self.coords[i, 0]), float(self.coords[i, 1]))

    def scaled(self, factor: float) -> "PointSet":
        if factor <= 0:
            raise DomainError(f"scale factor must be positive, got {factor}")
        return PointSet(self.coords * factor)

    def to_text(self) -> str:
        lines = [f"{float(x)!r} {float(y)!r}" for x, y in self.coords]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PointSet":
        points = []
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise PointFileError(
                    f"expected 'x y', got {raw.strip()!r}", line_no=line_no
                )
            try:
                points.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise PointFileError(
                    f"could not parse coordinates from {raw.strip()!r}", line_no=line_no
                ) from None
        try:
            return cls(points)
        except DomainError as exc:
            raise PointFileError(str(exc)) from exc

    @classmethod
    def from_file(cls, path) -> "PointSet":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())


def _distance_matrix(ps: PointSet) -> np.ndarray:
    diff = ps.coords[:, None, :] - ps.coords[None, :, :]
    return np.sqrt((diff**2).sum(axis=2))


def nn_radii(ps: PointSet) -> np.ndarray:
    """Nearest-neighbor distance of every point (the sphere radii)."""
    if len(ps) < 2:
        raise DomainError("need at least two points for nearest-neighbor radii")
    dist = _distance_matrix(ps)
    np.fill_diagonal(dist, np.inf)
    return dist.min(axis=1)


def nn_radii_bruteforce(ps: PointSet) -> list[float]:
    """Pure-Python oracle for `nn_radii`."""
    n = len(ps)
    if n < 2:
        raise DomainError("need at least two points for nearest-neighbor radii")
    radii = []
    for i in range(n):
        best = math.inf
        xi, yi = ps.coords[i]
        for j in range(n):
            if i == j:
                continue
            xj, yj = ps.coords[j]
            best = min(best, math.hypot(xi - xj, yi - yj))
        radii.append(best)
    return radii


@dataclass(frozen=True)
class InfluenceGraph:
    """Vertices with sphere radii plus undirected edges."""

    variant: str  # "closed" or "open"
    radii: tuple[float, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        return len(self.radii)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def build_sig(ps: PointSet, variant: str = "closed") -> InfluenceGraph:
    """Construct the sphere-of-influence graph of the point set."""
    if variant not in ("closed", "open"):
        raise DomainError(f"variant must be 'closed' or 'open', got {variant!r}")
    radii = nn_radii(ps)
    dist = _distance_matrix(ps)
    n = len(ps)
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            rsum = radii[i] + radii[j]
            hit = dist[i, j] <= rsum if variant == "closed" else dist[i, j] < rsum
            if hit:
                edges.add((i, j))
    return InfluenceGraph(variant, tuple(float(r) for r in radii), frozenset(edges))


def arc_weight(r_a: float, r_b: float, params: Params) -> float:
    """Weight of the arc (a, b) from the radius ratio r_b / r_a."""
    ratio = r_b / r_a
    if ratio > params.p:
        return 1.0
    if ratio >= params.q:
        return 0.5
    return 0.0


@dataclass(frozen=True)
class WeightedDigraph:
    """Both arcs of every closed edge, weighted by the radius-ratio rule."""

    radii: tuple[float, ...]
    arcs: tuple[tuple[int, int, float], ...]

    @property
    def total_weight(self) -> float:
        return sum(w for _, _, w in self.arcs)

    def out_weights(self) -> list[float]:
        out = [0.0] * len(self.radii)
        for a, _, w in self.arcs:
            out[a] += w
        return out


def wsig(ps: PointSet, params: Params) -> WeightedDigraph:
    graph = build_sig(ps, "closed")
    arcs = []
    for i, j in sorted(graph.edges):
        arcs.append((i, j, arc_weight(graph.radii[i], graph.radii[j], params)))
        arcs.append((j, i, arc_weight(graph.radii[j], graph.radii[i], params)))
    return WeightedDigraph(graph.radii, tuple(arcs))


@dataclass(frozen=True)
class OutWeightProfile:
    per_vertex: tuple[float, ...]

    @property
    def max_out_weight(self) -> float:
        return max(self.per_vertex)

    def argmax(self) -> int:
        return max(range(len(self.per_vertex)), key=lambda i: self.per_vertex[i])


def out_weight_profile(ps: PointSet, params: Params) -> OutWeightProfile:
    """Per-vertex sum of outgoing arc weights in the weighted digraph."""
    return OutWeightProfile(tuple(wsig(ps, params).out_weights()))


def smallest_ball_vertex(graph: InfluenceGraph) -> int:
    return min(range(graph.n), key=lambda i: (graph.radii[i], i))


# ---------------------------------------------------------------- generators

# Double arithmetic cannot represent an exact equilateral lattice (no
# rational equilateral triangle exists), so a naive sqrt(3)/2 row height
# breaks the closed-graph ties at distance 2*spacing and interior degrees
# land at 14-16 instead of 18.  These constants are a searched pair: the
# column step _HEX_DX (= 1 - 29*2^-42) and row height _HEX_DY (a 47-bit
# value near _HEX_DX*sqrt(3)/2) make every coordinate product exact for
# patches up to 63 rows/columns, all nearest-neighbor radii identical, and
# all eighteen ring distances compare exactly as in the ideal lattice.
_HEX_DX = 0.9999999999934062
_HEX_DY = 0.8660254037787283


def hex_lattice(rows: int, cols: int, spacing: float = 1.0) -> PointSet:
    """Triangular lattice in row-major order; every interior point has six
    nearest neighbors at distance `spacing` (up to 7e-12 relative).  With a
    power-of-two spacing the closed-graph tie structure of the ideal
    lattice is preserved exactly for patches up to 63 rows and columns."""
    if rows < 1 or cols < 1:
        raise DomainError(f"rows and cols must be >= 1, got {rows}x{cols}")
    if spacing <= 0:
        raise DomainError(f"spacing must be positive, got {spacing}")
    dx = _HEX_DX * spacing
    dy = _HEX_DY * spacing
    points = []
    for j in range(rows):
        x_off = 0.5 * dx if j % 2 else 0.0
        for i in range(cols):
            points.append((i * dx + x_off, j * dy))
    return PointSet(points)


def hex_interior_indices(rows: int, cols: int, rings: int = 3) -> list[int]:
    """Indices of lattice vertices at least `rings` rows/columns away from
    the boundary of the rows x cols patch."""
    idx = []
    for j in range(rings, rows - rings):
        for i in range(rings, cols - rings):
            idx.append(j * cols + i)
    return idx


def random_points(n: int, seed: int) -> PointSet:
    """n points drawn uniformly from the unit square, seeded."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    while True:
        coords = rng.random((n, 2))
        try:
            return PointSet(coords)
        except DomainError:  # pragma: no cover - duplicate draw is measure zero
            continue


# ------------------------------------------------------------- experiments

def lattice_report(rows: int, cols: int, spacing: float, params: Params, rings: int = 3) -> dict:
    """Closed-graph statistics of a lattice patch, including the interior
    degree histogram and the interior edges-per-vertex ratio (half the
    summed interior degree per interior vertex)."""
    ps = hex_lattice(rows, cols, spacing)
    graph = build_sig(ps, "closed")
    degrees = graph.degrees()
    interior = hex_interior_indices(rows, cols, rings)
    interior_degrees = [degrees[i] for i in interior]
    profile = out_weight_profile(ps, params)
    hist: dict[int, int] = {}
    for d in degrees:
        hist[d] = hist.get(d, 0) + 1
    report = {
        "rows": rows,
        "cols": cols,
        "spacing": spacing,
        "n": len(ps),
        "edge_count": graph.edge_count,
        "edges_per_vertex": graph.edge_count / len(ps),
        "degree_histogram": {str(k): hist[k] for k in sorted(hist)},
        "interior_rings": rings,
        "interior_count": len(interior),
        "interior_degree_min": min(interior_degrees) if interior_degrees else None,
        "interior_degree_max": max(interior_degrees) if interior_degrees else None,
        "interior_edges_per_vertex": (
            sum(interior_degrees) / 2 / len(interior) if interior_degrees else None
        ),
        "max_out_weight": profile.max_out_weight,
        "edge_bound_ok": graph.edge_count <= 14.5 * len(ps),
    }
    return report


def run_experiment(trials: int, n: int, seed: int, params: Params) -> dict:
    """Monte-Carlo sweep over seeded random point sets.  Records, per
    trial, the closed edge count, the maximum out-weight, and the degree of
    the smallest-ball vertex; any out-weight above 14.5 or smallest-ball
    degree above 29 would falsify the bound and is reported as a failure."""
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    records = []
    for t in range(trials):
        ps = random_points(n, seed + t)
        graph = build_sig(ps, "closed")
        profile = out_weight_profile(ps, params)
        sb = smallest_ball_vertex(graph)
        records.append(
            {
                "trial": t,
                "seed": seed + t,
                "edge_count": graph.edge_count,
                "edges_per_vertex": graph.edge_count / n,
                "max_out_weight": profile.max_out_weight,
                "smallest_ball_degree": graph.degrees()[sb],
            }
        )
    max_out = max(r["max_out_weight"] for r in records)
    max_ratio = max(r["edges_per_vertex"] for r in records)
    max_sb_degree = max(r["smallest_ball_degree"] for r in records)
    return {
        "trials": trials,
        "n": n,
        "seed": seed,
        "p": params.p,
        "max_out_weight": max_out,
        "max_edges_per_vertex": max_ratio,
        "max_smallest_ball_degree": max_sb_degree,
        "out_weight_bound_ok": max_out <= 14.5,
        "edge_bound_ok": max_ratio <= 14.5,
        "smallest_ball_degree_ok": max_sb_degree <= 29,
        "records": records,
    }


# ------------------------------------------------- reduction to the annulus

def neighborhood_reduction(ps: PointSet, params: Params, vertex: int | None = None):
    """Translate `vertex` (default: the maximum-out-weight vertex) to the
    origin, normalize its radius to 1, keep the centers of its nonzero-
    weight out-arcs, and radially project the weight-1 centers onto
    rho = 1+p.  Returns (ones, halves) as lists of PolarPoint."""
    digraph = wsig(ps, params)
    if vertex is None:
        out = digraph.out_weights()
        vertex = max(range(len(out)), key=lambda i: out[i])
    r0 = digraph.radii[vertex]
    ox, oy = ps.coords[vertex]
    ones: list[PolarPoint] = []
    halves: list[PolarPoint] = []
    for a, b, w in digraph.arcs:
        if a != vertex or w == 0.0:
            continue
        x = (float(ps.coords[b, 0]) - ox) / r0
        y = (float(ps.coords[b, 1]) - oy) / r0
        point = PolarPoint(math.hypot(x, y), math.degrees(math.atan2(y, x)))
        if w == 1.0:
            ones.append(radial_project(point, 1 + params.p))
        else:
            halves.append(point)
    return ones, halves


def reduction_violations(
    ps: PointSet, params: Params, vertex: int | None = None, tol: float = 1e-9
) -> list[str]:
    """Check the reduced neighborhood against the annulus hypotheses:
    weight-1 centers in [p, 1+p], weight-1/2 centers in [1, 1+p], pairwise
    separations at least p (any weight-1 involved) or q (both halves).
    Returns human-readable violations; empty means all hypotheses hold."""
    ones, halves = neighborhood_reduction(ps, params, vertex)
    one_ann = Annulus(params.p, 1 + params.p)
    half_ann = Annulus(1.0, 1 + params.p)
    violations = []
    for tag, ann, pts in (("one", one_ann, ones), ("half", half_ann, halves)):
        for pt in pts:
            if not ann.contains(pt.rho, tol):
                violations.append(f"{tag} at rho={pt.rho!r} outside {ann}")
    labeled = [("one", pt) for pt in ones] + [("half", pt) for pt in halves]
    for i in range(len(labeled)):
        for j in range(i + 1, len(labeled)):
            (tag_a, a), (tag_b, b) = labeled[i], labeled[j]
            need = params.q if (tag_a == tag_b == "half") else params.p
            ax, ay = a.rho * math.cos(math.radians(a.theta)), a.rho * math.sin(math.radians(a.theta))
            bx, by = b.rho * math.cos(math.radians(b.theta)), b.rho * math.sin(math.radians(b.theta))
            d = math.hypot(ax - bx, ay - by)
            if d < need - tol:
                violations.append(
                    f"{tag_a}/{tag_b} pair at distance {d!r} below required {need!r}"
                )
    return violations


# -------------------------------------------- radial projection Monte Carlo

def projection_lemma_slack(
    samples: int, seed: int, part: str = "a", R: float | None = None
) -> np.ndarray:
    """Sample circle pairs satisfying the radial-projection hypotheses and
    return dist(after projection) - (R - 1) per sample; the projection
    property holds when every slack is >= -1e-9.

    Hypotheses: both circles meet the unit circle, neither contains the
    other's center, and (part "a") both centers outside rho = R, or
    (part "b") one center inside 1 <= rho <= R and the other outside.
    """
    if part not in ("a", "b"):
        raise DomainError(f"part must be 'a' or 'b', got {part!r}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    out = np.empty(0)
    R_fixed = R
    while out.size < samples:
        m = max(4 * (samples - out.size), 1024)
        Rv = np.full(m, R_fixed) if R_fixed is not None else rng.uniform(1.2, 3.0, m)
        if part == "a":
            x = Rv * (1 + rng.uniform(0, 2.0, m))
            y = Rv * (1 + rng.uniform(0, 2.0, m))
        else:
            x = rng.uniform(1.0, Rv)
            y = Rv * (1 + rng.uniform(0, 2.0, m))
        tx = rng.uniform(0, 2 * np.pi, m)
        ty = rng.uniform(0, 2 * np.pi, m)
        # Radii making each circle meet the unit circle: |c - 1| <= r <= c + 1.
        rx = rng.uniform(np.abs(x - 1), x + 1)
        ry = rng.uniform(np.abs(y - 1), y + 1)
        xy = np.hypot(x * np.cos(tx) - y * np.cos(ty), x * np.sin(tx) - y * np.sin(ty))
        keep = xy >= np.maximum(rx, ry)
        Rv, x, y, tx, ty = Rv[keep], x[keep], y[keep], tx[keep], ty[keep]
        # Both centers project in part (a); only the exterior one in part (b).
        ax = np.minimum(x, Rv) if part == "b" else Rv
        bx = np.minimum(y, Rv)
        d_proj = np.hypot(ax * np.cos(tx) - bx * np.cos(ty), ax * np.sin(tx) - bx * np.sin(ty))
        out = np.concatenate([out, d_proj - (Rv - 1)])
    return out[:samples]


# ----------------------------------------------------------- serialization

def graph_to_text(ps: PointSet, graph: InfluenceGraph, params: Params) -> str:
    """Edge list with a radii header; coordinates and radii round-trip
    exactly through repr."""
    profile = out_weight_profile(ps, params)
    degrees = graph.degrees()
    lines = [
        f"# variant: {graph.variant}",
        f"# n: {graph.n}",
        f"# p: {params.p!r}",
    ]
    for i in range(graph.n):
        x, y = ps.coords[i]
        lines.append(
            f"# vertex {i}: x={float(x)!r} y={float(y)!r} r={graph.radii[i]!r}"
            f" degree={degrees[i]} out_weight={profile.per_vertex[i]!r}"
        )
    bound = 14.5 * graph.n
    status = "PASS" if graph.edge_count <= bound else "FAIL"
    lines.append(f"# edge_count: {graph.edge_count}")
    lines.append(f"# edges_per_vertex: {graph.edge_count / graph.n:.4f}")
    lines.append(f"# max_out_weight: {profile.max_out_weight:.4f}")
    lines.append(f"# check edge_count <= 14.5*n: {status} ({graph.edge_count} vs {bound})")
    for i, j in sorted(graph.edges):
        lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"
