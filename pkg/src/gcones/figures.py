"""Matplotlib renderings: affine slices of a 3-vertex fan and scan heatmaps.

A slice uses the plane {x : ν·x = c} with an orthonormal frame (u, v) in
ν⊥ and origin c·ν/|ν|².  Chambers are clipped half-plane by half-plane
(Sutherland–Hodgman) inside a square viewport; walls are clipped with a
parametric line test.  Every SVG element carries a gid of the form
``chamber-<i>`` or ``wall-<j>`` so the output can be checked textually.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from . import cones as C  # noqa: E402
from .errors import InputError  # noqa: E402

EPS = 1e-9


@dataclass
class PlaneFrame:
    normal: np.ndarray
    offset: float
    origin: np.ndarray
    u: np.ndarray
    v: np.ndarray

    def lift(self, s, t):
        return self.origin + s * self.u + t * self.v

    def halfplane(self, f):
        """f·x ≥ 0 pulled back to a·(s,t) + b ≥ 0."""
        f = np.asarray(f, dtype=float)
        return np.array([f @ self.u, f @ self.v]), float(f @ self.origin)


def plane_frame(normal, offset: float = 1.0) -> PlaneFrame:
    nu = np.asarray(normal, dtype=float)
    if nu.shape != (3,) or not nu.any():
        raise InputError("slice plane needs a nonzero normal in three coordinates")
    origin = offset * nu / (nu @ nu)
    # Gram-Schmidt against the normal
    seed = np.eye(3)[int(np.argmin(np.abs(nu)))]
    u = seed - (seed @ nu) / (nu @ nu) * nu
    u /= np.linalg.norm(u)
    v = np.cross(nu / np.linalg.norm(nu), u)
    return PlaneFrame(nu, float(offset), origin, u, v)


def _clip(poly, a, b):
    out = []
    m = len(poly)
    for i in range(m):
        p, q = poly[i], poly[(i + 1) % m]
        fp, fq = a @ p + b, a @ q + b
        if fp >= -EPS:
            out.append(p)
        if (fp >= -EPS) != (fq >= -EPS) and abs(fp - fq) > EPS:
            lam = fp / (fp - fq)
            out.append(p + lam * (q - p))
    return out


def _area(poly):
    if len(poly) < 3:
        return 0.0
    x = np.array([p[0] for p in poly])
    y = np.array([p[1] for p in poly])
    return 0.5 * abs(x @ np.roll(y, -1) - y @ np.roll(x, -1))


def _box(half):
    return [np.array(p, dtype=float) for p in ((-half, -half), (half, -half), (half, half), (-half, half))]


def chamber_polygon(cone: C.RationalCone, frame: PlaneFrame, half: float) -> list:
    poly = _box(half)
    for f in cone.facets:
        poly = _clip(poly, *frame.halfplane(f))
        if not poly:
            return []
    return poly if _area(poly) > 1e-7 else []


def wall_segment(cone: C.RationalCone, frame: PlaneFrame, half: float):
    """Endpoints of (wall ∩ plane) clipped to the viewport, or None."""
    if cone.span_dim != 2 or len(cone.span_equations) != 1:
        return None
    a, b = frame.halfplane(cone.span_equations[0])
    if np.linalg.norm(a) < EPS:
        return None
    # line a·w + b = 0: point w0 and direction d
    w0 = -b * a / (a @ a)
    d = np.array([-a[1], a[0]])
    lo, hi = -np.inf, np.inf
    cons = [frame.halfplane(f) for f in cone.facets]
    cons += [(np.array(r), half) for r in ((1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0))]
    for ai, bi in cons:
        slope, val = ai @ d, ai @ w0 + bi
        if abs(slope) < EPS:
            if val < -EPS:
                return None
            continue
        root = -val / slope
        if slope > 0:
            lo = max(lo, root)
        else:
            hi = min(hi, root)
    if not hi - lo > 1e-7:
        return None
    return w0 + lo * d, w0 + hi * d


@dataclass
class FanSlice:
    frame: PlaneFrame
    half: float
    chambers: list = field(default_factory=list)   # (chamber index, polygon)
    walls: list = field(default_factory=list)      # (wall index, (p, q), rays)


def slice_fan(fan, normal=(1, 1, 1), offset: float = 1.0, half: float = 2.0) -> FanSlice:
    if fan.alg.n != 3:
        raise InputError("fan slices are drawn for algebras with three vertices")
    frame = plane_frame(normal, offset)
    out = FanSlice(frame, half)
    for i, (_, cone) in enumerate(fan.chambers):
        poly = chamber_polygon(cone, frame, half)
        if poly:
            out.chambers.append((i, poly))
    seen = set()
    for wall in fan.walls():
        key = wall.generators
        if key in seen:
            continue
        seen.add(key)
        seg = wall_segment(wall, frame, half)
        if seg is not None:
            out.walls.append((len(out.walls), seg, key))
    return out


def render_fan_svg(fan, path, normal=(1, 1, 1), offset: float = 1.0, half: float = 2.0,
                   title: str | None = None) -> FanSlice:
    sl = slice_fan(fan, normal, offset, half)
    fig, ax = plt.subplots(figsize=(6, 6))
    cmap = plt.get_cmap("tab20")
    for k, (i, poly) in enumerate(sl.chambers):
        patch = Polygon(np.array(poly), closed=True, facecolor=cmap(k % 20), alpha=0.45,
                        edgecolor="none")
        patch.set_gid("chamber-%d" % i)
        ax.add_patch(patch)
    for j, (p, q), _ in sl.walls:
        (line,) = ax.plot([p[0], q[0]], [p[1], q[1]], color="black", linewidth=1.0)
        line.set_gid("wall-%d" % j)
    # label rays that pierce the viewport
    for r in sorted(fan.rays):
        r_arr = np.asarray(r, dtype=float)
        dn = sl.frame.normal @ r_arr
        if dn <= EPS:
            continue
        x = sl.frame.offset / dn * r_arr - sl.frame.origin
        s, t = x @ sl.frame.u, x @ sl.frame.v
        if abs(s) <= half and abs(t) <= half:
            ax.plot([s], [t], "o", color="black", markersize=3)
            ax.annotate(str(tuple(int(c) for c in r)), (s, t), fontsize=7,
                        textcoords="offset points", xytext=(4, 4))
    ax.set_xlim(-half, half)
    ax.set_ylim(-half, half)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    ax.set_title(title or "slice %s·x = %g" % (tuple(int(c) for c in sl.frame.normal), offset),
                 fontsize=9)
    fig.savefig(path, format="svg")
    plt.close(fig)
    return sl


def render_scan(points, values, path, label: str = "w-estimate"):
    """Scatter of a 2-d scan colored by an integer statistic."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InputError("scan plots need two-coordinate grid points")
    fig, ax = plt.subplots(figsize=(5, 5))
    sc = ax.scatter(pts[:, 0], pts[:, 1], c=list(values), cmap="viridis", s=60)
    fig.colorbar(sc, ax=ax, label=label)
    ax.axhline(0, color="grey", linewidth=0.5)
    ax.axvline(0, color="grey", linewidth=0.5)
    ax.set_aspect("equal")
    fig.savefig(path)
    plt.close(fig)
