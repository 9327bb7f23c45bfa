"""Geometric realisation of periodic orbits in a regular (2k+1)-gon.

A point on side ``i`` is described by ``t in [0, 1]``, measured
counterclockwise from the side's first vertex. Raising the interior
perpendicular at ``t`` and intersecting it with the line of the next side
gives an affine map ``t -> a*t + b`` with ``|a| = 1/sin(theta/2)``.
Composing these around a closed side word gives an expanding return map
whose unique fixed point seeds the periodic orbit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, SingularMapError
from .oracle import SideWord, validate_word
from .transition import TransitionSystem, successors

FEASIBILITY_EPS = 1e-9
CLOSURE_TOL = 1e-9

__all__ = [
    "FEASIBILITY_EPS",
    "CLOSURE_TOL",
    "PolygonGeometry",
    "AffineMap1D",
    "OrbitPolyline",
    "build_polygon",
    "step_map",
    "step_affine",
    "backward_step",
    "return_map",
    "solve_periodic_orbit",
    "banach_iterate",
    "AuditRecord",
    "realizability_audit",
]


@dataclass(frozen=True)
class PolygonGeometry:
    """Regular (2k+1)-gon with side 1 horizontal at the bottom."""

    k: int
    radius: float
    vertices: np.ndarray = field(repr=False, compare=False)

    @property
    def sides(self) -> int:
        return 2 * self.k + 1

    @property
    def interior_angle(self) -> float:
        return (2 * self.k - 1) * math.pi / (2 * self.k + 1)

    @property
    def side_length(self) -> float:
        return 2 * self.radius * math.sin(math.pi / self.sides)

    @property
    def expansion(self) -> float:
        """Per-step stretch factor ``1/sin(theta/2)``."""
        return 1.0 / math.sin(self.interior_angle / 2)

    def endpoints(self, side: int) -> tuple[np.ndarray, np.ndarray]:
        m = self.sides
        return self.vertices[side - 1], self.vertices[side % m]

    def direction(self, side: int) -> np.ndarray:
        p, q = self.endpoints(side)
        return q - p

    def inward_normal(self, side: int) -> np.ndarray:
        d = self.direction(side)
        # counterclockwise orientation puts the interior on the left
        n = np.array([-d[1], d[0]])
        return n / np.hypot(*n)

    def point(self, side: int, t: float) -> np.ndarray:
        p, q = self.endpoints(side)
        return p + t * (q - p)

    def parameter(self, side: int, point) -> float:
        """Parameter of the orthogonal projection of ``point`` onto the side's line."""
        p, _ = self.endpoints(side)
        d = self.direction(side)
        return float(np.dot(np.asarray(point) - p, d) / np.dot(d, d))

    def distance_to_line(self, side: int, point) -> float:
        p, _ = self.endpoints(side)
        return abs(float(np.dot(np.asarray(point) - p, self.inward_normal(side))))


def build_polygon(k: int, radius: float = 1.0) -> PolygonGeometry:
    TransitionSystem(k)
    if not radius > 0:
        raise DomainError(f"circumradius must be positive, got {radius}")
    m = 2 * k + 1
    start = -math.pi / 2 - math.pi / m
    angles = start + 2 * math.pi * np.arange(m) / m
    verts = radius * np.column_stack([np.cos(angles), np.sin(angles)])
    return PolygonGeometry(k, float(radius), verts)


@dataclass(frozen=True)
class AffineMap1D:
    a: float
    b: float

    def __call__(self, t: float) -> float:
        return self.a * t + self.b

    def then(self, other: "AffineMap1D") -> "AffineMap1D":
        """Apply ``self`` first, then ``other``."""
        return AffineMap1D(other.a * self.a, other.a * self.b + other.b)

    def inverse(self) -> "AffineMap1D":
        if self.a == 0:
            raise SingularMapError("affine map with zero slope has no inverse")
        return AffineMap1D(1.0 / self.a, -self.b / self.a)

    def fixed_point(self) -> float:
        if abs(1.0 - self.a) < 1e-12:
            raise SingularMapError(f"return map slope {self.a} is too close to 1")
        return self.b / (1.0 - self.a)


def _check_step(geom: PolygonGeometry, i: int, j: int) -> None:
    if j not in successors(geom.k, i):
        raise DomainError(f"side {j} is not reachable from side {i}")


def _raw_step(geom: PolygonGeometry, i: int, j: int, t: float) -> float:
    start = geom.point(i, t)
    normal = geom.inward_normal(i)
    pj, _ = geom.endpoints(j)
    dj = geom.direction(j)
    # start + s*normal = pj + u*dj
    s, u = np.linalg.solve(np.column_stack([normal, -dj]), pj - start)
    return float(u)


def step_map(geom: PolygonGeometry, i: int, j: int, t: float, eps: float = FEASIBILITY_EPS):
    """Carry parameter ``t`` on side ``i`` along the interior perpendicular to side ``j``.

    Returns ``(t', feasible)``; ``t'`` may fall outside [0, 1], in which case
    the perpendicular actually exits through the other successor side.
    """
    _check_step(geom, i, j)
    u = _raw_step(geom, i, j, t)
    return u, eps <= u <= 1 - eps


def step_affine(geom: PolygonGeometry, i: int, j: int) -> AffineMap1D:
    _check_step(geom, i, j)
    b = _raw_step(geom, i, j, 0.0)
    return AffineMap1D(_raw_step(geom, i, j, 1.0) - b, b)


def backward_step(geom: PolygonGeometry, i: int, j: int, u: float) -> float:
    """Inverse of :func:`step_map`: project the point on side ``j`` back onto side ``i``."""
    _check_step(geom, i, j)
    return geom.parameter(i, geom.point(j, u))


def _pairs(word: SideWord):
    n = len(word)
    return [(word[i], word[(i + 1) % n]) for i in range(n)]


def return_map(geom: PolygonGeometry, word: Sequence[int]) -> AffineMap1D:
    w = validate_word(geom.k, word)
    out = AffineMap1D(1.0, 0.0)
    for i, j in _pairs(w):
        out = out.then(step_affine(geom, i, j))
    return out


@dataclass(frozen=True)
class OrbitPolyline:
    word: SideWord
    params: tuple[float, ...]
    points: np.ndarray = field(repr=False, compare=False)
    closure_residual: float
    feasible: bool
    degenerate_vertex: bool

    @property
    def fixed_point(self) -> float:
        return self.params[0]

    def perpendicularity_errors(self, geom: PolygonGeometry) -> list[float]:
        """|cos| of the angle between each segment and its source side."""
        errs = []
        n = len(self.word)
        for idx, side in enumerate(self.word):
            seg = self.points[(idx + 1) % n] - self.points[idx]
            d = geom.direction(side)
            norm = np.hypot(*seg) * np.hypot(*d)
            errs.append(abs(float(np.dot(seg, d))) / norm if norm else 0.0)
        return errs


def solve_periodic_orbit(
    geom: PolygonGeometry,
    word: Sequence[int],
    eps: float = FEASIBILITY_EPS,
    closure_tol: float = CLOSURE_TOL,
) -> OrbitPolyline:
    """Fixed point of the return map, replayed forward into an inscribed polygon."""
    w = validate_word(geom.k, word)
    t = return_map(geom, w).fixed_point()
    params = [t]
    for i, j in _pairs(w)[:-1]:
        params.append(_raw_step(geom, i, j, params[-1]))
    back = _raw_step(geom, w[-1], w[0], params[-1])
    points = np.array([geom.point(s, p) for s, p in zip(w, params)])
    residual = float(np.hypot(*(geom.point(w[0], back) - points[0])))
    at_vertex = any(p < eps or p > 1 - eps for p in params)
    degenerate = len(set(w)) <= 2 or at_vertex
    inside = all(eps <= p <= 1 - eps for p in params)
    return OrbitPolyline(
        word=w,
        params=tuple(float(p) for p in params),
        points=points,
        closure_residual=residual,
        feasible=inside and residual < closure_tol and not degenerate,
        degenerate_vertex=degenerate,
    )


def banach_iterate(
    geom: PolygonGeometry,
    word: Sequence[int],
    t0: float = 0.5,
    tol: float = 1e-12,
    max_iter: int = 200,
    full: bool = False,
):
    """Backward orbit of ``t0`` around ``word`` until consecutive loops agree within ``tol``.

    Each backward step is an orthogonal projection onto the previous side,
    so one loop contracts by ``sin(theta/2) ** len(word)``. With ``full=True``
    returns ``(t, iterations)``.
    """
    w = validate_word(geom.k, word)
    if not 0.0 <= t0 <= 1.0:
        raise DomainError(f"t0 must lie in [0, 1], got {t0}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    pairs = _pairs(w)[::-1]
    t = float(t0)
    gap = math.inf
    for it in range(1, max_iter + 1):
        nxt = t
        for i, j in pairs:
            nxt = backward_step(geom, i, j, nxt)
        gap = abs(nxt - t)
        t = nxt
        if gap < tol:
            return (t, it) if full else t
    raise ConvergenceError(
        f"no convergence after {max_iter} loops (last={t!r}, gap={gap:.3e})", t, gap
    )


@dataclass(frozen=True)
class AuditRecord:
    k: int
    n: int
    word: SideWord
    feasible: bool
    degenerate_vertex: bool
    min_param: float
    max_param: float
    closure_residual: float


def realizability_audit(ks: Sequence[int], n_max: int, n_min: int = 3) -> list[AuditRecord]:
    """Solve every canonical orbit word and record whether it is geometrically realised."""
    from .oracle import list_canonical_orbits

    records = []
    for k in ks:
        geom = build_polygon(k)
        for n in range(n_min, n_max + 1):
            for w in list_canonical_orbits(k, n):
                orbit = solve_periodic_orbit(geom, w)
                records.append(
                    AuditRecord(
                        k, n, w, orbit.feasible, orbit.degenerate_vertex,
                        min(orbit.params), max(orbit.params), orbit.closure_residual,
                    )
                )
    return records
