"""Steady 2pi-periodic divergence-free velocity fields with chaotic streamlines.

Points and velocities are plain numpy arrays. Scalar-point helpers accept
shape (3,); the component evaluators broadcast over arbitrary array shapes,
which is what the grid solver and the batched trajectory integrator rely on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

TWO_PI = 2.0 * np.pi

ABC_SUP_NORM = np.sqrt(6.0)
ABC_SUP_NORM_X = 2.0
KOLMOGOROV_SUP_NORM = np.sqrt(3.0)
KOLMOGOROV_SUP_NORM_X = 1.0


class FlowKind(enum.Enum):
    ABC = "abc"
    KOLMOGOROV = "kolmogorov"

    @classmethod
    def parse(cls, name: str) -> "FlowKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown flow kind {name!r}; expected 'abc' or 'kolmogorov'")


class PeriodicVelocityField(Protocol):
    """Extension point for user-defined 2pi-periodic fields (unused by the toolkit)."""

    intensity: float

    def velocity(self, points: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class FlowField:
    """A named periodic velocity field scaled by intensity.

    The intensity must be >= 0; zero is the degenerate laminar case used as
    a solver baseline (the speed bounds themselves assume intensity > 0).
    """

    kind: FlowKind
    intensity: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.intensity) or self.intensity < 0:
            raise ValueError(f"intensity must be finite and >= 0, got {self.intensity}")

    def velocity(self, points: np.ndarray) -> np.ndarray:
        """Velocity at points of shape (..., 3), returned with the same shape."""
        points = np.asarray(points, dtype=float)
        x, y, z = points[..., 0], points[..., 1], points[..., 2]
        u, v, w = velocity_components(self.kind, x, y, z)
        return self.intensity * np.stack([u, v, w], axis=-1)

    def speed(self, points: np.ndarray) -> np.ndarray:
        return np.linalg.norm(self.velocity(points), axis=-1)


def velocity_components(kind: FlowKind, x, y, z):
    """Unit-intensity velocity components, broadcasting over array inputs.

    Each component is independent of its own coordinate, which makes the
    characteristic feet of the dimensional sweeps exact.
    """
    if kind is FlowKind.ABC:
        return (np.sin(z) + np.cos(y), np.sin(x) + np.cos(z), np.sin(y) + np.cos(x))
    if kind is FlowKind.KOLMOGOROV:
        return (np.sin(z), np.sin(x), np.sin(y))
    raise ValueError(f"unknown flow kind {kind!r}")


def evaluate(flow: FlowField, p: np.ndarray) -> np.ndarray:
    """Velocity of `flow` at a single point p = (x, y, z)."""
    return flow.velocity(np.asarray(p, dtype=float))


def sup_norms(kind: FlowKind) -> tuple[float, float]:
    """(sup |V|, sup |V.e1|) as exact analytic constants.

    These enter the front-speed bound lines and are deliberately hardcoded;
    the test suite checks dense grid samples never exceed them.
    """
    if kind is FlowKind.ABC:
        return ABC_SUP_NORM, ABC_SUP_NORM_X
    if kind is FlowKind.KOLMOGOROV:
        return KOLMOGOROV_SUP_NORM, KOLMOGOROV_SUP_NORM_X
    raise ValueError(f"unknown flow kind {kind!r}")


@dataclass(frozen=True, eq=False)
class SymmetryRelation:
    """An exact pointwise symmetry V(M p + b) = sign * V(p)[perm].

    `matrix` and `offset` define the affine input map; `out_perm` permutes the
    velocity components and `out_sign` flips their signs (the Hadamard factor).
    Most relations have the identity permutation; the diagonal-swap symmetry of
    the ABC field permutes the y and z components.
    """

    name: str
    matrix: np.ndarray
    offset: np.ndarray
    out_sign: np.ndarray
    out_perm: tuple[int, int, int] = (0, 1, 2)

    def map_point(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return p @ self.matrix.T + self.offset

    def map_velocity(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        return self.out_sign * v[..., list(self.out_perm)]

    @property
    def output_matrix(self) -> np.ndarray:
        """Matrix S with S v = sign * v[perm]; used to classify orbit transport."""
        s = np.zeros((3, 3))
        for i, j in enumerate(self.out_perm):
            s[i, j] = self.out_sign[i]
        return s

    @property
    def trajectory_time_sign(self) -> int | None:
        """+1 if the relation maps trajectories to forward trajectories,
        -1 if to time-reversed ones, None if it does not transport orbits
        on its own (only in composition with another relation)."""
        s = self.output_matrix
        if np.array_equal(self.matrix, s):
            return 1
        if np.array_equal(self.matrix, -s):
            return -1
        return None

    def residual(self, flow: FlowField, points: np.ndarray) -> np.ndarray:
        """|V(map(p)) - sign*V(p)[perm]| over points of shape (..., 3)."""
        lhs = flow.velocity(self.map_point(points))
        rhs = self.map_velocity(flow.velocity(points))
        return np.linalg.norm(lhs - rhs, axis=-1)


def _diag(a, b, c) -> np.ndarray:
    return np.diag(np.array([a, b, c], dtype=float))


def symmetry_catalog(kind: FlowKind) -> list[SymmetryRelation]:
    """Every symmetry used to build and certify the ballistic orbits."""
    pi = np.pi
    if kind is FlowKind.ABC:
        return [
            SymmetryRelation(
                name="axis {x=pi/2, y=0}",
                matrix=_diag(-1, -1, 1),
                offset=np.array([pi, 0.0, 0.0]),
                out_sign=np.array([1.0, 1.0, -1.0]),
            ),
            SymmetryRelation(
                name="axis {x=pi, z=pi/2}",
                matrix=_diag(-1, 1, -1),
                offset=np.array([2 * pi, 0.0, pi]),
                out_sign=np.array([1.0, -1.0, 1.0]),
            ),
            SymmetryRelation(
                name="point-reflection to negative-direction orbit",
                matrix=_diag(-1, -1, 1),
                offset=np.array([0.0, pi, -pi]),
                out_sign=np.array([-1.0, -1.0, 1.0]),
            ),
            SymmetryRelation(
                name="diagonal swap of y and z",
                matrix=np.array([[-1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, -1.0, 0.0]]),
                offset=np.array([pi / 2, pi / 2, pi / 2]),
                out_sign=np.array([1.0, 1.0, 1.0]),
                out_perm=(0, 2, 1),
            ),
        ]
    if kind is FlowKind.KOLMOGOROV:
        return [
            SymmetryRelation(
                name="axis {x=pi/2, y=pi}",
                matrix=_diag(-1, -1, 1),
                offset=np.array([pi, 2 * pi, 0.0]),
                out_sign=np.array([1.0, 1.0, -1.0]),
            ),
            SymmetryRelation(
                name="axis {x=pi, z=pi/2}",
                matrix=_diag(-1, 1, -1),
                offset=np.array([2 * pi, 0.0, pi]),
                out_sign=np.array([1.0, -1.0, 1.0]),
            ),
            SymmetryRelation(
                name="point symmetry about the origin",
                matrix=_diag(-1, -1, -1),
                offset=np.zeros(3),
                out_sign=np.array([-1.0, -1.0, -1.0]),
            ),
            SymmetryRelation(
                name="half-period shift in y",
                matrix=_diag(1, 1, 1),
                offset=np.array([0.0, pi, 0.0]),
                out_sign=np.array([1.0, 1.0, -1.0]),
            ),
        ]
    raise ValueError(f"unknown flow kind {kind!r}")
