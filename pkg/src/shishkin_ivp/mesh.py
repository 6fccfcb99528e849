"""Uniform and layer-adapted (Shishkin) meshes on the unit interval.

A Shishkin mesh condenses half of the nodes inside the boundary/initial
layer of width ``sigma = min(1/2, (n/b) * eps * ln N)`` and spreads the
rest uniformly over the remainder.  Both pieces are uniform, so the mesh
is fully described by the transition point ``sigma`` and the node split
``alpha`` (fraction of intervals placed inside the layer).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Saturation cap of the transition point: the layer piece never covers
#: more than half of the domain.
SIGMA_CAP = 0.5

MESH_UNIFORM = "uniform"
MESH_SHISHKIN = "shishkin"

#: Absolute tolerance for the sum-of-widths / node-span consistency checks.
WIDTH_CONSISTENCY_ATOL = 1e-12


@dataclass(frozen=True)
class ShishkinParams:
    """Inputs of the Shishkin mesh construction.

    Attributes
    ----------
    n_intervals:
        Total number of mesh intervals N.  Must be even and >= 4 so the
        split produces an integral number of fine intervals.
    epsilon:
        Perturbation parameter, in (0, 1].
    method_order:
        Mesh grading order n (typically the convergence order of the
        intended scheme), integer >= 1.
    layer_constant:
        Positive constant b scaling the layer width estimate.
    split:
        Fraction alpha of intervals placed inside the layer, in (0, 1).
        alpha * N must be integral.
    """

    n_intervals: int
    epsilon: float
    method_order: int = 2
    layer_constant: float = 1.0
    split: float = 0.5

    def __post_init__(self):
        if self.n_intervals < 4 or self.n_intervals % 2 != 0:
            raise ValueError(
                f"n_intervals must be even and >= 4, got {self.n_intervals}"
            )
        if not 0.0 < self.epsilon <= 1.0:
            raise ValueError(f"epsilon must be in (0, 1], got {self.epsilon}")
        if self.method_order < 1:
            raise ValueError(f"method_order must be >= 1, got {self.method_order}")
        if not self.layer_constant > 0.0:
            raise ValueError(
                f"layer_constant must be positive, got {self.layer_constant}"
            )
        if not 0.0 < self.split < 1.0:
            raise ValueError(f"split must be in (0, 1), got {self.split}")
        m = self.split * self.n_intervals
        if abs(m - round(m)) > 1e-9:
            raise ValueError(
                f"split * n_intervals must be integral, got {m} "
                f"(split={self.split}, n_intervals={self.n_intervals})"
            )


@dataclass(frozen=True)
class Mesh:
    """Ordered nodes x_0 < ... < x_N with per-interval widths.

    ``widths`` stores the defining interval widths; for the two-piece
    constructions these are the exact per-piece constants, and the node
    differences agree with them to machine precision.
    """

    nodes: np.ndarray
    widths: np.ndarray
    kind: str
    sigma: float | None = None

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        widths = np.asarray(self.widths, dtype=float)
        if nodes.ndim != 1 or widths.ndim != 1 or len(widths) != len(nodes) - 1:
            raise ValueError("mesh needs N+1 nodes and N widths")
        nodes.setflags(write=False)
        widths.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "widths", widths)

    @property
    def n_intervals(self) -> int:
        return len(self.widths)


def transition_point(params: ShishkinParams) -> float:
    """Transition abscissa sigma = min(1/2, (n/b) * eps * ln N)."""
    scaled = (
        (params.method_order / params.layer_constant)
        * params.epsilon
        * math.log(params.n_intervals)
    )
    return min(SIGMA_CAP, scaled)


def generating_function_eval(sigma: float, alpha: float, xi: float) -> float:
    """Map a reference coordinate xi in [0, 1] to a physical node.

    Piecewise linear: slope sigma/alpha on [0, alpha], then the unique
    linear continuation through (1, 1).  Continuous at alpha with value
    exactly sigma, and endpoint values exactly 0 and 1.
    """
    if not 0.0 < sigma <= SIGMA_CAP:
        raise ValueError(f"sigma must be in (0, {SIGMA_CAP}], got {sigma}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if not 0.0 <= xi <= 1.0:
        raise ValueError(f"xi must be in [0, 1], got {xi}")
    if xi <= alpha:
        # sigma * (xi/alpha) rather than (sigma/alpha) * xi: xi/alpha == 1.0
        # exactly at the split, so both branches return sigma bit-for-bit.
        return sigma * (xi / alpha)
    return sigma + (1.0 - sigma) * ((xi - alpha) / (1.0 - alpha))


def build_from_sigma(n_intervals: int, alpha: float, sigma: float) -> Mesh:
    """Two-piece mesh with an explicitly given transition point.

    The fine piece [0, sigma] gets alpha*N intervals of width sigma/m and
    the coarse piece [sigma, 1] the remaining N - m of width (1-sigma)/(N-m).
    Widths are stored as those exact constants; nodes are single-rounding
    multiples of them with the junction pinned to sigma and the endpoints
    to 0 and 1.
    """
    if n_intervals < 2:
        raise ValueError(f"n_intervals must be >= 2, got {n_intervals}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if not 0.0 < sigma <= SIGMA_CAP:
        raise ValueError(f"sigma must be in (0, {SIGMA_CAP}], got {sigma}")
    m = round(alpha * n_intervals)
    if abs(alpha * n_intervals - m) > 1e-9 or not 0 < m < n_intervals:
        raise ValueError(
            f"alpha * n_intervals must be integral and interior, "
            f"got {alpha * n_intervals}"
        )
    h_fine = sigma / m
    h_coarse = (1.0 - sigma) / (n_intervals - m)
    fine = h_fine * np.arange(m + 1)
    fine[m] = sigma
    coarse = sigma + h_coarse * np.arange(1, n_intervals - m + 1)
    coarse[-1] = 1.0
    widths = np.concatenate([np.full(m, h_fine), np.full(n_intervals - m, h_coarse)])
    return Mesh(
        nodes=np.concatenate([fine, coarse]),
        widths=widths,
        kind=MESH_SHISHKIN,
        sigma=sigma,
    )


def build_shishkin_mesh(params: ShishkinParams) -> Mesh:
    """Shishkin mesh on [0, 1] for the given parameters."""
    return build_from_sigma(
        params.n_intervals, params.split, transition_point(params)
    )


def build_uniform_mesh(
    n_intervals: int, interval: tuple[float, float] = (0.0, 1.0)
) -> Mesh:
    """Equidistant mesh with h = (x_hi - x_lo) / N."""
    x_lo, x_hi = interval
    if n_intervals < 1:
        raise ValueError(f"n_intervals must be >= 1, got {n_intervals}")
    if not x_lo < x_hi:
        raise ValueError(f"degenerate interval [{x_lo}, {x_hi}]")
    h = (x_hi - x_lo) / n_intervals
    nodes = x_lo + h * np.arange(n_intervals + 1)
    nodes[-1] = x_hi
    return Mesh(
        nodes=nodes,
        widths=np.full(n_intervals, h),
        kind=MESH_UNIFORM,
        sigma=None,
    )


def validate_mesh(
    mesh: Mesh, x_start: float = 0.0, x_end: float = 1.0
) -> list[str]:
    """Report structural violations; an empty list means the mesh is valid.

    Checks monotonicity, the expected endpoints (canonical [0, 1] by
    default), width positivity, and per-interval plus total consistency
    between the stored widths and the node differences.
    """
    report: list[str] = []
    nodes = mesh.nodes
    widths = mesh.widths
    diffs = np.diff(nodes)
    for i in np.nonzero(diffs <= 0.0)[0]:
        report.append(f"nodes not strictly increasing at index {i + 1}")
    if nodes[0] != x_start:
        report.append(f"left endpoint is {nodes[0]!r}, expected {x_start!r}")
    if nodes[-1] != x_end:
        report.append(f"right endpoint is {nodes[-1]!r}, expected {x_end!r}")
    for i in np.nonzero(widths <= 0.0)[0]:
        report.append(f"nonpositive width at index {i}")
    gap = np.abs(widths - diffs)
    for i in np.nonzero(gap > WIDTH_CONSISTENCY_ATOL)[0]:
        report.append(
            f"width {widths[i]!r} inconsistent with node difference "
            f"{diffs[i]!r} at index {i}"
        )
    total = abs(float(np.sum(widths)) - (nodes[-1] - nodes[0]))
    if total > WIDTH_CONSISTENCY_ATOL:
        report.append(f"sum of widths deviates from node span by {total:.3e}")
    return report
