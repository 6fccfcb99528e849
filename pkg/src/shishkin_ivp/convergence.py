"""Max-norm errors, convergence-order estimates and sweep tables.

Order estimates use the layer-adapted scale: on meshes whose fine step
carries an ln N factor, the error behaves like (N^-1 ln N)^r, so the rate
r is recovered from a doubling N = 2^k -> 2^(k+1) as
ln(E_N / E_2N) / ln(2k / (k+1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mesh import (
    MESH_SHISHKIN,
    MESH_UNIFORM,
    ShishkinParams,
    build_shishkin_mesh,
    build_uniform_mesh,
)
from .problems import BUILTIN_NAMES, Problem, exact_eval, make_builtin
from .steppers import Trajectory, integrate

#: Increments at or below this magnitude are treated as roundoff jitter
#: when counting oscillations.
OSCILLATION_DEADBAND = 1e-14


@dataclass(frozen=True)
class SweepCell:
    """One (epsilon, k) cell: max-norm error and optional order estimate."""

    error: float
    order: float | None


@dataclass(frozen=True)
class ConvergenceTable:
    """Errors and order estimates over an (epsilon x N=2^k) grid.

    ``entries`` maps (epsilon, k) to a cell; the largest k of each column
    has no order estimate (it would need the next, uncomputed refinement).
    """

    scheme_id: str
    problem_id: str
    mesh_kind: str
    epsilons: tuple[float, ...]
    k_range: tuple[int, ...]
    entries: dict[tuple[float, int], SweepCell]


def max_error(trajectory: Trajectory, problem: Problem) -> float:
    """Discrete max-norm error max_i |y(x_i) - y_i| against the exact
    solution."""
    nodes = trajectory.mesh.nodes
    worst = 0.0
    for x, y in zip(nodes, trajectory.values):
        worst = max(worst, abs(exact_eval(problem, x) - y))
    return worst


def shishkin_order(e_n: float, e_2n: float, k: int) -> float:
    """Order estimate ln(E_N/E_2N) / ln(2k/(k+1)) for N = 2^k, k >= 2."""
    if k < 2:
        raise ValueError(f"k must be >= 2 (k = 1 zeroes the denominator), got {k}")
    if not (e_n > 0.0 and e_2n > 0.0):
        raise ValueError(f"errors must be positive, got {e_n!r}, {e_2n!r}")
    return math.log(e_n / e_2n) / math.log(2.0 * k / (k + 1.0))


def run_sweep(
    scheme: str,
    problem_name: str,
    epsilons: list[float] | tuple[float, ...],
    k_min: int,
    k_max: int,
    mesh_kind: str = MESH_SHISHKIN,
    method_order: int = 2,
    layer_constant: float = 1.0,
    split: float = 0.5,
) -> ConvergenceTable:
    """Integrate over meshes N = 2^k for every (epsilon, k) and tabulate
    errors with order estimates from consecutive refinements."""
    if not epsilons:
        raise ValueError("epsilons must be nonempty")
    if not 2 <= k_min < k_max:
        raise ValueError(f"need 2 <= k_min < k_max, got {k_min}, {k_max}")
    if problem_name not in BUILTIN_NAMES:
        raise ValueError(
            f"unknown problem {problem_name!r}; known: {BUILTIN_NAMES}"
        )
    if mesh_kind not in (MESH_UNIFORM, MESH_SHISHKIN):
        raise ValueError(f"unknown mesh kind {mesh_kind!r}")

    epsilons = tuple(epsilons)
    k_range = tuple(range(k_min, k_max + 1))
    errors: dict[tuple[float, int], float] = {}
    for eps in epsilons:
        problem = make_builtin(problem_name, eps)
        for k in k_range:
            n = 2**k
            try:
                if mesh_kind == MESH_SHISHKIN:
                    mesh = build_shishkin_mesh(
                        ShishkinParams(
                            n_intervals=n,
                            epsilon=eps,
                            method_order=method_order,
                            layer_constant=layer_constant,
                            split=split,
                        )
                    )
                else:
                    mesh = build_uniform_mesh(n)
                trajectory = integrate(scheme, problem, mesh)
                errors[(eps, k)] = max_error(trajectory, problem)
            except (ValueError, ArithmeticError) as exc:
                raise type(exc)(
                    f"sweep cell (eps={eps:.17g}, k={k}) failed: {exc}"
                ) from exc

    entries = {
        (eps, k): SweepCell(
            error=errors[(eps, k)],
            order=(
                shishkin_order(errors[(eps, k)], errors[(eps, k + 1)], k)
                if k < k_max
                else None
            ),
        )
        for eps in epsilons
        for k in k_range
    }
    return ConvergenceTable(
        scheme_id=scheme,
        problem_id=problem_name,
        mesh_kind=mesh_kind,
        epsilons=epsilons,
        k_range=k_range,
        entries=entries,
    )


def oscillation_count(trajectory: Trajectory) -> int:
    """Number of strict sign changes between successive solution
    increments, ignoring increments within the roundoff dead band."""
    values = trajectory.values
    if len(values) < 3:
        raise ValueError("need at least 3 values to count oscillations")
    increments = np.diff(values)
    signs = np.sign(increments[np.abs(increments) > OSCILLATION_DEADBAND])
    if len(signs) < 2:
        return 0
    return int(np.sum(signs[1:] != signs[:-1]))
