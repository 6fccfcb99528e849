"""Single Runge-Kutta steps and whole-mesh integration.

Two step kernels are provided: a generic driver for any explicit tableau,
and the closed-form two-stage Gauss step for problems with a linear
right-hand side (the implicit stage system is solved symbolically, so no
iteration is needed).  Nonlinear implicit stepping is out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mesh import Mesh
from .problems import DOMAIN_TOL, EvaluationError, Problem, rhs_eval
from .tableaux import GAUSS2_GAMMA, ButcherTableau, named_tableau

#: Below this magnitude the Gauss-step denominator counts as singular.
SINGULAR_DENOMINATOR_TOL = 1e-14

GAUSS2 = "gauss2"


class StageEvaluationError(ArithmeticError):
    """A stage evaluation produced a non-finite value."""


class SingularStepError(ArithmeticError):
    """The linear Gauss step hit a (near-)singular stage system."""


@dataclass(frozen=True)
class Trajectory:
    """Numerical solution values at the nodes of a mesh."""

    mesh: Mesh
    values: np.ndarray
    scheme_id: str
    problem_id: str

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != self.mesh.nodes.shape:
            raise ValueError("one value per mesh node required")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)


def explicit_rk_step(
    tableau: ButcherTableau, problem: Problem, x_i: float, y_i: float, h_i: float
) -> float:
    """One explicit step: k_j = f(x + c_j h, y + h * sum_{q<j} a_jq k_q),
    then y + h * sum_j b_j k_j.  Stages are evaluated in ascending order."""
    if not tableau.explicit:
        raise ValueError(
            f"tableau {tableau.name or '<anonymous>'!r} is implicit; "
            "the generic driver handles explicit schemes only"
        )
    if not h_i > 0.0:
        raise ValueError(f"step size must be positive, got {h_i}")
    if x_i + h_i > problem.domain_end + DOMAIN_TOL:
        raise ValueError(
            f"step from x={x_i} with h={h_i} leaves the domain "
            f"[{problem.x0}, {problem.domain_end}]"
        )
    a, b, c = tableau._a_rows, tableau._b_list, tableau._c_list
    k = [0.0] * tableau.stages
    for j in range(tableau.stages):
        acc = 0.0
        for q in range(j):
            acc += a[j][q] * k[q]
        try:
            k[j] = rhs_eval(problem, x_i + c[j] * h_i, y_i + h_i * acc)
        except EvaluationError as exc:
            raise StageEvaluationError(
                f"stage {j + 1} of {tableau.stages} failed at x={x_i!r}: {exc}"
            ) from exc
    update = 0.0
    for j in range(tableau.stages):
        update += b[j] * k[j]
    return y_i + h_i * update


def gauss2_linear_step(
    problem: Problem, x_i: float, y_i: float, h_i: float
) -> float:
    """One two-stage Gauss step for y' = p(x)*y + q(x), in closed form.

    With p1, p2, q1, q2 the coefficients at the stage abscissae
    x + (1/2 -+ gamma)h, the update is

        y + h/2 * [(p1*y + q1)(1 + p2*gamma*h) + (p2*y + q2)(1 - p1*gamma*h)] / D,
        D = (1 - p1*h/4)(1 - p2*h/4) - p1*p2*(1/16 - gamma^2)*h^2.
    """
    if problem.linear is None:
        raise ValueError(
            f"problem {problem.label!r} has no linear form; the closed-form "
            "Gauss step requires y' = p(x)*y + q(x)"
        )
    if h_i < 0.0:
        raise ValueError(f"step size must be nonnegative, got {h_i}")
    g = GAUSS2_GAMMA
    p_fn, q_fn = problem.linear
    p1 = p_fn(x_i + (0.5 - g) * h_i)
    p2 = p_fn(x_i + (0.5 + g) * h_i)
    q1 = q_fn(x_i + (0.5 - g) * h_i)
    q2 = q_fn(x_i + (0.5 + g) * h_i)
    denom = (1.0 - 0.25 * p1 * h_i) * (1.0 - 0.25 * p2 * h_i) - p1 * p2 * (
        1.0 / 16.0 - g * g
    ) * h_i * h_i
    if abs(denom) <= SINGULAR_DENOMINATOR_TOL:
        raise SingularStepError(
            f"singular stage system (|D| = {abs(denom):.3e}) "
            f"at x={x_i!r}, h={h_i!r}"
        )
    numer = (p1 * y_i + q1) * (1.0 + p2 * g * h_i) + (p2 * y_i + q2) * (
        1.0 - p1 * g * h_i
    )
    result = y_i + 0.5 * h_i * numer / denom
    if not math.isfinite(result):
        raise StageEvaluationError(
            f"non-finite Gauss step result at x={x_i!r}, h={h_i!r}"
        )
    return result


def integrate(scheme: str, problem: Problem, mesh: Mesh) -> Trajectory:
    """Advance the problem across every mesh interval with the named scheme.

    Explicit schemes run through the generic driver; ``gauss2`` uses the
    closed-form linear step and therefore requires a linear problem.
    Exactly one step per interval, left to right.
    """
    nodes = mesh.nodes
    if (
        abs(nodes[0] - problem.x0) > DOMAIN_TOL
        or abs(nodes[-1] - problem.domain_end) > DOMAIN_TOL
    ):
        raise ValueError(
            f"mesh spans [{nodes[0]}, {nodes[-1]}] but problem domain is "
            f"[{problem.x0}, {problem.domain_end}]"
        )
    if scheme == GAUSS2:
        step = lambda x, y, h: gauss2_linear_step(problem, x, y, h)
    else:
        tableau = named_tableau(scheme)
        step = lambda x, y, h: explicit_rk_step(tableau, problem, x, y, h)
    x_list = nodes.tolist()
    h_list = mesh.widths.tolist()
    values = np.empty(len(nodes))
    y = float(problem.y0)
    values[0] = y
    for i, h in enumerate(h_list):
        try:
            y = step(x_list[i], y, h)
        except (StageEvaluationError, SingularStepError) as exc:
            raise type(exc)(f"step {i} failed: {exc}") from exc
        values[i + 1] = y
    return Trajectory(
        mesh=mesh,
        values=values,
        scheme_id=scheme,
        problem_id=problem.problem_id,
    )
