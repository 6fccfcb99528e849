"""
Solving a problem with an initial layer
=======================================

The built-in ``layer1`` problem is

    eps * y' = -x*y + eps + exp(-x/eps) + x*(x - exp(-x/eps) + 1),  y(0) = 0,

with exact solution y = x - exp(-x/eps) + 1: a smooth ramp plus an
exp(-x/eps) layer at the origin.  The same two-stage scheme with the same
node budget is dramatically more accurate once the nodes follow the layer.
"""

from shishkin_ivp import (
    ShishkinParams,
    build_shishkin_mesh,
    build_uniform_mesh,
    exact_eval,
    integrate,
    make_builtin,
    max_error,
)

EPS = 2.0**-8
N = 256

problem = make_builtin("layer1", EPS)
adapted = build_shishkin_mesh(ShishkinParams(n_intervals=N, epsilon=EPS))
uniform = build_uniform_mesh(N)

print(f"layer1 with eps = 2^-8, N = {N} intervals, scheme = heun")
print(f"{'mesh':>10} {'max error':>12}   nodes inside the layer [0, 4*eps]")
for label, mesh in (("uniform", uniform), ("adapted", adapted)):
    trajectory = integrate("heun", problem, mesh)
    inside = int((mesh.nodes <= 4 * EPS).sum())
    print(f"{label:>10} {max_error(trajectory, problem):12.3e}   {inside}")
print()

print("solution through the layer (adapted mesh, every 16th node):")
trajectory = integrate("heun", problem, adapted)
print(f"{'x':>12} {'numeric':>12} {'exact':>12} {'error':>10}")
for i in range(0, N + 1, 16):
    x = adapted.nodes[i]
    y = trajectory.values[i]
    y_ref = exact_eval(problem, x)
    print(f"{x:12.6f} {y:12.8f} {y_ref:12.8f} {abs(y - y_ref):10.2e}")
print()

print("gauss2 (A-stable, closed-form linear step) on the same meshes:")
for label, mesh in (("uniform", uniform), ("adapted", adapted)):
    trajectory = integrate("gauss2", problem, mesh)
    print(f"{label:>10} {max_error(trajectory, problem):12.3e}")
