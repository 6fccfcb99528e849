"""
Layer-adapted meshes
====================

A solution with an initial layer changes on the scale eps near x = 0, so
an equidistant mesh wastes almost all of its nodes where nothing happens.
The two-piece layer-adapted mesh puts half of the intervals into
[0, sigma] with sigma = min(1/2, (n/b) * eps * ln N), and this script
shows how that transition point moves with eps and N.
"""

import numpy as np

from shishkin_ivp import (
    ShishkinParams,
    build_shishkin_mesh,
    build_uniform_mesh,
    transition_point,
    validate_mesh,
)
from shishkin_ivp.cli import format_mesh_csv

print("Transition point sigma = min(1/2, (n/b) eps ln N), n = 2, b = 1")
print(f"{'N':>8} " + " ".join(f"eps=2^{e:<3d}" for e in (-2, -6, -10, -20)))
for k in (4, 8, 12, 16):
    sigmas = [
        transition_point(ShishkinParams(n_intervals=2**k, epsilon=2.0**e))
        for e in (-2, -6, -10, -20)
    ]
    print(f"{2 ** k:>8} " + " ".join(f"{s:9.6f}" for s in sigmas))
print()
print("sigma = 1/2 means the cap binds and the mesh degenerates to uniform.")
print()

params = ShishkinParams(n_intervals=16, epsilon=2.0**-6)
mesh = build_shishkin_mesh(params)
uniform = build_uniform_mesh(16)
sigma = transition_point(params)
print(f"N = 16, eps = 2^-6: sigma = {sigma:.6f}")
print(f"fine width  {mesh.widths[0]:.6f} = 2*sigma/N")
print(f"coarse width {mesh.widths[-1]:.6f} = 2*(1-sigma)/N")
print()
print("node placement (. = layer-adapted, ' = uniform):")
scale = 72
for label, nodes in (("adapted", mesh.nodes), ("uniform", uniform.nodes)):
    line = [" "] * (scale + 1)
    for x in nodes:
        line[round(x * scale)] = "." if label == "adapted" else "'"
    print(f"  {label}: |{''.join(line)}|")
print()

report = validate_mesh(mesh)
print(f"structural validation: {'clean' if not report else report}")
print()
print("First rows of the CSV dump (shishkin-ivp mesh ... emits the same):")
print("\n".join(format_mesh_csv(mesh).splitlines()[:6]))
