"""
Convergence tables on layer-adapted meshes
==========================================

On a layer-adapted mesh the fine step carries an ln N factor, so the
natural convergence measure is the rate r in E_N ~ (N^-1 ln N)^r,
estimated from a doubling as ln(E_N/E_2N) / ln(2k/(k+1)) with N = 2^k.
A second-order scheme should show r = 2 uniformly in eps; a third-order
scheme r = 3.  The Gauss scheme's closed-form linear step is fourth-order
accurate and reaches the roundoff floor almost immediately.
"""

from shishkin_ivp import run_sweep
from shishkin_ivp.cli import format_sweep_markdown

EPS_LABELS = ("2^-4", "2^-6", "2^-8")
EPSILONS = tuple(2.0**e for e in (-4, -6, -8))

for scheme, kmin, kmax in (("heun", 8, 12), ("rk3_a", 8, 12), ("gauss2", 6, 10)):
    table = run_sweep(scheme, "layer1", EPSILONS, kmin, kmax)
    print(f"scheme = {scheme}, problem = layer1, layer-adapted mesh "
          f"(n = 2, b = 1, alpha = 1/2)")
    print(format_sweep_markdown(table, EPS_LABELS))
print("""Notes:
- eps = 2^-4 saturates the transition point for these N, so that column
  runs on a uniform mesh and its adjusted rate sits above the nominal
  order (ln(E_N/E_2N)/ln 2 would give the classical order there).
- the gauss2 column bottoms out at the roundoff floor ~1e-13, after
  which rate estimates are meaningless.""")
