"""Exact counts against the closed-form upper bounds.

Most rows pass with room to spare.  Near k = n the bounds on the
tableau-sum statistic and on xi itself are too small; the first failing
cells are printed at the end.
"""
from permorder import beth_bound, beth_exact, verify, xi_bound, xi_shapes

report = verify(7, xi_method="shapes", l_max=8)
print(f"{len(report.rows)} rows up to n=7, all pass: {report.all_pass}")

worst = max(report.rows, key=lambda r: r.ratio)
print(f"tightest: {worst.statistic} n={worst.n} k={worst.k} ratio={float(worst.ratio):.3f}")

# %% Where the tableau-sum bound first breaks.
for n in range(12, 16):
    exact, bound = beth_exact(n, n), beth_bound(n, n)
    print(f"beth({n},{n}) = {exact:>9d}   bound = {float(bound):>12.1f}   ok={exact <= bound}")

# %% And the xi bound, which needs both tableaux squared.
for n in range(17, 21):
    exact, bound = xi_shapes(n, n), xi_bound(n, n)
    print(f"xi({n},{n}) / bound = {float(exact / bound):.3f}")
