# %% [markdown]
# # Power series for the third-order equation
#
# `2i f''' - x^3 f = (1 + K) f` has three power-series branches near the
# origin, starting as `1`, `x` and `x^2`.  The coefficients are exact.

# %%
import numpy as np

from ternwb import spectral as spc

for b in (0, 1, 2):
    sol = spc.series_solution(b, terms=60)
    res = np.abs(spc.ode_residual(sol, np.linspace(-1, 1, 64))).max()
    print(b, [str(sol.coefficient(k)) for k in range(b, b + 13, 6)], f"residual {res:.1e}")

# %% [markdown]
# For `K = -1` each branch is a hypergeometric function `0F2(;p,q;xi)` in
# `xi = -i x^6 / 432`.  The parameters come from the exact coefficient
# ratios.

# %%
for b in (0, 1, 2):
    m = spc.match_series_to_F(spc.series_solution(b))
    print(b, m.p, m.q, m.argument, m.convention, "| reference", *map(str, m.printed_p_q))

# %% [markdown]
# The third branch has parameters `(7/6, 4/3)`, which differs from the
# reference values `(7/3, 4/3)`.  The first two agree.
