# %% [markdown]
# # Bohr-Sommerfeld levels for p^6/(6m) + k x^6/6
#
# The action integral has square-root branch points at the turning points.
# Tanh-sinh quadrature handles them, and the result is compared with a
# closed form in Gamma functions.

# %%
import numpy as np

from ternwb import spectral as spc

for E in (0.1, 1.0, 100.0):
    print(E, spc.action_integral(E), spc.gamma_closed_form(E))
print("action constant :", spc.action_constant())
print("level coefficient:", spc.level_coefficient())

# %% [markdown]
# Two quantisation conventions: `action = n hbar` with n >= 1, and
# `action = 2 pi hbar (n + 1/2)` with n >= 0.

# %%
print(spc.quantization_csv(spc.energy_levels(4, "paper")))
print(spc.quantization_csv(spc.energy_levels(4, "standard")))

# %% [markdown]
# The standard rule, cubed, tracks the exact spectrum of `(p^6 + x^6)/6`.

# %%
lam = spc.sextic_spectrum(400, n_eig=61).eigenvalues
rows = spc.semiclassical_comparison(lam / 6, 20, 40)
print(max(r.rel_deviation for r in rows))

# %% [markdown]
# Harmonic sanity check: the action is `2 pi E / omega`.

# %%
print(spc.harmonic_bs_sanity(1.0) / (2 * np.pi))
