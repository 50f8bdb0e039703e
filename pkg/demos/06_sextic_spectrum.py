# %% [markdown]
# # The sextic oscillator spectrum
#
# `H = p^6 + x^6` in the harmonic-oscillator number basis.  A banded
# symmetric eigensolver gives the low spectrum, and a second truncation
# estimates the error.

# %%
import numpy as np

from ternwb import spectral as spc
from ternwb.weylops import build_hamiltonian_z3

s = spc.sextic_spectrum(400)
print(s.converged_count, "converged eigenvalues")
print(spc.spectrum_csv(s, 8))

# %% [markdown]
# An independent check on a finite-difference grid with an 11-point stencil.

# %%
fd = spc.fd_oracle(build_hamiltonian_z3())
print(np.abs(fd / s.eigenvalues[:6] - 1).max())

# %% [markdown]
# The harmonic oscillator gives the expected odd integers.

# %%
print(spc.spectrum(spc.harmonic_operator(), 64, n_eig=6).eigenvalues.round(12))

# %% [markdown]
# Large eigenvalues grow as `n^3`.

# %%
lam = spc.sextic_spectrum(400, n_eig=61).eigenvalues
print("log-log slope:", spc.loglog_slope(lam, 20, 60))
