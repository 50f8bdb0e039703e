# %% [markdown]
# # Ternary Heisenberg operators
#
# Polynomials in `x` and `D = d/dx`, normal ordered with `D x = x D + 1`.
# The coefficients may contain a formal parameter `lam`.

# %%
from ternwb import weylops as wo
from ternwb.gradedalg import commutator

c1, c2 = wo.build_c(1), wo.build_c(2)
print("c1 =", c1)
print("[c1, c2] =", commutator(c1, c2))

# %%
for r in wo.heisenberg_identity_suite():
    print(f"{r.check_id:14s}", "ok" if r.ok else "FAIL")

# %% [markdown]
# With the square-root normalisation the six-term relation gives
# `sqrt(hbar)` rather than 1.

# %%
r = wo.normalized_six_term()
print(r.lhs, "| expected", r.rhs)

# %% [markdown]
# The third-order operator and the sextic Hamiltonian.  With `lam = -i` the
# operator is self-adjoint.  The Hamiltonian comes out as `x^6 - D^6`,
# which equals `p^6 + x^6`.

# %%
k = wo.build_khat()
print("K =", k)
print("K(-i) self-adjoint:", k.specialize(lam=-wo.I).adjoint() == k.specialize(lam=-wo.I))
print("H =", wo.build_hamiltonian_z3())

# %% [markdown]
# The sum of the three j-twisted quadratic Hamiltonians over even
# rotations is `3H`.

# %%
rep = wo.cyclic_h_check()
print(rep.even == wo.build_hamiltonian_z3() * 3)
