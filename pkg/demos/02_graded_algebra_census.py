# %% [markdown]
# # Cubic relations and quotient dimensions
#
# Free algebras on N generators modulo cubic j-twisted relations.  The
# dimensions of the quotient in degrees 0..4 are found by exact row
# reduction over the cyclotomic field.

# %%
from ternwb import gradedalg as ga

for N in (2, 3, 4):
    rep = ga.hilbert_check(N)
    print(f"N={N}", rep.computed, "expected", rep.expected, "ok" if rep.ok else "MISMATCH")

# %% [markdown]
# A wider table, written as CSV.

# %%
print(ga.dimension_csv(ga.dimension_table(Ns=(2, 3))))

# %% [markdown]
# Surjections between quotients hold exactly when one degree-3 ideal sits
# inside the other.  Note the direction for `Lam1`: it maps *onto* the
# twisted algebras, not the other way round.

# %%
for src, dst in [("S", "S1"), ("S1", "S0"), ("Lam0", "Lam1"), ("Lam1", "Lam"), ("Lam", "Lam1")]:
    print(f"{src:5s} -> {dst:6s}", ga.surjection_check(src, dst, 3))

# %% [markdown]
# The ternary j-commutator picks up a factor `j^2` under cyclic rotation.

# %%
x1, x2, x3 = (ga.NCPoly.word((ga.gen("x", k),)) for k in (1, 2, 3))
a = ga.ternary_j_commutator(x1, x2, x3)
b = ga.ternary_j_commutator(x2, x3, x1)
print(b == a * ga.J2)
