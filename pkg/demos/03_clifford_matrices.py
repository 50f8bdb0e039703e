# %% [markdown]
# # Ternary Clifford matrices
#
# Three 3x3 matrices `Q1, Q2, Q3` built from cube roots of unity.  Their
# symmetrised cubic products are scalar multiples of the identity, and the
# scalars form the eta table.

# %%
import random

from ternwb import matrixternary as mt

rep = mt.eta_verify()
print("all products scalar:", rep.all_scalar)
print("dotted table is conjugate-reverse:", rep.dotted_is_conjugate)
for t in [(1, 1, 1), (1, 2, 3), (3, 2, 1)]:
    print(t, "computed", rep.undotted[t], " reference", rep.expected_undotted[t])

# %% [markdown]
# The reference table disagrees with the computed one in 18 entries.  Each
# disagreement is the same pattern: the computed value is three times the
# reference value times a power of `j`, one for every index equal to 1.

# %%
for name, t, got, want in rep.mismatches()[:6]:
    print(name, t, got, "vs", want)
print("total mismatches:", len(rep.mismatches()))

# %% [markdown]
# The j-skew sums vanish, and the scalar table is invariant under any
# similarity transform.

# %%
print({k: v.is_zero() for k, v in mt.skew_vanish_check().items()})
rng = random.Random(0)
print(all(mt.similarity_invariance(mt.random_invertible(rng)) for _ in range(10)))

# %% [markdown]
# Pauli matrices under the same cubic bracket.

# %%
s1, s2, s3 = mt.pauli()
print(mt.pauli_cubic(1, 2, 1) == s2 * -2, mt.pauli_cubic(1, 2, 3).is_zero())
