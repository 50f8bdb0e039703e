# %% [markdown]
# # Exact scalars
#
# Every symbolic object in the package carries coefficients in the
# cyclotomic field generated by a primitive 12th root of unity.  It holds
# the cube root of unity `J` and the imaginary unit `I`, so there is no
# rounding anywhere in the algebraic checks.

# %%
from fractions import Fraction

from ternwb import I, J, J2, ONE, SQRT3, Cyclo12

print("J  =", J)
print("J^3 == 1:", J ** 3 == ONE)
print("1 + J + J^2 == 0:", (ONE + J + J2).is_zero())

# %% [markdown]
# `I` and `SQRT3` live in the same field, and `J - J^2 = i sqrt(3)`.

# %%
print(J - J2 == I * SQRT3)
print("I^2 =", I * I)

# %% [markdown]
# Inverses and complex conjugation are exact too.

# %%
z = J * 3 + Fraction(1, 2)
print("z       =", z)
print("z^-1    =", z.inv())
print("z z^-1  =", z * z.inv())
print("conj(J) == J^2:", J.conj() == J2)
print("numeric value:", z.to_complex())
