# %% [markdown]
# # A differential with d^3 = 0
#
# Forms built from `dx` (grade 1) and `d2x` (grade 2) with j-twisted
# commutation rules.  Here `d^2` is not zero but `d^3` is.

# %%
import random

from ternwb.gradedforms import (
    CoordPoly, GradedForm, all_monomials, d, d3_check, display_d2, normal_form, random_coordpoly,
)

x1 = GradedForm.function(CoordPoly.var(3, 1))
print("d x1     =", d(x1))
print("d^2 x1   =", d(d(x1)))
print("d^3 x1   =", d(d(d(x1))))

# %% [markdown]
# On a product, `d^2` produces a cross term with coefficient `1 - j`
# that the closed-form display reproduces.

# %%
f = CoordPoly.var(3, 1) * CoordPoly.var(3, 2)
print(normal_form(d(d(GradedForm.function(f)))))
print(normal_form(d(d(GradedForm.function(f)))) == normal_form(display_d2(f)))

# %% [markdown]
# Exhaustive check on small monomials, then random polynomials.

# %%
for N in (1, 2, 3):
    monos = list(all_monomials(N, 4))
    print(N, len(monos), all(d3_check(m) for m in monos))
rng = random.Random(1)
print(all(d3_check(random_coordpoly(rng)) for _ in range(50)))
