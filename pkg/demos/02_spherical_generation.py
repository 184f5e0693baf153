# %% [markdown]
# # Generating W+ from its z-degree-one part
#
# The elements `z D^a` generate all of W+ (within any finite window) under each
# bracket.  `generate_subalgebra` saturates a generator set in a window
# `m <= m_max`, `a <= a_max` and returns a canonical echelon basis.

# %%
from fractions import Fraction

from wkit.charseries import char_closed_form
from wkit.liegen import ad_power_elements, character_of, generate_subalgebra, rank_profile, spherical_generators

space = generate_subalgebra(spherical_generators(4), "graded", 4, 4)
for m in range(1, 5):
    print(f"m={m}:", [space.dims()[(m, a)] for a in range(5)])

# %% [markdown]
# Every bidegree has dimension one, so the bigraded character of the window is
# the truncation of `t^2 q^-2 / ((1 - t^2)(1 - q^2))`.

# %%
ch = character_of(space)
print(ch.format())
print("matches closed form:", ch == char_closed_form("grW", wmax=8, cmin=-2, cmax=6))

# %% [markdown]
# Over Q(t) the deformed bracket gives the same answer, and the rank does not
# drop at any of the sampled specializations of t.

# %%
deformed = generate_subalgebra(spherical_generators(3), "deformed", 3, 3)
for c, dims in rank_profile(deformed).items():
    print(f"t={c}: total dimension {sum(dims.values())}")

# %% [markdown]
# ## Iterated adjoint action of zD
#
# `[zD, z^k D^n]` has leading coefficient `k - n`, so `ad_{zD}^m (z D^n)` dies
# as soon as `1 <= n <= m`.  These powers alone therefore do *not* fill the
# window.

# %%
table = ad_power_elements(3, 3, "classical")
for (m, n), v in sorted(table.elements.items()):
    print(f"ad^{m}(zD^{n}) = {v}")
print("zero entries:", table.zero_entries())
