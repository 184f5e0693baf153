# %% [markdown]
# # Three brackets on W+ and the Heisenberg action
#
# W+ is spanned by `z^m D^n` (m >= 1, n >= 0) with `D = z d/dz`.  Elements are
# written as `z^m * f(D)`.  Three brackets are available:
#
# * `classical`: the commutator of differential operators;
# * `graded`:    its associated graded, `[z^m D^a, z^n D^b] = (an - bm) z^{m+n} D^{a+b-1}`;
# * `deformed`:  a one-parameter family over Q[t] that is `graded` at t = 0
#                and `classical` at t = 1.

# %%
from wkit.walgebra import bracket, filtration_degree, heis_lower, heis_raise, parse_welement, specialize_t

x = parse_welement("z*D^2")
y = parse_welement("z^3")
for kind in ("classical", "graded", "deformed"):
    print(f"{kind:>9}: [{x}, {y}] = {bracket(x, y, kind)}")

# %% [markdown]
# The deformed bracket specializes to the other two.

# %%
d = bracket(x, y, "deformed")
print("t=0:", specialize_t(d, 0), "   graded:", bracket(x, y, "graded"))
print("t=1:", specialize_t(d, 1), "   classical:", bracket(x, y, "classical"))

# %% [markdown]
# ## Order filtration
#
# `z^m D^a` sits in filtration degree `2a - 2`; the classical bracket never
# raises the combined degree.

# %%
a, b = parse_welement("z^2*D^3"), parse_welement("z*D^2")
print(filtration_degree(a), filtration_degree(b), filtration_degree(bracket(a, b, "classical")))

# %% [markdown]
# ## Heisenberg operators
#
# `heis_raise = [D^2, -]` and `heis_lower = d/dD` are derivations of the
# classical bracket, and on the z-degree-m slice `[lower, raise] = 2m`.

# %%
for m in range(1, 5):
    v = parse_welement(f"z^{m}*D^2")
    comm = heis_lower(heis_raise(v)) - heis_raise(heis_lower(v))
    print(f"m={m}: [lower, raise]({v}) = {comm}")

# %% [markdown]
# ## A commutator that grows z-degree by one
#
# In the graded algebra `[zD, z^m] = m z^{m+1}`.

# %%
zD = parse_welement("z*D")
print([str(bracket(zD, parse_welement(f"z^{m}"), "graded")) for m in range(1, 6)])
