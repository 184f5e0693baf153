# %% [markdown]
# # The shuffle algebra and the affine Yangian relations
#
# Degree-d elements are symmetric polynomials in `x1..xd` over Q[t1, t2]
# (with `t3 = -t1 - t2`).  The product sums over shuffles, weighted by the
# kernel `K(x) = (x+t1)(x+t2)(x+t3)/x`.

# %%
from wkit.coefring import CoefPoly
from wkit.shuffle import DEFAULT_KERNEL, parse_kernel, shuffle_e, shuffle_lower, shuffle_product, shuffle_raise
from wkit.yangian import check_quartic, check_serre, sweep

print("kernel:", DEFAULT_KERNEL.text())
print("e0 * e0 =", shuffle_product(shuffle_e(0), shuffle_e(0)))
print("e0 * e1 =", shuffle_product(shuffle_e(0), shuffle_e(1)))

# %% [markdown]
# Multiplying by `x1 + ... + xd` and applying `sum_k d/dx_k` are derivations
# of the product with central charge `d`.

# %%
f, g = shuffle_e(1), shuffle_e(2)
fg = shuffle_product(f, g)
print(shuffle_raise(fg) == shuffle_product(shuffle_raise(f), g) + shuffle_product(f, shuffle_raise(g)))
print(shuffle_lower(shuffle_raise(fg)) - shuffle_raise(shuffle_lower(fg)) == fg.scale(2))

# %% [markdown]
# ## Relations in the shuffle model
#
# With the default kernel the quartic and cubic Serre relations hold exactly.

# %%
report = sweep(bound=2, model="shuffle", serre_bound=1)
print("sign variant:", report.sign_variant, " passed:", report.passed)

# %% [markdown]
# A kernel with a missing factor keeps products polynomial but breaks the
# quartic relation.

# %%
bad = parse_kernel("(x+t1)(x+t2)/(x)")
print(check_quartic(0, 1, "shuffle", kernel=bad).residual_text())

# %% [markdown]
# ## Relations in the deformed W model
#
# Send `e_i -> z D^i`.  The Serre relation holds identically in t, but the
# quartic relation does not close for `s2 = +t^2` or `-t^2`: the residual is
# `(t^4 + s2)(E^i D^j + D^i E^j) z^2` with `E = D + t^2`.  It vanishes exactly
# for `s2 = -t^4`.

# %%
print(check_serre(0, 1, 2).vanishes)
for v in ("plus", "minus"):
    print(v, check_quartic(0, 0, sign_variant=v).residual_text())
t = CoefPoly.var("t")
print("s2 = -t^4:", all(check_quartic(i, j, sigma2=-(t**4)).vanishes for i in range(4) for j in range(4)))
