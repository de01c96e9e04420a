# %% [markdown]
# The figure-eight B' ring, its 13-dimensional quotient and the A' model

# %%
from dgroupoid import figure_eight as F

Q = F.build_f8q()
a, b = Q.gen("a"), Q.gen("b")
print("a^2 =", a * a)
print("ba  =", b * a)
print("a(a+1) =", a * (a + 1), "  inverse:", (a * (a + 1)).inverse())

# %% [markdown]
# Traces of the generators of L(I). The ba-line carries a minus sign.

# %%
for k, v in F.trace_generators().items():
    print(k, "=", v)
print(F.verify_trace_generators().text())

# %% [markdown]
# Centers of R/I and of (R/I)/(eps).

# %%
print(F.verify_centers().text())

# %% [markdown]
# The map alpha onto the A' model. Its kernel contains (eps, w - d) with index 5;
# the missing generator is da - db, and the kernel is the ideal cut out by
# u + v = 1.

# %%
print(F.verify_alpha_kernel().text())

# %% [markdown]
# Modulo J = Z(s-1) + Zz the A' model becomes the Hurwitz order.

# %%
from dgroupoid.hurwitz import hurwitz_check

w, rep = hurwitz_check()
print(rep.text())
print("alpha =", w.alpha, "  gamma =", w.gamma)
