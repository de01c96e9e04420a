# %% [markdown]
# Delta-groupoids on small models
#
# Build the standard families, check the axioms, and look at the S3 action.

# %%
from dgroupoid.delta import ar, br, check_delta, coarse, small_groups, triples, truncated_tetrahedron

for d in [triples(range(3)), ar(7), br(5)] + [coarse(g) for g in small_groups(4)]:
    print(d.name, check_delta(d.G, d.D).ok)

# %% [markdown]
# X^3 with |X| = 3: components and the S3 orbits on H.

# %%
d = triples(range(3))
print("components:", len(d.G.components()), " |H| =", len(d.H))
print("orbit sizes:", sorted(len(o) for o in d.s3_orbits()))

# %% [markdown]
# The truncated tetrahedron: 24 short edges, four hexagonal families of 6.

# %%
t = truncated_tetrahedron()
print(check_delta(t.G, t.D).ok, sorted(len(o) for o in t.s3_orbits()))

# %% [markdown]
# A broken j (the identity) is caught with a witness.

# %%
from dgroupoid.delta import DeltaData

bad = check_delta(d.G, DeltaData(d.D.H, {x: x for x in d.D.H}))
print(bad.failed(), bad.witness("j(xy)"))
