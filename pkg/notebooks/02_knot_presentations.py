# %% [markdown]
# From triangulations to ring presentations
#
# Each tetrahedron line `tet g1 g2 g3 g4` gives g2 = g1 g3 and g4 = g1 * g3.

# %%
from dgroupoid.triangulation import delta_presentation, parse_diagram, reduce_presentation
from dgroupoid.trefoil import bundled

for name in ("trefoil.tri", "fig8.tri"):
    p = delta_presentation(parse_diagram(bundled(name)))
    print(name, p.format_relations(), "->", reduce_presentation(p).format_relations())

# %% [markdown]
# The A' and B' functors on the reduced figure-eight presentation.

# %%
from dgroupoid.rings import emit_a, emit_b

fig8 = reduce_presentation(delta_presentation(parse_diagram(bundled("fig8.tri"))))
print(emit_a(fig8))
print(emit_b(fig8))

# %% [markdown]
# The trefoil rings map to Z[t, 1/3]/(t^2 - t + 1).

# %%
from dgroupoid.trefoil import verify_trefoil_a, verify_trefoil_b

print(verify_trefoil_a().text())
print(verify_trefoil_b().text())
