# %% [markdown]
# # Recognising products of simplices and their vertex cuts
#
# A polytope is a product of simplices exactly when `sigma` equals its number
# of facets.  A vertex cut of such a product is detected numerically and then
# confirmed by collapsing the new simplex facet.

# %%
from rigidity_lab import build, is_product_of_simplices, is_vertex_cut_of_product, sigma

for expr in ("cube(3)", "product(simplex(2),simplex(2))", "polygon(5)", "dodecahedron"):
    P = build(expr)
    print(f"{expr:32} m={P.m:2} sigma={sigma(P):3} product={is_product_of_simplices(P)}")

# %%
for expr in ("vc(cube(3))", "vc(vc(cube(3)))", "vc(simplex(3))", "polygon(5)"):
    v = is_vertex_cut_of_product(build(expr))
    dims = v.witness["product_dims"] if v.witness else None
    print(f"{expr:20} {v.value!s:5} simplex_cut={v.simplex_cut!s:5} {v.details} {dims}")

# %% [markdown]
# The pentagon counts: collapsing one side of a pentagon leaves a square.
# Cutting a single simplex does not, even though the result is a product; that
# case is flagged separately.
