# %% [markdown]
# # Bigraded Betti numbers
#
# `bigraded_betti` sums reduced homology of full subcomplexes over every vertex
# subset.  Entries are keyed `(i, 2j)`.

# %%
from rigidity_lab import bigraded_betti, build, sigma, table_tuple
from rigidity_lab.betti import check_duality, kunneth_convolve, moment_angle_betti

B = bigraded_betti(build("cube(3)"))
print(B.render())
print("tuple:", table_tuple(B), " sigma:", sigma(B), " duality:", check_duality(B))

# %% [markdown]
# Products multiply tables.  Two pentagons give 25 in position `(2, 8)`.

# %%
P5 = bigraded_betti(build("polygon(5)"))
prod = bigraded_betti(build("product(polygon(5),polygon(5))"))
print(prod == kunneth_convolve(P5, P5), prod[2, 8])

# %% [markdown]
# The dodecahedron has no `(2, 8)` entry at all.  Its moment-angle complex has
# total Betti number equal to the sum of the table.

# %%
D = bigraded_betti(build("dodecahedron"))
print(D.render())
print("(2,8):", D[2, 8], " moment-angle:", moment_angle_betti(D))
