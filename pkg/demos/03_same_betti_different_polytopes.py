# %% [markdown]
# # Equal invariants, different polytopes
#
# Cutting three vertices off a tetrahedron can produce three combinatorially
# different polytopes.  All three have the same bigraded Betti numbers.

# %%
from itertools import combinations

from rigidity_lab import bigraded_betti, table_tuple
from rigidity_lab.isomorphism import are_isomorphic
from rigidity_lab.polytope import format_profile, two_face_profile
from rigidity_lab.tables import vertex_cut_family_exprs

family = vertex_cut_family_exprs("simplex(3)", 3)
for expr, P in family:
    print(f"{expr:32} {format_profile(two_face_profile(P)):20} {table_tuple(bigraded_betti(P))}")

# %%
for (e1, A), (e2, B) in combinations(family, 2):
    same = bigraded_betti(A) == bigraded_betti(B)
    iso = are_isomorphic(A.complex, B.complex) is not None
    print(f"betti equal={same}  isomorphic={iso}")

# %% [markdown]
# Family sizes grow quickly: 7 classes after four cuts, 24 after five.

# %%
for depth in (4, 5):
    print(depth, len(vertex_cut_family_exprs("simplex(3)", depth)))
