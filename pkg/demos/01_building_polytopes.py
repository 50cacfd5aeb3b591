# %% [markdown]
# # Building simple polytopes
#
# A simple polytope is stored as the simplicial complex dual to its boundary:
# vertex `i` is facet `F_i`, and a set of vertices is a face when those facets
# meet.  The cube becomes the octahedron.

# %%
from rigidity_lab import build
from rigidity_lab.complex import missing_faces
from rigidity_lab.polytope import f_vector, format_profile, h_vector, two_face_profile

cube = build("cube(3)")
print(cube, cube.complex.facets)
print("missing faces:", missing_faces(cube.complex))

# %% [markdown]
# Face numbers and the h-vector.  The h-vector is palindromic for every simple
# polytope, which makes a handy sanity check.

# %%
for expr in ("simplex(3)", "cube(3)", "product(polygon(5),simplex(1))", "dodecahedron"):
    P = build(expr)
    print(f"{expr:32} f={f_vector(P)}  h={h_vector(P)}  faces={format_profile(two_face_profile(P))}")

# %% [markdown]
# Truncations.  `vc` cuts off a vertex of the polytope (it subdivides a facet of
# the dual complex); `truncate` with a smaller face cuts an edge.  Cutting the
# edge where a pentagon meets a square of the pentagonal prism gives a polytope
# with four squares and four pentagons.

# %%
for expr in ("vc(cube(3))", "truncate(product(polygon(5),simplex(1)),[0,5])", "consum(cube(3),0,cube(3),0)"):
    P = build(expr)
    print(f"{expr:48} m={P.m}  faces={format_profile(two_face_profile(P))}")
