"""
Latching graphs and steerings on the cube
=========================================

The cube has six square faces. Its latching graph adds both diagonals of
every face, and every potential maximal clique of the cube induces a
steering in that graph: a chordless cycle plus a path (or a single hub)
attached to it at more than a slot.
"""

from planar_pmc import generators as gen
from planar_pmc.latching import build_latching
from planar_pmc.planar import embed
from planar_pmc.pmc import pmcs

cube = gen.cube()
pg = embed(cube)
l = build_latching(pg)
print(f"cube: {cube.n} vertices, {cube.m} edges, {len(pg.faces())} faces")
print(f"latching graph: {l.graph.m} edges, {len(l.chords())} of them chords")

# %%
# Each emitted PMC carries a certificate: the cycle ``S`` and the path ``P``.
# The middle column names the generator that found it; a set reached as a
# wheel may still certify as a cycle plus a two-vertex path.
for p in pmcs(cube, pg=pg, l=l):
    c = p.certificate
    print(f"{sorted(p.vertices)!s:28} {p.category:6} S={c.S} P={c.P}")

# %%
# The octahedron is a triangulation, so nothing is added.
octa = gen.octahedron()
print("octahedron latching == graph:", build_latching(embed(octa)).graph == octa)
