"""Which three-edge configurations count as triangles.

The detector only asks for three edges that pairwise share vertices u, v, w
with none of u, v, w lying in all three edges.  Three edges through one
common vertex, like {abc, bcd, ace} through c, do not qualify.
"""
from hypernibble import Hypergraph, gen_uniform, make_triangle_free
from hypernibble.verify import brute_triangles

a, b, c, d, e = range(5)
examples = {
    "graph triangle C3": Hypergraph(3, [(a, b), (b, c), (a, c)]),
    "F5 = {abc, abd, cde}": Hypergraph(5, [(a, b, c), (a, b, d), (c, d, e)]),
    "K4 minus an edge": Hypergraph(4, [(a, b, c), (a, b, d), (a, c, d)]),
    "{abc, bcd, ace}": Hypergraph(5, [(a, b, c), (b, c, d), (a, c, e)]),
}

for name, h in examples.items():
    wit = h.find_triangle()
    if wit is None:
        print(f"{name:24s} no triangle")
    else:
        print(f"{name:24s} edges {wit.edges} through u, v, w = {wit.vertices}")
    # every witness the fast detector reports is one the exhaustive search finds
    assert (wit is None) == (not brute_triangles(h))

# Random 3-graphs on few vertices are crowded with triangles; deleting one
# edge per triangle found eventually clears them.
h = gen_uniform(25, 3, 60, seed=7)
tf = make_triangle_free(h, seed=7)
print(f"\nrandom 3-graph: {len(h)} edges, triangle-free after deleting {len(h) - len(tf)}")
