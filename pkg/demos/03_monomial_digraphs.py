#!/usr/bin/env python3
"""Building monomial digraphs and inspecting their structure.

D(q; m, n) lives on GF(q) x GF(q), with an arc (x1,x2) -> (y1,y2)
exactly when x2 + y2 = x1^m * y1^n. Every vertex has out- and in-degree
q, and exactly q vertices carry loops.
"""
from mdlab import build_digraph, prime_field

ctx = prime_field(3)
D = build_digraph(ctx, 1, 2)
print(f"{D}: {D.order} vertices, {D.arc_count} arcs, loops at {D.loop_vertices()}")

print("\nadjacency, vertex by vertex:")
for u in D.vertices():
    loop = " (loop)" if D.has_arc(u, u) else ""
    print(f"  {u} -> {D.out_neighbors(u)}{loop}")

# Spot checks straight from the defining equation.
print("\n((2,2),(1,0)) is an arc:", D.has_arc((2, 2), (1, 0)), " [2+0 = 2*1^2]")
print("((1,0),(2,2)) is an arc:", D.has_arc((1, 0), (2, 2)), " [0+2 != 1*2^2]")

# Exponents act modulo q-1, so D(3;1,4) is the same digraph as D(3;1,2).
same = build_digraph(ctx, 1, 4).same_arcs(D)
print("\nD(3;1,4) equals D(3;1,2):", same)

# The converse (all arcs reversed) of D(q;m,n) has the arc set of D(q;n,m).
C = D.converse()
print("converse of D(3;1,2) equals D(3;2,1):", C.same_arcs(build_digraph(ctx, 2, 1)))

# DOT export, small enough to render by hand or with graphviz.
print("\nDOT header and first few lines:")
for line in D.to_dot().splitlines()[:5]:
    print(" ", line)
