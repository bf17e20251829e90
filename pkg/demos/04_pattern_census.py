#!/usr/bin/env python3
"""Counting pattern subdigraphs, and the count formula that ties the
two-loops-plus-arc pattern to trinomial roots.

A copy of a pattern is a vertex-injective embedding that reproduces the
pattern's arcs (other arcs may or may not be present); copies are
injections divided by the pattern's automorphisms.
"""
from mdlab import (
    Pattern,
    build_digraph,
    count_looped_arc,
    count_pattern,
    looped_arc_pattern,
    nontrivial_root_count,
    prime_field,
    small_pattern_library,
    verify_looped_arc_formula,
)

K = looped_arc_pattern()
print("the distinguished pattern: order", K.order, "arcs", sorted(K.arcs))

# Its count in D(p;1,n) equals (p-1) times the number of nontrivial roots
# of X^(n+1) - 2X + 1: each root w != 1 of the trinomial, paired with a
# choice of nonzero u, pins down exactly one copy.
ctx = prime_field(11)
for n in (3, 7):
    D = build_digraph(ctx, 1, n)
    counted = count_looped_arc(D)
    roots = nontrivial_root_count(ctx, n)
    print(f"D(11;1,{n}): copies = {counted}, (p-1) * nontrivial roots = {10 * roots}")

print("\nformula check across every n for p = 13:")
ctx13 = prime_field(13)
checks = [verify_looped_arc_formula(ctx13, n) for n in range(1, 13)]
print("  counts:   ", [c.pattern_count for c in checks])
print("  predicted:", [c.predicted for c in checks])
print("  all match:", all(c.ok for c in checks))

# The generic counter handles any pattern with up to 5 vertices.
D312 = build_digraph(prime_field(3), 1, 2)
two_cycle = Pattern(2, frozenset({(0, 1), (1, 0)}))
triangle = Pattern(3, frozenset({(0, 1), (1, 2), (2, 0)}))
for pat, name in ((two_cycle, "2-cycle"), (triangle, "directed triangle")):
    got = count_pattern(D312, pat)
    print(f"\n{name} in D(3;1,2): injections={got.injections} "
          f"aut={got.aut} copies={got.subdigraphs}")

# A census over every <= 3-vertex pattern distinguishes D(3;1,2) from its
# converse D(3;2,1), even though loop and 2-cycle counts agree.
lib = small_pattern_library()
census1 = [count_pattern(D312, pat).subdigraphs for pat in lib]
census2 = [count_pattern(build_digraph(prime_field(3), 2, 1), pat).subdigraphs for pat in lib]
differing = sum(1 for a, b in zip(census1, census2) if a != b)
print(f"\nlibrary size {len(lib)}; counts differing between D(3;1,2) "
      f"and D(3;2,1): {differing}")
