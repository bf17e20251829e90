#!/usr/bin/env python3
"""Tour of the finite-field layer.

Elements are plain integer codes: 0 is the additive identity, 1 the
multiplicative identity, and for GF(p^k) the base-p digits of a code are
polynomial coefficients in a root of the canonical modulus.
"""
from mdlab import extension_field, power_map_is_bijective, prime_field

# Arithmetic in GF(7): wrap-around addition, multiplication, inverses.
gf7 = prime_field(7)
print("GF(7):")
print("  1 + 6 =", gf7.add(1, 6))
print("  3 * 4 =", gf7.mul(3, 4))
print("  3^-1  =", gf7.inv(3), " (check: 3 * inv =", gf7.mul(3, gf7.inv(3)), ")")

# Every element satisfies x^7 = x.
print("  x^7 == x for all x:", all(gf7.pow(x, 7) == x for x in gf7.elements()))

# GF(9) = GF(3)[t] / (t^2 + 1). Code 3 is t, code 4 is t + 1, and so on.
gf9 = extension_field(3, 2)
print("\nGF(9) with modulus coefficients", gf9.modulus, "(constant term first):")
t = 3
print("  t * t     =", gf9.mul(t, t), " -> t^2 = -1 = 2")
print("  (t+1)^2   =", gf9.pow(4, 2))
print("  inv(t)    =", gf9.inv(t), " (t * inv(t) =", gf9.mul(t, gf9.inv(t)), ")")

# The power map x -> x^m permutes the field exactly when gcd(m, q-1) = 1.
# That fact is what later powers the digraph isomorphism certificates.
print("\npower maps on GF(9): m -> bijective?")
for m in range(1, 9):
    image = sorted({gf9.pow(x, m) for x in gf9.elements()})
    print(f"  m={m}: bijective={power_map_is_bijective(gf9, m)}  image size={len(image)}")
