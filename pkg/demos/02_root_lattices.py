"""From codes to root lattices.

Construction A turns a binary code of length k into a lattice of rank k:
the integer vectors that reduce mod 2 to codewords.  When every weight is
even the doubled inner products stay even; when every weight is divisible
by 4 the lattice can be rescaled by 1/sqrt(2) and stays integral.  The
norm-2 vectors (roots) of these lattices form ADE root systems, and
identifying them pins down the intersection lattice spanned by a nodal
configuration.
"""

from nodalcodes.gf2 import de, make_code, simplex
from nodalcodes.lattices import (
    construction_a,
    discriminant,
    identify_root_system,
    lattice_to_json,
)


def even_weight_code(n):
    rows = [f"{'0' * i}11{'0' * (n - i - 2)}" for i in range(n - 1)]
    return make_code(rows, n)


print("== checkerboard lattices D_n (integer scaling) ==")
for n in range(3, 6):
    lat = construction_a(even_weight_code(n), "unscaled")
    rep = identify_root_system(lat)
    print(f"n={n}: {rep.components}, {rep.root_count} roots, "
          f"discriminant {discriminant(lat)}")

print()
print("== doubled codes give D_{2n} at half scaling ==")
for n in (2, 3):
    lat = construction_a(de(n), "half")
    rep = identify_root_system(lat)
    print(f"de({n}) -> {rep.components}, {rep.root_count} roots")

print()
print("== the simplex code gives E7 ==")
lat = construction_a(simplex(3), "half")
rep = identify_root_system(lat)
print(f"components: {rep.components}, roots: {rep.root_count}, "
      f"full rank: {rep.full_rank}, discriminant: {discriminant(lat)}")
print("Gram data (doubled inner products):")
print(lattice_to_json(lat))

print()
print("== a reducible example ==")
# two blocks of de(2) side by side: the root systems do not interact
block = [f"{'1' * 4}{'0' * 4}", f"{'0' * 4}{'1' * 4}"]
lat = construction_a(make_code(block, 8), "half")
rep = identify_root_system(lat)
print(f"components: {rep.components}, roots: {rep.root_count}")
