"""Finite-dimensional bookkeeping: weights, dimensions, characters.

Everything downstream rests on this layer, so the demo sticks to
facts you can check against any table: dimensions from the product
formula, character masses, a small tensor product decomposition.
"""

from krfl.typea import (
    char_simple,
    fundamental_weight,
    partitions_of,
    positive_roots,
    tensor_decompose,
    weight_scale,
    weyl_dim,
)

print("== rank 3 (4x4 traceless matrices) ==")
for i in (1, 2, 3):
    w = fundamental_weight(3, i)
    print(f"fundamental weight {i}: {w}  dim {weyl_dim(w)}")

print("positive roots as node intervals:", positive_roots(3))

print()
print("== dimensions from the product formula ==")
for lam in [(2, 0, 0), (0, 2, 0), (1, 0, 1), (1, 1, 1), (2, 1, 2)]:
    print(f"dim V{lam} = {weyl_dim(lam)}")

print()
print("== characters ==")
ch = char_simple((0, 1, 0))
print("char V(0,1,0):", ch)
print("mass:", ch.mass(), " weyl invariant:", ch.is_weyl_invariant())

square = ch * ch
print("character of the square has mass", square.mass())
print("decomposition of the square:", tensor_decompose((0, 1, 0), (0, 1, 0)))

print()
print("== partitions drive the module constructions later ==")
for xi in partitions_of(4):
    print(f"{xi.parts}  conjugate {xi.conjugate().parts}  runs {xi.rle()}")
