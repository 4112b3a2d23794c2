"""Multiplicative weights, string factorization, block ordering.

A multiplicative weight is a monomial in generators Y[i,z]; a string
is a run of those with centers stepping by two.  The factorization
below recovers the unique separated string decomposition, and the
order criterion at the end is the integer test that decides whether a
list of strings generates its tensor product from a single vector.
"""

from krfl.lweights import (
    KRFactor,
    blocks_cyclic,
    cyclic_order_ok,
    kr_monomial,
    pi_blocks,
    pi_from_partition,
    q_factorize,
)
from krfl.typea import Partition, partitions_of

n = 2

print("== strings expand to monomials ==")
f = KRFactor(1, 3, 3)
print(f"string node {f.node}, center {f.center}, length {f.length}")
print("  exponents", f.exponents())
print("  monomial", kr_monomial(n, f))

print()
print("== factorization undoes products of separated strings ==")
g = KRFactor(1, -4, 2)
pi = kr_monomial(n, f) * kr_monomial(n, g)
print("product:", pi)
print("factors:", q_factorize(pi))

print("touching strings merge instead:")
h = KRFactor(1, -1, 1)  # extends f one step below
pi2 = kr_monomial(n, f) * kr_monomial(n, h)
print("factors:", q_factorize(pi2))

print()
print("== partitions index products of strings at one node ==")
xi = Partition((3, 2, 2, 1))
print("partition", xi.parts, "gives", pi_from_partition(n, 1, xi))
for block, factor, mult in pi_blocks(n, 1, xi):
    print(f"  block {factor} ^ {mult}")

print()
print("== the order criterion holds across the whole test range ==")
bad = 0
for m in range(1, 7):
    for xi in partitions_of(m):
        for i in (1, 2):
            if not blocks_cyclic(n, i, xi):
                bad += 1
print("violations:", bad)

print("an artificial inversion can break it:")
fs = [KRFactor(1, 0, 1), KRFactor(1, 4, 3)]
print("  ascending centers:", cyclic_order_ok(n, fs))
print("  descending centers:", cyclic_order_ok(n, list(reversed(fs))))
