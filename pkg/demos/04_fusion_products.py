"""From evaluation modules to the graded fusion product.

The pipeline: realize a simple module by exact sparse matrices, pull
it back through evaluation at a point, tensor several evaluations at
distinct points, then pass to the associated graded of the filtration
generated by the tensor of top vectors.  The result is a bigraded
object; its character refines the plain tensor character.
"""

from fractions import Fraction

from krfl.modules import (
    apply_word,
    check_axioms,
    evaluation_module,
    fusion_product,
    graded_character,
    simple_gmodule,
    tensor_modules,
)
from krfl.typea import char_simple

print("== an evaluation module remembers its point ==")
v3 = simple_gmodule(1, (3,))
ev = evaluation_module(v3, 2)
top = {0: Fraction(1)}
print("dim", ev.dim, " t^0 lowering:", apply_word(ev, top, [("f", 1, 0, 1)]))
print("t^2 lowering is the same column scaled by 2^2:",
      apply_word(ev, top, [("f", 1, 2, 1)]))

print()
print("== fusion of two strings at rank 1 ==")
fus = fusion_product(1, 1, (2, 1))
gc = graded_character(fus)
print("dim", fus.dim, " degree profile", gc.degree_dims())
print("graded character:")
for (w, d), m in sorted(gc.mults.items(), key=lambda e: (e[0][1], e[0][0])):
    print(f"  weight {w} degree {d} mult {m}")

print("degree-0 slice is the top simple:",
      gc.degree_slice(0) == char_simple((3,)))
print("collapsing degrees recovers the tensor character:",
      gc.collapse() == char_simple((2,)) * char_simple((1,)))

print()
print("== the construction does not feel the evaluation points ==")
for pts in [(0, 1), (5, -7), (Fraction(1, 2), 3)]:
    alt = graded_character(fusion_product(1, 1, (2, 1), pts))
    print(f"points {pts}: same graded character: {alt == gc}")

print()
print("== the axioms hold on every layer ==")
pair = tensor_modules(
    [
        evaluation_module(simple_gmodule(2, (1, 0)), 0),
        evaluation_module(simple_gmodule(2, (0, 1)), 1),
    ]
)
for name, m in [("evaluation", ev), ("tensor", pair), ("fusion", fus)]:
    print(f"{name}: {check_axioms(m) == []}")
