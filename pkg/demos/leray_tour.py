"""Peeling an endorelation down to its Leray form.

The generalized kernel is quotiented out, then the generalized image is
kept.  What remains is a bijection.
"""

from linrel import relation as rel
from linrel.dynamics import LE, LM, EndoObject, gim, gker, leray, szym_witness_LE, witness_equations

p = 2
# (x, y) -> (y, 0) on the first two coordinates, an invertible swap on the last two,
# plus a little indeterminacy.
alpha = rel.from_generators(p, 4, 4, [
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 1, 0, 0],
])
obj = EndoObject(alpha)

print("gker:", gker(obj).basis.tolist())
print("gim: ", gim(obj).basis.tolist())
print("LM dim:", LM(obj).dim, " LE dim:", LE(obj).dim)

form = leray(obj)
print("Leray form dim", form.dim)
print(form.matrix)
print("invariant factors:", form.invariant_factors.coefficient_lists())

# The equivalence witnesses come with an explicit stabilization index.
w = szym_witness_LE(obj)
print("k =", w.k, witness_equations(obj, w))
