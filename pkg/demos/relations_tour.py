"""A short walk through linear relations over GF(3).

Run with ``python demos/relations_tour.py``.
"""

import numpy as np

from linrel import relation as rel
from linrel import subspace as sp

p = 3

# A relation is a subspace of the product; a matrix gives the graph of a map.
double = rel.from_matrix([[2]], p)
top = rel.top(1, 1, p)
bottom = rel.bottom(1, 1, p)
print("(x2) graph basis:", double.graph.basis.tolist())
print("top graph basis: ", top.graph.basis.tolist())

# Composition behaves like composition of binary relations.
print("top after bottom:", rel.compose(top, bottom).graph.basis.tolist())
print("inverse of that: ", rel.inverse(rel.compose(top, bottom)).graph.basis.tolist())

# The image of a point is a coset of the indeterminacy, or empty.
alpha = rel.from_generators(p, 2, 2, [[1, 0, 0, 1], [0, 0, 1, 1]])
for x in ([1, 0], [0, 1], [1, 1]):
    y = rel.apply(alpha, np.array(x))
    print(f"alpha({x}) =", "empty" if y is None else f"{y.tolist()} + {rel.indeterminacy(alpha).basis.tolist()}")

# Predicates
for name, fn in [("single-valued", rel.is_single_valued), ("injective", rel.is_injective),
                 ("total", rel.is_total), ("surjective", rel.is_surjective)]:
    print(f"{name:>14}:", fn(alpha))

# Every subspace of GF(3)^2 is an endorelation on GF(3)^1.
subs = list(sp.enumerate_subspaces(p, 2))
print(len(subs), "endorelations on GF(3)^1, i.e. p + 3")
