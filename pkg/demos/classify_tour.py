"""Sorting every endorelation on a small space into Szymczak classes."""

from linrel.classification import classify, relation_name, table_csv

# GF(3)^1 together with the zero object: three classes.
table = classify(3, 1, include_zero_object=True)
for label in table.labels():
    print(f"{str(label):<16}", ", ".join(relation_name(d) for d in table.classes[label]))

# GF(2)^2: 67 relations fall into five classes.
table = classify(2, 2)
print()
print(table_csv(table), end="")
