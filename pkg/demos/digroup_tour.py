"""The order-6 digroup: bar-units, inverse group, E x J, and its conjugation rack.

Run:  python demos/digroup_tour.py
"""
from leibrack import pipelines as pl
from leibrack.digroup import decompose, example_4_1, induced_rack, k1_with_vdash_witnesses
from leibrack.rack import check_rack

g = example_4_1()
labels = [f"({u},{h})" for u in "eab" for h in "01"]

d = decompose(g)
print("bar-units E:", [labels[u] for u in d.bar_units])
print("inverses  J:", [labels[j] for j in d.J])

q = induced_rack(g)
print("induced rack x o y = x |- y -| x^-1:")
for x in range(g.size):
    print("   ", labels[x], " ".join(labels[q.op(x, y)] for y in range(g.size)))
print("rack axioms:", check_rack(q).verdict)

# The identity x |- y = (x o y) -| x holds; with |- on the outside it does not.
w = k1_with_vdash_witnesses(g)
print(f"x |- y = (x o y) |- x fails on {len(w)} of 36 pairs, e.g. x={labels[w[0][0]]}, y={labels[w[0][1]]}")

print(pl.suite_report(g, "ex4.1").render())
