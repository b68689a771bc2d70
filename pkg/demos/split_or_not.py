"""Which Leibniz algebras split, and over which ideal.

Run:  python demos/split_or_not.py
"""
from leibrack import fixtures as fx
from leibrack import pipelines as pl
from leibrack.leibniz import find_splitting, ker_ad, squares_ideal


def show(name, g):
    rep = pl.analyze(g, subject=name)
    print(f"{name}: dim {g.dim}, dim S = {rep.data['dim_S']}, dim ker(ad) = {rep.data['dim_ker_ad']}")
    for c in rep.data["candidates"]:
        print(f"    over {c['label']:8s} -> {'splits' if c['splits'] else 'does not split'}")


# The two-dimensional module of the strictly upper triangular line: the
# square of the generator is nonzero only in V, yet no complement of S is a
# subalgebra.  Enlarging S to ker(ad) fixes that.
show("ex2.2", fx.example_2_2())

# The D-twist of the Heisenberg algebra has S inside ker(ad) with nothing
# in between, and neither admits a Lie complement.
show("heisenberg-dtwist", fx.heisenberg_dtwist())

# A bigger case with two splittings of different dimensions.
g = fx.example_2_1(2)
show("ex2.1-n2", g)
for e in (squares_ideal(g), ker_ad(g)):
    h = find_splitting(g, e)
    print(f"    complement over a {e.dim}-dim ideal has dim {h.dim}")
