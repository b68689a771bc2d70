"""Two conjugation-like operations on TG for G = SO(3).

The operation (X + Ad(a)Y - Ad(a^-1)X, aba^-1) restricts to a rack on the
graph of exp, where it copies X o Y = Ad(exp X) Y.  Off the graph it is not
a rack.  The group conjugation of TG is a rack everywhere, but the graph is
not closed under it.

Run:  python demos/tangent_bundle.py
"""
import numpy as np

from leibrack import fixtures as fx
from leibrack.matrixexp import expm
from leibrack.pipelines import exp_graph_report
from leibrack.rack import sample_rack_axioms, tangent_bundle_conjugation, tangent_bundle_rack_op

basis = [np.asarray(m, dtype=float) for m in fx.so3_matrices()]
zero = (np.zeros((3, 3)), np.eye(3))


def alg(rng):
    return sum(c * m for c, m in zip(rng.standard_normal(3), basis))


def on_graph(rng):
    X = alg(rng)
    return X, expm(X)


def anywhere(rng):
    return alg(rng), expm(alg(rng))


print(exp_graph_report(fx.so3_matrices()).render())
for name, op in [("graph operation", tangent_bundle_rack_op), ("group conjugation", tangent_bundle_conjugation)]:
    for where, sampler in [("on the graph", on_graph), ("on all of TG", anywhere)]:
        rep = sample_rack_axioms(op, sampler, zero, n_triples=30)
        print(f"{name:18s} {where:13s} rack axioms: {rep.verdict}")

rng = np.random.default_rng(0)
X, Y = on_graph(rng), on_graph(rng)
first, second = tangent_bundle_conjugation(X, Y)
print("group conjugation leaves the graph: |exp(first) - second| =", float(np.max(np.abs(expm(first) - second))))
