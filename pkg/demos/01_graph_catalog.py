#!/usr/bin/env python3
"""Tour of the graph layer: constructors, metrics, and the two analytic
criteria that settle some graphs without any lemma machinery."""

from qsym import (
    CirculantSpec,
    build_circulant,
    common_neighbours,
    has_quadrangle,
    injective_f_check,
    product_spectra_conditions,
)
from qsym.named import build_named, catalog_names, complete_graph, cycle_graph

print("=" * 70)
print("the twelve-vertex catalog")
print("=" * 70)
for name in catalog_names():
    g = build_named(name)
    degs = sorted({g.degree(v) for v in g.vertices()})
    print(f"  {name:16s} n={g.n:3d} m={g.num_edges():3d} degrees={degs}")

print()
print("circulant graphs are the cycle plus chord classes:")
g = build_circulant(CirculantSpec(12, (4, 5)))
print(f"  C12(4,5): vertex 1 is adjacent to {sorted(g.neighbours(1))}")

print()
print("metric structure of the hexagonal prism K2[]C6:")
g = build_named("K2xC6")
d = g.distances()
print(f"  d(1,10) = {d[1, 10]}; vertices at distance 4 from 1: "
      f"{[v for v in g.vertices() if d[1, v] == 4]}")
print(f"  |CN(1,3)| = {len(common_neighbours(g, 1, 3))}, "
      f"|CN(3,10)| = {len(common_neighbours(g, 3, 10))}")

print()
print("quadrangles gate the strongest whole-graph commutation lemma:")
for name in ("TruncK4", "C12(2)", "Cuboctahedron"):
    print(f"  {name:14s} has quadrangle: {has_quadrangle(build_named(name))}")

print()
print("cosine-sum injectivity for circulants (no quantum symmetry when "
      "injective and n != 4):")
for chords in ((), (3,), (6,), (2,)):
    injective, values = injective_f_check(CirculantSpec(12, chords))
    label = f"C12{chords if chords else ''}"
    print(f"  {label:10s} injective={injective}  "
          f"values={[round(v, 2) for v in values]}")

print()
print("spectral disjointness for products:")
d_ok, c_ok = product_spectra_conditions(cycle_graph(4), cycle_graph(3))
print(f"  (C4, C3): cartesian criterion holds: {c_ok}")
d_ok, _ = product_spectra_conditions(complete_graph(6), complete_graph(2))
print(f"  (K6, K2): direct criterion holds: {d_ok}")
_, c_bad = product_spectra_conditions(complete_graph(2), cycle_graph(6))
print(f"  (K2, C6): cartesian criterion holds: {c_bad} "
      "(this is why K2[]C6 needs the lemma engine)")
