"""Finite simple undirected graphs with 1-based vertex labels.

Everything downstream (automorphism search, the commutation-lemma engine,
the catalog) works over this representation.  Vertices are addressed 1..n
so that certificates can cite the same vertex numbers that appear in the
hand proofs for these graphs.  Adjacency is stored as one bitmask per
vertex, which keeps neighbourhood queries and the backtracking searches
cheap at the scales we care about (n <= 16).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

INFINITE = math.inf

# distances below this gap count as equal when comparing spectra
SPECTRUM_TOL = 1e-8
# minimal pairwise gap for the cosine-sum injectivity test
INJECTIVITY_TOL = 1e-6


class GraphError(ValueError):
    """Invalid construction data or an operation outside its domain."""


@dataclass(frozen=True)
class CirculantSpec:
    """Cycle on ``n`` vertices plus chords at the given circular distances.

    Chords must be strictly increasing, each in (1, n//2]; the +-1 cycle
    edges are implicit and never listed.
    """

    n: int
    chords: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 3:
            raise GraphError(f"circulant needs n >= 3, got {self.n}")
        object.__setattr__(self, "chords", tuple(self.chords))
        prev = 1
        for k in self.chords:
            if not (1 < k <= self.n // 2):
                raise GraphError(f"chord {k} outside (1, {self.n // 2}]")
            if k <= prev:
                raise GraphError("chords must be strictly increasing")
            prev = k

    def name(self) -> str:
        if not self.chords:
            return f"C{self.n}"
        return f"C{self.n}({','.join(str(k) for k in self.chords)})"


@dataclass(frozen=True)
class SemicirculantSpec:
    """A circulant base plus extra chords anchored at alternating vertices.

    Each offset l in ``plus_chords`` adds the edge {i, i+l mod n} for every
    odd i.  Anchoring at odd vertices (with wraparound) is the convention
    that reproduces the published pictures of these graphs and makes the
    published automorphism witnesses hold verbatim; the even-anchored
    variant is the same graph up to rotating all labels by one.
    """

    base: CirculantSpec
    plus_chords: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus_chords", tuple(self.plus_chords))
        seen = set()
        for l in self.plus_chords:
            if not (1 < l < self.base.n):
                raise GraphError(f"offset {l} outside (1, {self.base.n})")
            if l in seen:
                raise GraphError("offsets must be distinct")
            seen.add(l)

    def name(self) -> str:
        parts = [str(k) for k in self.base.chords]
        parts += [f"{l}+" for l in self.plus_chords]
        # conventional order lists small plain chords first, e.g. C12(2,5+)
        parts.sort(key=lambda s: (int(s.rstrip("+"))))
        return f"C{self.base.n}({','.join(parts)})"


class Graph:
    """Immutable simple undirected graph on vertices 1..n."""

    __slots__ = ("n", "rows", "label", "circulant", "_dist", "_hash")

    def __init__(self, n, edges, label="", circulant=None):
        if n < 1:
            raise GraphError(f"need at least one vertex, got n={n}")
        rows = [0] * (n + 1)
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge ({i},{j}) out of range 1..{n}")
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "circulant", circulant)
        object.__setattr__(self, "_dist", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.rows)))
        return self._hash

    def __repr__(self):
        name = self.label or f"graph on {self.n} vertices"
        return f"<Graph {name}: n={self.n}, m={self.num_edges()}>"

    # -- basic queries ----------------------------------------------------

    def vertices(self):
        return range(1, self.n + 1)

    def adjacent(self, i, j) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbours(self, i):
        row = self.rows[i]
        return [v for v in self.vertices() if row >> v & 1]

    def degree(self, i) -> int:
        return self.rows[i].bit_count()

    def edges(self):
        return [(i, j) for i in self.vertices() for j in range(i + 1, self.n + 1)
                if self.adjacent(i, j)]

    def num_edges(self) -> int:
        return sum(self.degree(i) for i in self.vertices()) // 2

    def degree_sequence(self):
        return sorted(self.degree(i) for i in self.vertices())

    def is_regular(self) -> bool:
        degs = {self.degree(i) for i in self.vertices()}
        return len(degs) == 1

    def relabel(self, label) -> "Graph":
        g = Graph(self.n, self.edges(), label=label, circulant=self.circulant)
        return g

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=float)
        for i, j in self.edges():
            a[i - 1, j - 1] = a[j - 1, i - 1] = 1.0
        return a

    # -- metric structure -------------------------------------------------

    def distances(self) -> "DistanceMatrix":
        """All-pairs hop counts by BFS from every vertex; INFINITE across components."""
        if self._dist is not None:
            return self._dist
        n = self.n
        d = [[INFINITE] * (n + 1) for _ in range(n + 1)]
        for s in self.vertices():
            d[s][s] = 0
            frontier = [s]
            dist = 0
            seen = 1 << s
            while frontier:
                dist += 1
                nxt = []
                for v in frontier:
                    row = self.rows[v]
                    w = row & ~seen
                    while w:
                        low = w & -w
                        u = low.bit_length() - 1
                        d[s][u] = dist
                        seen |= low
                        nxt.append(u)
                        w ^= low
                frontier = nxt
        dm = DistanceMatrix(n, tuple(tuple(row) for row in d))
        object.__setattr__(self, "_dist", dm)
        return dm

    def dist(self, i, j):
        return self.distances().d[i][j]

    def is_connected(self) -> bool:
        return all(self.dist(1, v) != INFINITE for v in self.vertices())

    def eccentricity(self, i) -> float:
        return max(self.dist(i, v) for v in self.vertices())


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop-count matrix, 1-based; entry INFINITE marks a disconnected pair."""

    n: int
    d: tuple

    def __getitem__(self, pair):
        i, j = pair
        return self.d[i][j]


# -- constructors ---------------------------------------------------------


def from_edges(n, edges, label=""):
    return Graph(n, edges, label=label)


def build_circulant(spec: CirculantSpec) -> Graph:
    """i ~ j iff the circular distance |i-j| mod n is 1 or a listed chord."""
    n = spec.n
    offsets = {1, n - 1}
    for k in spec.chords:
        offsets.add(k)
        offsets.add(n - k)
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
             if (j - i) % n in offsets]
    return Graph(n, edges, label=spec.name(), circulant=spec)


def build_semicirculant(spec: SemicirculantSpec) -> Graph:
    """Circulant base plus the offset chords from every odd vertex (mod n).

    An offset edge that coincides with an existing base edge is silently
    absorbed; the result stays a simple graph.
    """
    base = build_circulant(spec.base)
    n = spec.base.n
    edges = base.edges()
    for i in range(1, n + 1, 2):
        for l in spec.plus_chords:
            j = (i - 1 + l) % n + 1
            if j != i:
                edges.append((i, j))
    return Graph(n, edges, label=spec.name())


def complement(g: Graph) -> Graph:
    edges = [(i, j) for i in g.vertices() for j in range(i + 1, g.n + 1)
             if not g.adjacent(i, j)]
    label = f"complement({g.label})" if g.label else ""
    return Graph(g.n, edges, label=label)


def disjoint_copies(g: Graph, m: int) -> Graph:
    """m disjoint copies; copy c of vertex v becomes (c-1)*n + v."""
    if m < 1:
        raise GraphError(f"need m >= 1 copies, got {m}")
    edges = []
    for c in range(m):
        off = c * g.n
        edges.extend((i + off, j + off) for i, j in g.edges())
    label = f"{m}({g.label})" if g.label else ""
    return Graph(m * g.n, edges, label=label)


def direct_product(g: Graph, h: Graph) -> Graph:
    """(a,b) ~ (c,d) iff a ~ c and b ~ d; vertex (a,b) becomes (a-1)*n_h + b."""
    return _product(g, h, lambda ac, bd: ac and bd, "x")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """(a,b) ~ (c,d) iff (a = c and b ~ d) or (a ~ c and b = d)."""
    n = h.n

    def lab(a, b):
        return (a - 1) * n + b

    edges = []
    for a in g.vertices():
        for b in h.vertices():
            for d in h.neighbours(b):
                if d > b:
                    edges.append((lab(a, b), lab(a, d)))
            for c in g.neighbours(a):
                if c > a:
                    edges.append((lab(a, b), lab(c, b)))
    label = _product_label(g, h, "[]")
    return Graph(g.n * h.n, edges, label=label)


def _product(g, h, rule, symbol):
    n = h.n

    def lab(a, b):
        return (a - 1) * n + b

    edges = []
    for a in g.vertices():
        for b in h.vertices():
            for c in g.vertices():
                for d in h.vertices():
                    if lab(c, d) <= lab(a, b):
                        continue
                    if rule(g.adjacent(a, c), h.adjacent(b, d)):
                        edges.append((lab(a, b), lab(c, d)))
    return Graph(g.n * h.n, edges, label=_product_label(g, h, symbol))


def _product_label(g, h, symbol):
    if g.label and h.label:
        return f"{g.label}{symbol}{h.label}"
    return ""


def line_graph(g: Graph) -> Graph:
    """One vertex per edge of g (edges numbered in lexicographic order)."""
    base_edges = g.edges()
    if not base_edges:
        raise GraphError("line graph needs at least one edge")
    edges = []
    for a, b in combinations(range(len(base_edges)), 2):
        ea, eb = base_edges[a], base_edges[b]
        if set(ea) & set(eb):
            edges.append((a + 1, b + 1))
    label = f"L({g.label})" if g.label else ""
    return Graph(len(base_edges), edges, label=label)


def distance_k_graph(g: Graph, k: int) -> Graph:
    """i ~ j iff d_g(i,j) = k; defined for connected g only."""
    if not g.is_connected():
        raise GraphError("distance-k graph needs a connected input")
    if k < 1:
        raise GraphError(f"need k >= 1, got {k}")
    d = g.distances()
    edges = [(i, j) for i in g.vertices() for j in range(i + 1, g.n + 1)
             if d[i, j] == k]
    label = f"dist{k}({g.label})" if g.label else ""
    return Graph(g.n, edges, label=label)


# -- neighbourhood and cycle queries --------------------------------------


def common_neighbours(g: Graph, i, j):
    """Vertices adjacent to both i and j (i and j must differ)."""
    if i == j:
        raise GraphError("common neighbours need two distinct vertices")
    both = g.rows[i] & g.rows[j]
    return [v for v in g.vertices() if both >> v & 1]


def has_quadrangle(g: Graph) -> bool:
    """True iff some 4-cycle exists, equivalently two vertices share
    two common neighbours.  The cycle need not be induced."""
    for i in g.vertices():
        for j in range(i + 1, g.n + 1):
            if (g.rows[i] & g.rows[j]).bit_count() >= 2:
                return True
    return False


# -- analytic criteria -----------------------------------------------------


def injective_f_check(spec: CirculantSpec, tol=INJECTIVITY_TOL):
    """Cosine-sum injectivity test for circulant graphs.

    Evaluates f(s) = sum_i cos(2 k_i s pi / n) over s = 1..n//2 with
    k_0 = 1 and the listed chords; if n != 4 and all values are pairwise
    distinct (gap > tol), the graph has no quantum symmetries.  Returns
    (injective, values).
    """
    if spec.n == 4:
        raise GraphError("the injectivity criterion excludes n = 4")
    ks = (1,) + spec.chords
    values = []
    for s in range(1, spec.n // 2 + 1):
        values.append(sum(math.cos(2.0 * k * s * math.pi / spec.n) for k in ks))
    injective = all(abs(a - b) > tol
                    for a, b in combinations(values, 2))
    return injective, values


def spectrum(g: Graph) -> np.ndarray:
    return np.linalg.eigvalsh(g.adjacency_matrix())


def product_spectra_conditions(g: Graph, h: Graph, tol=SPECTRUM_TOL):
    """Spectral disjointness tests for the two graph products.

    For connected regular g, h with spectra {lambda}, {mu}:
    direct_ok  iff no zero eigenvalue and {lambda_i/lambda_j} meets
    {mu_k/mu_l} only in 1; cartesian_ok iff {lambda_i - lambda_j} meets
    {mu_k - mu_l} only in 0.  When a condition holds, the quantum
    automorphism group of the product is the tensor product of the
    factors' quantum automorphism groups.
    """
    for graph in (g, h):
        if not graph.is_connected():
            raise GraphError("spectral product test needs connected factors")
        if not graph.is_regular():
            raise GraphError("spectral product test needs regular factors")
    lam = spectrum(g)
    mu = spectrum(h)

    def diffs(vals):
        return {round(a - b, 9) for a in vals for b in vals}

    common_diffs = {x for x in diffs(lam)
                    if any(abs(x - y) <= tol for y in diffs(mu))}
    cartesian_ok = all(abs(x) <= tol for x in common_diffs)

    direct_ok = False
    if all(abs(x) > tol for x in lam) and all(abs(x) > tol for x in mu):
        ratios_l = {a / b for a in lam for b in lam}
        ratios_m = {a / b for a in mu for b in mu}
        common = {x for x in ratios_l
                  if any(abs(x - y) <= tol for y in ratios_m)}
        direct_ok = all(abs(x - 1.0) <= tol for x in common)
    return direct_ok, cartesian_ok


# -- plain-text graph format ----------------------------------------------
#
# First line `p <n>`, one line `e <i> <j>` per edge, 1-based; `#` starts a
# comment.  This is the CLI ingestion format.


def write_graph(g: Graph) -> str:
    lines = []
    if g.label:
        lines.append(f"# {g.label}")
    lines.append(f"p {g.n}")
    lines.extend(f"e {i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(text: str, label="") -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: repeated p line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: expected 'p <n>'")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before 'p' line")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: expected 'e <i> <j>'")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: non-integer endpoint") from None
            edges.append((i, j))
        else:
            raise GraphError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise GraphError("missing 'p <n>' line")
    return Graph(n, edges, label=label)
