"""Degree-bounded noncommutative Buchberger over quantum-symmetry relations.

For a graph on n vertices, the defining relations of its quantum
automorphism algebra are

    u[i,j]^2 - u[i,j]                    (entries are idempotent)
    sum_k u[i,k] - 1,  sum_k u[k,i] - 1  (rows and columns sum to one)
    (A u - u A)[i,j]                     (the magic matrix commutes with A)

with no involution: the algebra is the plain quotient of the free algebra.
Reductions to zero against a partial Groebner basis of this ideal are
therefore one-sided evidence: they prove equalities in the quantum group,
while failure to reduce proves nothing.  Every result carries its
completeness degree so callers cannot over-claim.

Obstructions (overlap and containment ambiguities of leading monomials)
are processed smallest-ambiguity-first; ambiguities above the degree cap
are discarded and recorded, which is what bounds the computation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .freealg import NcPoly, Word, deglex_key, find_subword
from .graphs import Graph


class GroebnerError(ValueError):
    pass


@dataclass(frozen=True)
class Obstruction:
    """An ambiguity word w with two ways to reduce it:

    w = left_i * lm_i * right_i = left_j * lm_j * right_j, where lm_i and
    lm_j are the leading monomials of basis elements i and j.  The
    S-polynomial is left_i*g_i*right_i - left_j*g_j*right_j.
    """

    word: Word
    i: int
    left_i: Word
    right_i: Word
    j: int
    left_j: Word
    right_j: Word

    def degree(self) -> int:
        return len(self.word)


def overlaps(m1: Word, m2: Word, i: int = 0, j: int = 1) -> list:
    """All ambiguities between two monomials: proper overlaps in both
    directions plus containments, excluding disjoint placements.

    ``i`` and ``j`` are the basis indices recorded on the obstructions.
    """
    m1, m2 = tuple(m1), tuple(m2)
    if not m1 or not m2:
        raise GroebnerError("ambiguities need non-empty monomials")
    out = []
    # suffix of m1 = prefix of m2: w = m1 + m2[k:]
    for k in range(1, min(len(m1), len(m2))):
        if m1[-k:] == m2[:k]:
            w = m1 + m2[k:]
            out.append(Obstruction(w, i, (), m2[k:], j, m1[:-k], ()))
    # suffix of m2 = prefix of m1 (skip for identical monomials: symmetric)
    if m1 != m2 or i != j:
        for k in range(1, min(len(m1), len(m2))):
            if m2[-k:] == m1[:k]:
                w = m2 + m1[k:]
                out.append(Obstruction(w, i, m2[:-k], (), j, (), m1[k:]))
    # containments
    if (i, m1) != (j, m2):
        if len(m2) < len(m1):
            off = 0
            while True:
                pos = find_subword(m1[off:], m2)
                if pos < 0:
                    break
                pos += off
                out.append(Obstruction(m1, i, (), (), j, m1[:pos],
                                       m1[pos + len(m2):]))
                off = pos + 1
        elif len(m1) < len(m2):
            off = 0
            while True:
                pos = find_subword(m2[off:], m1)
                if pos < 0:
                    break
                pos += off
                out.append(Obstruction(m2, i, m2[:pos], m2[pos + len(m1):],
                                       j, (), ()))
                off = pos + 1
    return out


@dataclass
class PartialGB:
    """A degree-truncated Groebner basis with its certified completeness.

    ``complete_up_to_degree`` = D means every ambiguity of degree <= D
    between basis elements has a zero-reducing S-polynomial; reductions to
    zero are proofs of ideal membership regardless of D.  ``exhausted``
    means no ambiguity of any degree remains (a full Groebner basis);
    ``truncated`` means the step cap was hit.
    """

    basis: list
    complete_up_to_degree: int
    exhausted: bool
    truncated: bool = False
    steps: int = 0
    discarded_over_cap: int = 0
    max_degree: int = 0

    def basis_leading_monomials(self):
        return [p.lm() for p in self.basis]


class ReducerIndex:
    """Active monic reducers indexed by the first letter of their leading
    monomial, so subword searches touch only plausible candidates."""

    def __init__(self, polys=()):
        self.polys: list = []
        self.alive: list = []
        self.buckets: dict = {}
        for p in polys:
            self.add(p)

    def add(self, p: NcPoly) -> int:
        idx = len(self.polys)
        self.polys.append(p)
        self.alive.append(True)
        self.buckets.setdefault(p.lm()[0], []).append(idx)
        return idx

    def deactivate(self, idx: int):
        self.alive[idx] = False

    def active(self):
        return [p for p, a in zip(self.polys, self.alive) if a]

    def find_reducer(self, word):
        """(index, offset) of the leftmost occurrence of any active leading
        monomial inside ``word``, or None."""
        for pos, letter in enumerate(word):
            for idx in self.buckets.get(letter, ()):
                if not self.alive[idx]:
                    continue
                lm = self.polys[idx].lm()
                if word[pos:pos + len(lm)] == lm:
                    return idx, pos
        return None

    def reducible_by_other(self, word, *exclude):
        for pos, letter in enumerate(word):
            for idx in self.buckets.get(letter, ()):
                if not self.alive[idx] or idx in exclude:
                    continue
                lm = self.polys[idx].lm()
                if word[pos:pos + len(lm)] == lm:
                    return True
        return False


def _reduce_with_index(p: NcPoly, index: ReducerIndex) -> NcPoly:
    terms = dict(p.terms)
    # rewriting a word only creates deglex-smaller words, so one descending
    # pass over a lazy worklist visits every word that ever needs attention
    work = []
    for word in terms:
        heapq.heappush(work, (-len(word), _NegLex(word)))
    queued = set(terms)
    while work:
        _, neg = heapq.heappop(work)
        word = neg.word
        queued.discard(word)
        coeff = terms.get(word)
        if not coeff:
            continue
        hit = index.find_reducer(word)
        if hit is None:
            continue
        bi, pos = hit
        b = index.polys[bi]
        lm = b.lm()
        del terms[word]
        left, right = word[:pos], word[pos + len(lm):]
        for w, c in b.terms.items():
            if w == lm:
                continue
            key = left + w + right
            val = terms.get(key, 0) - coeff * c
            if val:
                terms[key] = val
                if key not in queued:
                    heapq.heappush(work, (-len(key), _NegLex(key)))
                    queued.add(key)
            else:
                terms.pop(key, None)
    return NcPoly(terms)


class _NegLex:
    """Wrapper inverting lexicographic order inside the min-heap."""

    __slots__ = ("word",)

    def __init__(self, word):
        self.word = word

    def __lt__(self, other):
        return self.word > other.word

    def __eq__(self, other):
        return self.word == other.word


def normal_form(p: NcPoly, basis) -> NcPoly:
    """Reduce until no term contains any basis leading monomial as a subword.

    Basis elements must be monic.  Terms are rewritten largest first; the
    result is a canonical representative once the basis is closed under the
    ambiguities below its degree.
    """
    return _reduce_with_index(p, ReducerIndex(basis))


def _interreduce(polys) -> list:
    """Repeatedly reduce each element against the others; drop zeros."""
    current = [p.monic() for p in polys if not p.is_zero]
    changed = True
    while changed:
        changed = False
        # ascending leading monomials: small reducers first
        current.sort(key=lambda p: deglex_key(p.lm()))
        nxt = []
        for idx, p in enumerate(current):
            others = ReducerIndex(nxt + current[idx + 1:])
            r = _reduce_with_index(p, others)
            if r.is_zero:
                changed = True
                continue
            r = r.monic()
            if r != p:
                changed = True
            nxt.append(r)
        current = nxt
    return current


def buchberger(gens, max_degree: int, max_steps: int = 200_000) -> PartialGB:
    """Degree-capped completion of the two-sided ideal generated by gens.

    Pending ambiguities are processed by (degree, ambiguity word); those
    whose word exceeds ``max_degree`` are discarded and counted.  Redundant
    obstructions whose ambiguity word strictly contains a third leading
    monomial are skipped.  Stops early after ``max_steps`` S-polynomial
    reductions and reports the highest fully processed degree.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return PartialGB([], max_degree, exhausted=True, max_degree=max_degree)
    gen_deg = max(g.degree() for g in gens)
    if max_degree < gen_deg:
        raise GroebnerError(
            f"degree cap {max_degree} below generator degree {gen_deg}")

    index = ReducerIndex(_interreduce(gens))
    heap = []
    discarded = 0
    counter = 0

    def push_obstructions(new_idx):
        nonlocal discarded, counter
        new_lm = index.polys[new_idx].lm()
        for other in range(len(index.polys)):
            if not index.alive[other]:
                continue
            if other == new_idx:
                pair = overlaps(new_lm, new_lm, i=new_idx, j=new_idx)
            else:
                pair = overlaps(index.polys[other].lm(), new_lm,
                                i=other, j=new_idx)
            for ob in pair:
                if ob.degree() > max_degree:
                    discarded += 1
                    continue
                counter += 1
                heapq.heappush(heap, (ob.degree(), ob.word, counter, ob))

    for idx in range(len(index.polys)):
        push_obstructions(idx)

    def add_element(h):
        # deactivate anything whose leading monomial the new one divides,
        # re-reducing the remainder so nothing leaves the ideal
        new_idx = index.add(h)
        lm_h = h.lm()
        for k in range(new_idx):
            if not index.alive[k]:
                continue
            if find_subword(index.polys[k].lm(), lm_h) >= 0:
                index.deactivate(k)
                leftover = _reduce_with_index(index.polys[k], index)
                if not leftover.is_zero:
                    add_element(leftover.monic())
        push_obstructions(new_idx)

    steps = 0
    truncated = False
    while heap:
        if steps >= max_steps:
            truncated = True
            break
        deg, _word, _cnt, ob = heapq.heappop(heap)
        if not (index.alive[ob.i] and index.alive[ob.j]):
            continue
        # containment criterion: the ambiguity factors through a third
        # active element whose leading monomial sits inside the word
        if index.reducible_by_other(ob.word, ob.i, ob.j):
            continue
        steps += 1
        s_poly = index.polys[ob.i].conjugate_by_words(ob.left_i, ob.right_i) \
            - index.polys[ob.j].conjugate_by_words(ob.left_j, ob.right_j)
        rem = _reduce_with_index(s_poly, index)
        if rem.is_zero:
            continue
        add_element(rem.monic())

    final = _interreduce(index.active())
    if truncated:
        pending = min((item[0] for item in heap), default=max_degree + 1)
        complete = min(max_degree, pending - 1)
        exhausted = False
    else:
        complete = max_degree
        exhausted = discarded == 0
    return PartialGB(basis=final, complete_up_to_degree=complete,
                     exhausted=exhausted, truncated=truncated, steps=steps,
                     discarded_over_cap=discarded, max_degree=max_degree)


# -- quantum-symmetry relations ---------------------------------------------


def quantum_relations(g: Graph) -> list:
    """Generators of the relation ideal of the quantum automorphism algebra.

    Identically zero entries of Au - uA (an edgeless graph, say) are
    dropped.
    """
    n = g.n
    rels = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            u = (i, j)
            rels.append(NcPoly({(u, u): 1, (u,): -1}))
    for i in range(1, n + 1):
        row = {((i, k),): 1 for k in range(1, n + 1)}
        row[()] = -1
        rels.append(NcPoly(row))
        col = {((k, i),): 1 for k in range(1, n + 1)}
        col[()] = -1
        rels.append(NcPoly(col))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            entry = {}
            for k in g.neighbours(i):
                w = ((k, j),)
                entry[w] = entry.get(w, 0) + 1
            for k in g.neighbours(j):
                w = ((i, k),)
                entry[w] = entry.get(w, 0) - 1
            poly = NcPoly(entry)
            if not poly.is_zero:
                rels.append(poly)
    return rels


def default_degree_cap(n: int) -> int:
    # relations have degree <= 2; modest caps keep desk-scale runs feasible
    return 4 if n <= 6 else 3


def commutator(a, b) -> NcPoly:
    pa = NcPoly.generator(*a)
    pb = NcPoly.generator(*b)
    return pa * pb - pb * pa


def commutator_reduces(g: Graph, gb: PartialGB, a, b) -> bool:
    """True iff u_a u_b - u_b u_a reduces to zero: a proof that the two
    generators commute in the quantum automorphism algebra.  False proves
    nothing (the basis is degree-truncated)."""
    return normal_form(commutator(a, b), gb.basis).is_zero


def verify_identity(g: Graph, gb: PartialGB, lhs: NcPoly, rhs: NcPoly) -> bool:
    """True iff lhs - rhs reduces to zero over the partial basis; a proof
    of the identity in the quantum automorphism algebra, one-sided as ever."""
    return normal_form(lhs - rhs, gb.basis).is_zero


def column_pair_commutes(g: Graph, gb: PartialGB, j: int, l: int) -> bool:
    """True iff u[i,j] and u[k,l] provably commute for all rows i, k."""
    return all(commutator_reduces(g, gb, (i, j), (k, l))
               for i in g.vertices() for k in g.vertices())


def commutation_report(g: Graph, gb: PartialGB):
    """Which unordered column pairs provably commute in the algebra."""
    pairs = {}
    for j in g.vertices():
        for l in range(j, g.n + 1):
            pairs[(j, l)] = column_pair_commutes(g, gb, j, l)
    return pairs
