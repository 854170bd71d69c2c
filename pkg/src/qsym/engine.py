"""Deciding quantum symmetries of a graph.

The decision pipeline mirrors how these questions are settled by hand:

1. look for two non-trivial automorphisms with disjoint supports; their
   existence forces quantum symmetry, and the pair itself is the witness;
2. for circulant graphs, try the cosine-sum injectivity criterion, which
   rules quantum symmetry out wholesale;
3. otherwise grow a monotone knowledge base of commutation facts about
   the generators u_ij by saturating a small set of lemma rules, and stop
   once one base column per vertex orbit commutes with everything (that
   is enough: automorphisms transport column facts along pair orbits).

Every fact carries a replayable proof step, so a successful run of step 3
emits a certificate that an independent verifier can check against the
graph alone; see :mod:`qsym.certificate`.

The rules are one-sided: they can prove commutation, never refute it.  A
graph the engine cannot close stays Undecided rather than being declared
quantum-symmetric.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import certificate as cert_mod
from .certificate import Certificate, ProofStep, step, verify_certificate
from .graphs import Graph, common_neighbours, has_quadrangle, injective_f_check
from .perms import (
    AutGroup,
    Permutation,
    automorphism_group,
    find_disjoint_automorphisms,
)

DEFAULT_TIMEOUT = 30.0
DEFAULT_MAX_ROUNDS = 8


class EngineError(RuntimeError):
    pass


# -- verdicts ---------------------------------------------------------------


@dataclass(frozen=True)
class HasQuantumSymmetry:
    witness: tuple
    certificate: Certificate
    kind = "HasQuantumSymmetry"


@dataclass(frozen=True)
class NoQuantumSymmetry:
    certificate: Certificate
    kind = "NoQuantumSymmetry"


@dataclass(frozen=True)
class Undecided:
    reason: str
    summary: dict = field(default_factory=dict)
    certificate = None
    kind = "Undecided"


# -- knowledge base ---------------------------------------------------------


class CommutationKB:
    """Monotone store of proven facts about the generator columns.

    ``commute`` holds unordered column pairs {j,l} with
    u_ij u_kl = u_kl u_ij for all rows; ``killed[(j,l)]`` holds vertices p
    with u_ij u_kl u_ip = 0 for all rows.  Facts are only ever added, and
    each addition appends the proof step that justifies it.  ``candidates``
    tracks, per ordered pair, the survivors of the candidate reductions
    applied so far; the certificate verifier replays the same state.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.commute: set = set()
        self.killed: dict = {}
        self.candidates: dict = {}
        self.log: list = []
        self._closed_orbit_roots: set = set()

    def knows_commute(self, j, l) -> bool:
        return j == l or frozenset((j, l)) in self.commute

    def add_commute(self, j, l, proof: ProofStep):
        pair = frozenset((j, l))
        if pair not in self.commute:
            self.commute.add(pair)
            self.log.append(proof)

    def add_kill(self, j, l, p, proof: ProofStep):
        bucket = self.killed.setdefault((j, l), set())
        if p not in bucket:
            bucket.add(p)
            self.log.append(proof)

    def summary(self) -> dict:
        g = self.graph
        total = g.n * (g.n - 1) // 2
        return {
            "commuting_pairs": len(self.commute),
            "total_pairs": total,
            "killed_monomials": sum(len(v) for v in self.killed.values()),
            "steps": len(self.log),
        }


# -- seeding ----------------------------------------------------------------


def _triple_condition(g, i, k):
    cn = common_neighbours(g, i, k)
    if len(cn) != 1:
        return False
    p = cn[0]
    return common_neighbours(g, i, p) == [k] and common_neighbours(g, k, p) == [i]


def seed_kb(g: Graph, use_global_seeds: bool = True) -> CommutationKB:
    """Prime the knowledge base with the whole-graph commutation lemmas.

    Adjacent columns all commute when the graph is quadrangle-free, or when
    every adjacent pair has exactly one common neighbour.  Failing those,
    individual adjacent pairs can be seeded through the generalized
    one-common-neighbour rule, provided every adjacent pair with a unique
    common neighbour satisfies its triple condition (pairs with a different
    common-neighbour count are harmless: the mismatch already kills the
    mixed products).  Diagonal pairs {j,j} always commute and stay implicit.

    ``use_global_seeds=False`` starts from an empty knowledge base, which
    forces pairwise derivations even where a whole-graph lemma applies;
    useful for reproducing written proofs that avoid the shortcuts.
    """
    if not g.is_connected():
        raise EngineError("the lemma engine requires a connected graph")
    kb = CommutationKB(g)
    if not use_global_seeds:
        return kb
    edges = g.edges()
    if not has_quadrangle(g):
        proof = step(cert_mod.QUADRANGLE_FREE)
        kb.log.append(proof)
        for i, j in edges:
            kb.commute.add(frozenset((i, j)))
        return kb
    if edges and all(len(common_neighbours(g, i, j)) == 1 for i, j in edges):
        proof = step(cert_mod.ONE_COMMON_NEIGHBOUR)
        kb.log.append(proof)
        for i, j in edges:
            kb.commute.add(frozenset((i, j)))
        return kb
    gen_ok = all(_triple_condition(g, i, j)
                 for i, j in edges if len(common_neighbours(g, i, j)) == 1)
    if gen_ok:
        for i, j in edges:
            if _triple_condition(g, i, j):
                q = common_neighbours(g, i, j)[0]
                kb.add_commute(i, j, step(cert_mod.ONE_COMMON_NEIGHBOUR_GEN,
                                          j=i, l=j, q=q))
    return kb


# -- lemma rules -------------------------------------------------------------


def reduce_candidates(kb: CommutationKB, g: Graph, j, l):
    """Shrink the survivor set for (j,l) with every usable column q.

    Starting from P0 = {p : d(p,l) = d(j,l)}, each q whose column commutes
    with column l restricts the survivors to {p : d(p,q) = d(j,q)}.  Only
    strictly shrinking applications are recorded.  j itself always survives.
    """
    d = g.distances()
    m = d[j, l]
    cand = kb.candidates.get((j, l))
    if cand is None:
        cand = frozenset(p for p in g.vertices() if d[p, l] == m)
        kb.candidates[(j, l)] = cand
    for q in g.vertices():
        if len(cand) == 1:
            break
        if not kb.knows_commute(l, q):
            continue
        new = frozenset(p for p in cand if d[p, q] == d[j, q])
        if new != cand:
            cand = new
            kb.candidates[(j, l)] = cand
            kb.log.append(step(cert_mod.CHOOSE_Q_RIGHT, j=j, l=l, q=q,
                               survivors=tuple(sorted(cand))))
    return set(cand)


def kill_choose_q_middle(g: Graph, j, l, p):
    """Smallest q for which the middle rule kills u_ij u_kl u_ip, if any.

    Requires d(j,q) != d(q,p) and that l is the only vertex at distance
    d(l,q) from q, d(j,l) from j, and d(p,l) from p.
    """
    d = g.distances()
    m = d[j, l]
    if p == j or d[p, l] != m:
        return None
    for q in g.vertices():
        if d[j, q] == d[q, p]:
            continue
        s_dist = d[l, q]
        hits = [x for x in g.vertices()
                if d[x, q] == s_dist and d[x, j] == m and d[x, p] == m]
        if hits == [l]:
            return q
    return None


def kill_cn_mismatch(g: Graph, j, l, p) -> bool:
    """True iff the common-neighbour counts of (j,l) and (l,p) differ."""
    return len(common_neighbours(g, j, l)) != len(common_neighbours(g, l, p))


def kill_monomial_zero(kb: CommutationKB, g: Graph, j, l, p):
    """Smallest q with d(p,q) != d(j,q) whose column commutes with l."""
    d = g.distances()
    for q in g.vertices():
        if kb.knows_commute(l, q) and d[p, q] != d[j, q]:
            return q
    return None


def prove_pair(kb: CommutationKB, g: Graph, j, l) -> bool:
    """Try to establish commute({j,l}); partial kills are kept either way."""
    d = g.distances()
    m = d[j, l]
    if m == math.inf:
        raise EngineError(f"({j},{l}) lie in different components")
    if kb.knows_commute(j, l):
        return True

    if (j, l) not in kb.candidates:
        base = frozenset(p for p in g.vertices() if d[p, l] == m)
        if base == frozenset((j,)):
            kb.add_commute(j, l, step(cert_mod.UNIQUE_AT_DISTANCE, j=j, l=l, m=m))
            return True
        kb.candidates[(j, l)] = base

    cand = reduce_candidates(kb, g, j, l)
    killed = kb.killed.get((j, l), set())
    for p in sorted(cand - {j}):
        if p in killed:
            continue
        q = kill_choose_q_middle(g, j, l, p)
        if q is not None:
            kb.add_kill(j, l, p, step(cert_mod.CHOOSE_Q_MIDDLE, j=j, l=l, p=p, q=q))
            continue
        if kill_cn_mismatch(g, j, l, p):
            a = len(common_neighbours(g, j, l))
            b = len(common_neighbours(g, l, p))
            kind = cert_mod.TRIANGLE_MISMATCH if 0 in (a, b) else cert_mod.CN_MISMATCH
            kb.add_kill(j, l, p, step(kind, j=j, l=l, p=p))
            continue
        q = kill_monomial_zero(kb, g, j, l, p)
        if q is not None:
            kb.add_kill(j, l, p, step(cert_mod.MONOMIAL_ZERO, j=j, l=l, p=p, q=q))

    killed = kb.killed.get((j, l), set())
    if not (cand - {j}) - killed:
        kb.add_commute(j, l, step(cert_mod.ADJ_COMMUTE_CLOSE, j=j, l=l))
        return True
    return False


def close_under_automorphisms(kb: CommutationKB, g: Graph, aut: AutGroup):
    """Transport every known column-pair fact along its orbit.

    BFS over generator applications, starting from each known pair, with
    the composed automorphism recorded per transfer so the certificate
    carries explicit witnesses.
    """
    pending = sorted((pair for pair in kb.commute
                      if pair not in kb._closed_orbit_roots),
                     key=lambda pair: tuple(sorted(pair)))
    for source in pending:
        if source in kb._closed_orbit_roots:
            continue
        j1, l1 = sorted(source)
        reached = {source: Permutation.identity(g.n)}
        queue = [source]
        while queue:
            pair = queue.pop()
            phi = reached[pair]
            a, b = sorted(pair)
            for gen in aut.generators:
                image = frozenset((gen(a), gen(b)))
                if image in reached:
                    continue
                reached[image] = gen * phi
                queue.append(image)
        for image, phi in reached.items():
            kb._closed_orbit_roots.add(image)
            if image not in kb.commute:
                j2, l2 = sorted(image)
                kb.add_commute(j2, l2, step(cert_mod.AUT_TRANSFER,
                                            j1=j1, l1=l1, j2=j2, l2=l2, phi=phi))


def _orbit_witnesses(g: Graph, aut: AutGroup, base):
    """(vertex, automorphism mapping base to vertex) for base's whole orbit."""
    reached = {base: Permutation.identity(g.n)}
    queue = [base]
    while queue:
        v = queue.pop()
        phi = reached[v]
        for gen in aut.generators:
            w = gen(v)
            if w not in reached:
                reached[w] = gen * phi
                queue.append(w)
    return reached


def lemma_fixpoint(g: Graph, aut: AutGroup | None = None,
                   max_rounds: int = DEFAULT_MAX_ROUNDS,
                   deadline: float | None = None,
                   use_global_seeds: bool = True):
    """Saturate the lemma rules; returns (kb, closed, timed_out).

    Sweeps visit one base vertex per vertex orbit and its partner columns
    in ascending distance order; the orbit closure runs after each distance
    class, matching how the written proofs interleave the two.  ``closed``
    means every base column commutes with every column, which settles the
    graph (no quantum symmetry).
    """
    aut = aut or automorphism_group(g)
    kb = seed_kb(g, use_global_seeds=use_global_seeds)
    reps = [orbit[0] for orbit in aut.vertex_orbits()]
    close_under_automorphisms(kb, g, aut)
    d = g.distances()

    def all_closed():
        return all(kb.knows_commute(j0, l)
                   for j0 in reps for l in g.vertices())

    timed_out = False
    for _ in range(max_rounds):
        added_this_round = False
        for j0 in reps:
            by_dist = {}
            for l in g.vertices():
                if l != j0:
                    by_dist.setdefault(d[j0, l], []).append(l)
            for m in sorted(by_dist, key=float):
                if m == math.inf:
                    continue
                class_added = False
                for l in sorted(by_dist[m]):
                    if kb.knows_commute(j0, l):
                        continue
                    if deadline is not None and time.monotonic() > deadline:
                        return kb, False, True
                    if prove_pair(kb, g, j0, l):
                        class_added = True
                if class_added:
                    close_under_automorphisms(kb, g, aut)
                    added_this_round = True
        if all_closed() or not added_this_round:
            break
    return kb, all_closed(), timed_out


def _commutativity_certificate(g: Graph, aut: AutGroup, kb: CommutationKB,
                               reps) -> Certificate:
    steps = list(kb.log)
    for base in reps:
        for v, phi in sorted(_orbit_witnesses(g, aut, base).items()):
            if v != base:
                steps.append(step(cert_mod.VERTEX_TRANSIT, base=base, v=v,
                                  phi=phi))
    steps.append(step(cert_mod.CONCLUSION_COMMUTATIVE, bases=tuple(reps)))
    return Certificate.for_graph(g, cert_mod.VERDICT_NONE, steps)


# -- the decision pipeline ---------------------------------------------------


def decide(g: Graph, timeout: float = DEFAULT_TIMEOUT,
           max_rounds: int = DEFAULT_MAX_ROUNDS,
           engine: str = "auto"):
    """Decide whether ``g`` has quantum symmetries.

    ``engine`` selects the pipeline: "auto" runs the disjoint-automorphism
    test, then (for circulants) the injectivity criterion, then the lemma
    fixpoint; "lemmas" runs only the fixpoint.  Returns a verdict object;
    Undecided is the fallback, never a wrong answer.
    """
    if engine not in ("auto", "lemmas"):
        raise ValueError(f"unknown engine {engine!r}")
    deadline = time.monotonic() + timeout

    if engine == "auto":
        pair = find_disjoint_automorphisms(g)
        if pair is not None:
            sigma, tau = pair
            cert = Certificate.for_graph(
                g, cert_mod.VERDICT_HAS,
                [step(cert_mod.DISJOINT_WITNESS, sigma=sigma, tau=tau)])
            return HasQuantumSymmetry(witness=pair, certificate=cert)

        spec = g.circulant
        if spec is not None and spec.n != 4:
            injective, values = injective_f_check(spec)
            if injective:
                cert = Certificate.for_graph(
                    g, cert_mod.VERDICT_NONE,
                    [step(cert_mod.INJECTIVE_F, n=spec.n, chords=spec.chords,
                          values=tuple(values))])
                return NoQuantumSymmetry(certificate=cert)

    if not g.is_connected():
        return Undecided(reason="disconnected graph without a disjoint "
                                "automorphism pair", summary={})

    aut = automorphism_group(g)
    kb, closed, timed_out = lemma_fixpoint(g, aut, max_rounds=max_rounds,
                                           deadline=deadline)
    if closed:
        reps = [orbit[0] for orbit in aut.vertex_orbits()]
        cert = _commutativity_certificate(g, aut, kb, reps)
        check = verify_certificate(g, cert)
        if not check:
            raise EngineError(f"internal error: produced certificate fails "
                              f"verification at step {check.step_index}: "
                              f"{check.message}")
        return NoQuantumSymmetry(certificate=cert)
    reason = "timeout" if timed_out else "lemma rules saturated without closing"
    return Undecided(reason=reason, summary=kb.summary())
