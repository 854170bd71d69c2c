"""Independent re-implementation of the certificate semantics.

Used as the ground truth for the mutation fuzzer: it replays a
certificate from the raw edge list alone, with Floyd-Warshall distances
and direct set computations, sharing no code with the library verifier.
A mutation is a genuine counterfeit only if this replayer rejects it;
the fuzzer then demands the library verifier reject it too.
"""

import math
from itertools import combinations

import qsym.certificate as cm


class IndependentReplayer:
    def __init__(self, n, edges):
        self.n = n
        self.edge_set = {frozenset(e) for e in edges}
        d = [[math.inf] * (n + 1) for _ in range(n + 1)]
        for v in range(1, n + 1):
            d[v][v] = 0
        for i, j in edges:
            d[i][j] = d[j][i] = 1
        for k in range(1, n + 1):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if d[i][k] + d[k][j] < d[i][j]:
                        d[i][j] = d[i][k] + d[k][j]
        self.d = d

    def adj(self, a, b):
        return frozenset((a, b)) in self.edge_set

    def cn(self, a, b):
        return {v for v in range(1, self.n + 1)
                if self.adj(v, a) and self.adj(v, b)}

    def is_aut(self, perm):
        return all(self.adj(i, j) == self.adj(perm(i), perm(j))
                   for i in range(1, self.n + 1)
                   for j in range(i + 1, self.n + 1))

    def quadrangle_free(self):
        return all(len(self.cn(a, b)) < 2
                   for a, b in combinations(range(1, self.n + 1), 2))

    def triple(self, a, b):
        cn = self.cn(a, b)
        if len(cn) != 1:
            return False
        p = next(iter(cn))
        return self.cn(a, p) == {b} and self.cn(b, p) == {a}

    def accepts(self, cert) -> bool:
        n, d = self.n, self.d
        verts = range(1, n + 1)
        commute = set()
        killed = {}
        cands = {}
        transits = set()

        def knows(a, b):
            return a == b or frozenset((a, b)) in commute

        def base_cands(j, l):
            return frozenset(p for p in verts if d[p][l] == d[j][l])

        try:
            for pos, s in enumerate(cert.steps):
                k = s.kind
                if k == cm.QUADRANGLE_FREE:
                    if not self.quadrangle_free():
                        return False
                    commute.update(frozenset(e) for e in self.edge_set)
                elif k == cm.ONE_COMMON_NEIGHBOUR:
                    if not self.edge_set:
                        return False
                    if any(len(self.cn(*sorted(e))) != 1
                           for e in self.edge_set):
                        return False
                    commute.update(frozenset(e) for e in self.edge_set)
                elif k == cm.ONE_COMMON_NEIGHBOUR_GEN:
                    if not self.adj(s.j, s.l):
                        return False
                    if self.cn(s.j, s.l) != {s.q} or not self.triple(s.j, s.l):
                        return False
                    for e in self.edge_set:
                        a, b = sorted(e)
                        if len(self.cn(a, b)) == 1 and not self.triple(a, b):
                            return False
                    commute.add(frozenset((s.j, s.l)))
                elif k == cm.UNIQUE_AT_DISTANCE:
                    if d[s.j][s.l] != s.m or s.m == math.inf:
                        return False
                    if base_cands(s.j, s.l) != frozenset((s.j,)):
                        return False
                    commute.add(frozenset((s.j, s.l)))
                elif k == cm.CHOOSE_Q_RIGHT:
                    if d[s.j][s.l] == math.inf or not knows(s.l, s.q):
                        return False
                    cur = cands.get((s.j, s.l), base_cands(s.j, s.l))
                    new = frozenset(p for p in cur
                                    if d[p][s.q] == d[s.j][s.q])
                    if tuple(sorted(new)) != tuple(s.survivors):
                        return False
                    cands[(s.j, s.l)] = new
                elif k == cm.CHOOSE_Q_MIDDLE:
                    m = d[s.j][s.l]
                    if m == math.inf or d[s.p][s.l] != m or s.p == s.j:
                        return False
                    if d[s.j][s.q] == d[s.q][s.p]:
                        return False
                    hits = {x for x in verts
                            if d[x][s.q] == d[s.l][s.q]
                            and d[x][s.j] == m and d[x][s.p] == m}
                    if hits != {s.l}:
                        return False
                    killed.setdefault((s.j, s.l), set()).add(s.p)
                elif k in (cm.CN_MISMATCH, cm.TRIANGLE_MISMATCH):
                    a = len(self.cn(s.j, s.l))
                    b = len(self.cn(s.l, s.p))
                    if a == b:
                        return False
                    if k == cm.TRIANGLE_MISMATCH and 0 not in (a, b):
                        return False
                    killed.setdefault((s.j, s.l), set()).add(s.p)
                elif k == cm.MONOMIAL_ZERO:
                    if not knows(s.l, s.q) or d[s.p][s.q] == d[s.j][s.q]:
                        return False
                    killed.setdefault((s.j, s.l), set()).add(s.p)
                elif k == cm.ADJ_COMMUTE_CLOSE:
                    if d[s.j][s.l] == math.inf:
                        return False
                    cur = cands.get((s.j, s.l), base_cands(s.j, s.l))
                    if cur - {s.j} - killed.get((s.j, s.l), set()):
                        return False
                    commute.add(frozenset((s.j, s.l)))
                elif k == cm.AUT_TRANSFER:
                    if not self.is_aut(s.phi):
                        return False
                    if {s.phi(s.j1), s.phi(s.l1)} != {s.j2, s.l2}:
                        return False
                    if not knows(s.j1, s.l1):
                        return False
                    commute.add(frozenset((s.j2, s.l2)))
                elif k == cm.VERTEX_TRANSIT:
                    if not self.is_aut(s.phi) or s.phi(s.base) != s.v:
                        return False
                    transits.add((s.base, s.v))
                elif k == cm.CONCLUSION_COMMUTATIVE:
                    bases = set(s.bases)
                    covered = bases | {v for b, v in transits if b in bases}
                    if covered != set(verts):
                        return False
                    for b in bases:
                        if any(not knows(b, l) for l in verts):
                            return False
                    if pos != len(cert.steps) - 1 \
                            or cert.verdict != cm.VERDICT_NONE:
                        return False
                elif k == cm.DISJOINT_WITNESS:
                    sig, tau = s.sigma, s.tau
                    if sig.is_identity() or tau.is_identity():
                        return False
                    if not (self.is_aut(sig) and self.is_aut(tau)):
                        return False
                    if set(sig.support()) & set(tau.support()):
                        return False
                    if cert.verdict != cm.VERDICT_HAS:
                        return False
                elif k == cm.INJECTIVE_F:
                    if s.n != self.n or s.n == 4:
                        return False
                    offsets = {1, s.n - 1}
                    for c in s.chords:
                        if not 1 < c <= s.n // 2:
                            return False
                        offsets |= {c, s.n - c}
                    want = {frozenset((i, j))
                            for i in verts for j in verts
                            if i < j and (j - i) % s.n in offsets}
                    if want != self.edge_set:
                        return False
                    ks = (1,) + tuple(s.chords)
                    vals = [sum(math.cos(2 * kk * t * math.pi / s.n)
                                for kk in ks)
                            for t in range(1, s.n // 2 + 1)]
                    if any(abs(a - b) <= 1e-6
                           for a, b in combinations(vals, 2)):
                        return False
                    if len(vals) != len(s.values) or any(
                            abs(a - b) > 1e-9
                            for a, b in zip(vals, s.values)):
                        return False
                    if cert.verdict != cm.VERDICT_NONE:
                        return False
                else:
                    return False
        except Exception:
            return False
        if not cert.steps:
            return False
        final = cert.steps[-1].kind
        if cert.verdict == cm.VERDICT_NONE:
            return final in (cm.CONCLUSION_COMMUTATIVE, cm.INJECTIVE_F)
        if cert.verdict == cm.VERDICT_HAS:
            return final == cm.DISJOINT_WITNESS
        return False
