"""Machine-checkable proof certificates for quantum-symmetry verdicts.

A certificate is a replayable log of lemma applications.  Every step names
one of a fixed set of rules about the generators u_ij of the commutation
algebra of a graph; each rule's side conditions can be re-checked from the
graph and the previously accepted steps alone, so a verifier that knows
nothing about the search that produced the log can still validate the
conclusion.  Two kinds of facts accumulate during replay:

* ``commute {j,l}``  --  u_ij u_kl = u_kl u_ij for all rows i, k;
* ``killed (j,l): p``  --  u_ij u_kl u_ip = 0 for all rows i, k.

The serialized form is line oriented (one step per line, stable field
order) and embeds the graph, so a certificate file is self-contained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import (
    CirculantSpec,
    Graph,
    build_circulant,
    common_neighbours,
    has_quadrangle,
    injective_f_check,
    read_graph,
)
from .perms import Permutation, is_automorphism, parse_cycles

# step kinds
QUADRANGLE_FREE = "QUADRANGLE_FREE"
ONE_COMMON_NEIGHBOUR = "ONE_COMMON_NEIGHBOUR"
ONE_COMMON_NEIGHBOUR_GEN = "ONE_COMMON_NEIGHBOUR_GEN"
UNIQUE_AT_DISTANCE = "UNIQUE_AT_DISTANCE"
CHOOSE_Q_RIGHT = "CHOOSE_Q_RIGHT"
CHOOSE_Q_MIDDLE = "CHOOSE_Q_MIDDLE"
TRIANGLE_MISMATCH = "TRIANGLE_MISMATCH"
CN_MISMATCH = "CN_MISMATCH"
MONOMIAL_ZERO = "MONOMIAL_ZERO"
AUT_TRANSFER = "AUT_TRANSFER"
ADJ_COMMUTE_CLOSE = "ADJ_COMMUTE_CLOSE"
VERTEX_TRANSIT = "VERTEX_TRANSIT"
CONCLUSION_COMMUTATIVE = "CONCLUSION_COMMUTATIVE"
DISJOINT_WITNESS = "DISJOINT_WITNESS"
INJECTIVE_F = "INJECTIVE_F"

VERDICT_NONE = "no_quantum_symmetry"
VERDICT_HAS = "has_quantum_symmetry"

# field order per kind, used for the stable serialized form
_FIELDS = {
    QUADRANGLE_FREE: (),
    ONE_COMMON_NEIGHBOUR: (),
    ONE_COMMON_NEIGHBOUR_GEN: ("j", "l", "q"),
    UNIQUE_AT_DISTANCE: ("j", "l", "m"),
    CHOOSE_Q_RIGHT: ("j", "l", "q", "survivors"),
    CHOOSE_Q_MIDDLE: ("j", "l", "p", "q"),
    TRIANGLE_MISMATCH: ("j", "l", "p"),
    CN_MISMATCH: ("j", "l", "p"),
    MONOMIAL_ZERO: ("j", "l", "p", "q"),
    AUT_TRANSFER: ("j1", "l1", "j2", "l2", "phi"),
    ADJ_COMMUTE_CLOSE: ("j", "l"),
    VERTEX_TRANSIT: ("base", "v", "phi"),
    CONCLUSION_COMMUTATIVE: ("bases",),
    DISJOINT_WITNESS: ("sigma", "tau"),
    INJECTIVE_F: ("n", "chords", "values"),
}


@dataclass(frozen=True)
class ProofStep:
    kind: str
    fields: dict = field(default_factory=dict)

    def __getattr__(self, name):
        try:
            return self.fields[name]
        except KeyError:
            raise AttributeError(name) from None

    def __str__(self):
        return serialize_step(self)


def step(kind, **fields) -> ProofStep:
    unknown = set(fields) - set(_FIELDS[kind])
    if unknown:
        raise ValueError(f"{kind} does not take fields {unknown}")
    return ProofStep(kind, fields)


@dataclass(frozen=True)
class Certificate:
    """A verdict's proof object, bound to the graph it talks about."""

    verdict: str
    n: int
    edges: tuple
    steps: tuple

    @staticmethod
    def for_graph(g: Graph, verdict: str, steps) -> "Certificate":
        return Certificate(verdict=verdict, n=g.n, edges=tuple(g.edges()),
                           steps=tuple(steps))

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def matches(self, g: Graph) -> bool:
        return g.n == self.n and set(g.edges()) == set(self.edges)


# -- serialization ---------------------------------------------------------


def _ser_value(key, value):
    if key in ("phi", "sigma", "tau"):
        # compact cycle notation, no spaces: (1,7)(3,9,5)
        return str(value).replace(" ", ",")
    if key in ("survivors", "chords", "bases"):
        return ",".join(str(v) for v in value) or "-"
    if key == "values":
        return ",".join(repr(float(v)) for v in value)
    if key == "m" and value == math.inf:
        return "inf"
    return str(value)


def _parse_value(key, text, n):
    if key in ("phi", "sigma", "tau"):
        return parse_cycles(text, n)
    if key in ("survivors", "chords", "bases"):
        if text == "-":
            return ()
        return tuple(int(v) for v in text.split(","))
    if key == "values":
        return tuple(float(v) for v in text.split(","))
    if key == "m":
        return math.inf if text == "inf" else int(text)
    return int(text)


def serialize_step(s: ProofStep) -> str:
    parts = [s.kind]
    for key in _FIELDS[s.kind]:
        parts.append(f"{key}={_ser_value(key, s.fields[key])}")
    return " ".join(parts)


def serialize_certificate(cert: Certificate) -> str:
    lines = ["qsym-certificate v1", f"verdict {cert.verdict}", f"graph p {cert.n}"]
    lines.extend(f"graph e {i} {j}" for i, j in cert.edges)
    lines.extend("step " + serialize_step(s) for s in cert.steps)
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "qsym-certificate v1":
        raise ValueError("not a qsym certificate (missing header)")
    if not lines[1].startswith("verdict "):
        raise ValueError("missing verdict line")
    verdict = lines[1].split(None, 1)[1]
    graph_lines = [ln[6:] for ln in lines if ln.startswith("graph ")]
    g = read_graph("\n".join(graph_lines))
    steps = []
    for ln in lines:
        if not ln.startswith("step "):
            continue
        body = ln[5:].split()
        kind = body[0]
        if kind not in _FIELDS:
            raise ValueError(f"unknown step kind {kind!r}")
        fields = {}
        for tok in body[1:]:
            key, eq, raw = tok.partition("=")
            if not eq:
                raise ValueError(f"malformed field {tok!r} in {kind}")
            fields[key] = _parse_value(key, raw, g.n)
        steps.append(ProofStep(kind, fields))
    return Certificate(verdict=verdict, n=g.n, edges=tuple(g.edges()),
                       steps=tuple(steps))


# -- verification ----------------------------------------------------------


@dataclass
class VerificationResult:
    ok: bool
    step_index: int = -1
    message: str = "ok"

    def __bool__(self):
        return self.ok


def _fail(idx, msg):
    return VerificationResult(False, idx, msg)


def _triple_condition(g, i, k):
    cn = common_neighbours(g, i, k)
    if len(cn) != 1:
        return False
    p = cn[0]
    return common_neighbours(g, i, p) == [k] and common_neighbours(g, k, p) == [i]


def verify_certificate(g: Graph, cert: Certificate) -> VerificationResult:
    """Replay the log, re-checking every step's side conditions against the
    graph and previously accepted facts only.  Never raises on bad input;
    reports the first failing step instead."""
    if not cert.matches(g):
        return _fail(-1, "certificate is bound to a different graph")
    d = g.distances()
    n = g.n
    commute = set()
    killed = {}
    candidates = {}
    transits = set()

    def knows(a, b):
        return a == b or frozenset((a, b)) in commute

    def base_candidates(j, l):
        m = d[j, l]
        return frozenset(p for p in g.vertices() if d[p, l] == m)

    for idx, s in enumerate(cert.steps):
        k = s.kind
        try:
            if k == QUADRANGLE_FREE:
                if has_quadrangle(g):
                    return _fail(idx, "graph contains a quadrangle")
                for i, j in g.edges():
                    commute.add(frozenset((i, j)))
            elif k == ONE_COMMON_NEIGHBOUR:
                for i, j in g.edges():
                    if len(common_neighbours(g, i, j)) != 1:
                        return _fail(idx, f"adjacent pair ({i},{j}) lacks a "
                                          "unique common neighbour")
                for i, j in g.edges():
                    commute.add(frozenset((i, j)))
            elif k == ONE_COMMON_NEIGHBOUR_GEN:
                j, l, q = s.j, s.l, s.q
                if not g.adjacent(j, l):
                    return _fail(idx, f"({j},{l}) not adjacent")
                if common_neighbours(g, j, l) != [q]:
                    return _fail(idx, f"CN({j},{l}) is not exactly {{{q}}}")
                if not _triple_condition(g, j, l):
                    return _fail(idx, f"triple condition fails for ({j},{l})")
                for a, b in g.edges():
                    if len(common_neighbours(g, a, b)) == 1 \
                            and not _triple_condition(g, a, b):
                        return _fail(idx, f"adjacent pair ({a},{b}) breaks the "
                                          "global side condition")
                commute.add(frozenset((j, l)))
            elif k == UNIQUE_AT_DISTANCE:
                j, l, m = s.j, s.l, s.m
                if d[j, l] != m or m == math.inf:
                    return _fail(idx, f"d({j},{l}) != {m}")
                if base_candidates(j, l) != frozenset((j,)):
                    return _fail(idx, f"{j} is not the unique vertex at "
                                      f"distance {m} from {l}")
                commute.add(frozenset((j, l)))
            elif k == CHOOSE_Q_RIGHT:
                j, l, q = s.j, s.l, s.q
                if d[j, l] == math.inf:
                    return _fail(idx, f"({j},{l}) disconnected")
                if not knows(l, q):
                    return _fail(idx, f"commute({{{l},{q}}}) not yet established")
                cand = candidates.get((j, l), base_candidates(j, l))
                new = frozenset(p for p in cand if d[p, q] == d[j, q])
                if tuple(sorted(new)) != tuple(s.survivors):
                    return _fail(idx, f"survivor set mismatch for ({j},{l}) q={q}")
                candidates[(j, l)] = new
            elif k == CHOOSE_Q_MIDDLE:
                j, l, p, q = s.j, s.l, s.p, s.q
                m = d[j, l]
                if m == math.inf or d[p, l] != m or p == j:
                    return _fail(idx, f"bad p for middle rule on ({j},{l})")
                if d[j, q] == d[q, p]:
                    return _fail(idx, f"q={q} does not separate {j} from {p}")
                s_dist = d[l, q]
                hits = [x for x in g.vertices()
                        if d[x, q] == s_dist and d[x, j] == m and d[x, p] == m]
                if hits != [l]:
                    return _fail(idx, f"{l} not unique for middle rule "
                                      f"({j},{l},{p}) q={q}")
                killed.setdefault((j, l), set()).add(p)
            elif k in (CN_MISMATCH, TRIANGLE_MISMATCH):
                j, l, p = s.j, s.l, s.p
                a = len(common_neighbours(g, j, l))
                b = len(common_neighbours(g, l, p))
                if a == b:
                    return _fail(idx, f"|CN({j},{l})| = |CN({l},{p})| = {a}")
                if k == TRIANGLE_MISMATCH and 0 not in (a, b):
                    return _fail(idx, "triangle variant needs one empty CN set")
                killed.setdefault((j, l), set()).add(p)
            elif k == MONOMIAL_ZERO:
                j, l, p, q = s.j, s.l, s.p, s.q
                if not knows(l, q):
                    return _fail(idx, f"commute({{{l},{q}}}) not yet established")
                if d[p, q] == d[j, q]:
                    return _fail(idx, f"d({p},{q}) = d({j},{q})")
                killed.setdefault((j, l), set()).add(p)
            elif k == ADJ_COMMUTE_CLOSE:
                j, l = s.j, s.l
                if d[j, l] == math.inf:
                    return _fail(idx, f"({j},{l}) disconnected")
                cand = candidates.get((j, l), base_candidates(j, l))
                left = cand - {j} - killed.get((j, l), set())
                if left:
                    return _fail(idx, f"unkilled candidates {sorted(left)} "
                                      f"for ({j},{l})")
                commute.add(frozenset((j, l)))
            elif k == AUT_TRANSFER:
                j1, l1, j2, l2, phi = s.j1, s.l1, s.j2, s.l2, s.phi
                if not is_automorphism(g, phi):
                    return _fail(idx, "phi is not an automorphism")
                if {phi(j1), phi(l1)} != {j2, l2}:
                    return _fail(idx, f"phi does not map {{{j1},{l1}}} to "
                                      f"{{{j2},{l2}}}")
                if not knows(j1, l1):
                    return _fail(idx, f"commute({{{j1},{l1}}}) not yet "
                                      "established")
                commute.add(frozenset((j2, l2)))
            elif k == VERTEX_TRANSIT:
                base, v, phi = s.base, s.v, s.phi
                if not is_automorphism(g, phi):
                    return _fail(idx, "phi is not an automorphism")
                if phi(base) != v:
                    return _fail(idx, f"phi({base}) != {v}")
                transits.add((base, v))
            elif k == CONCLUSION_COMMUTATIVE:
                bases = tuple(s.bases)
                covered = set(bases) | {v for b, v in transits if b in bases}
                missing = set(g.vertices()) - covered
                if missing:
                    return _fail(idx, f"vertices {sorted(missing)} not reached "
                                      "from any base")
                for b in bases:
                    for l in g.vertices():
                        if not knows(b, l):
                            return _fail(idx, f"column pair ({b},{l}) never "
                                              "proved to commute")
                if idx != len(cert.steps) - 1:
                    return _fail(idx, "conclusion must be the final step")
                if cert.verdict != VERDICT_NONE:
                    return _fail(idx, "conclusion contradicts the verdict")
            elif k == DISJOINT_WITNESS:
                sigma, tau = s.sigma, s.tau
                if sigma.is_identity() or tau.is_identity():
                    return _fail(idx, "witness permutation is the identity")
                if not (is_automorphism(g, sigma) and is_automorphism(g, tau)):
                    return _fail(idx, "witness is not an automorphism")
                if set(sigma.support()) & set(tau.support()):
                    return _fail(idx, "witness supports are not disjoint")
                if cert.verdict != VERDICT_HAS:
                    return _fail(idx, "witness contradicts the verdict")
            elif k == INJECTIVE_F:
                spec = CirculantSpec(s.n, tuple(s.chords))
                if build_circulant(spec) != Graph(g.n, g.edges()):
                    return _fail(idx, "circulant spec does not rebuild the graph")
                injective, values = injective_f_check(spec)
                if not injective:
                    return _fail(idx, "cosine sums are not injective")
                if len(values) != len(s.values) or any(
                        abs(a - b) > 1e-9 for a, b in zip(values, s.values)):
                    return _fail(idx, "recorded values disagree with the "
                                      "recomputed ones")
                if cert.verdict != VERDICT_NONE:
                    return _fail(idx, "injectivity contradicts the verdict")
            else:
                return _fail(idx, f"unknown step kind {k}")
        except Exception as exc:  # malformed fields must not crash the verifier
            return _fail(idx, f"malformed step: {exc}")

    final = cert.steps[-1].kind if cert.steps else None
    if cert.verdict == VERDICT_NONE and final not in (CONCLUSION_COMMUTATIVE,
                                                      INJECTIVE_F):
        return _fail(len(cert.steps) - 1,
                     "no-quantum-symmetry certificate lacks a conclusion")
    if cert.verdict == VERDICT_HAS and final != DISJOINT_WITNESS:
        return _fail(len(cert.steps) - 1, "witness certificate lacks a witness")
    return VerificationResult(True)


# -- rendering -------------------------------------------------------------


def render_certificate(cert: Certificate, fmt: str = "md") -> str:
    """Human-readable tables in the style of the written proofs.

    Applications of the two workhorse rules are grouped per base vertex:
    candidate reductions as (j, l, q, P) rows and triple-product kills as
    (j, l, p, q) rows.  Everything else becomes a labelled line.  Refuses
    to render a certificate that does not verify against its own graph.
    """
    if fmt not in ("md", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    result = verify_certificate(cert.graph(), cert)
    if not result:
        raise ValueError(f"refusing to render an invalid certificate: "
                         f"step {result.step_index}: {result.message}")
    middle = {}
    right = {}
    other = []
    for s in cert.steps:
        if s.kind == CHOOSE_Q_MIDDLE:
            middle.setdefault(s.j, []).append((s.j, s.l, s.p, s.q))
        elif s.kind == CHOOSE_Q_RIGHT:
            right.setdefault(s.j, []).append(
                (s.j, s.l, s.q, "{" + ",".join(str(v) for v in s.survivors) + "}"))
        else:
            other.append(serialize_step(s))

    out = []
    title = f"certificate: {cert.verdict} (graph on {cert.n} vertices)"
    if fmt == "md":
        out.append(f"## {title}")
        for j in sorted(middle):
            out.append("")
            out.append(f"### triple-product kills from base {j} (j, l, p, q)")
            out.append("| j | l | p | q |")
            out.append("|---|---|---|---|")
            out.extend(f"| {a} | {b} | {c} | {d_} |" for a, b, c, d_ in middle[j])
        for j in sorted(right):
            out.append("")
            out.append(f"### candidate reductions from base {j} (j, l, q, P)")
            out.append("| j | l | q | P |")
            out.append("|---|---|---|---|")
            out.extend(f"| {a} | {b} | {c} | {d_} |" for a, b, c, d_ in right[j])
        if other:
            out.append("")
            out.append("### other steps")
            out.extend(f"- `{line}`" for line in other)
    else:
        out.append(f"% {title}")
        for j in sorted(middle):
            out.append(r"\begin{tabular}{|c|c|c|c|}")
            out.append(r"\hline $j$ & $l$ & $p$ & $q$\\ \hline")
            out.extend(rf"{a} & {b} & {c} & {d_}\\" for a, b, c, d_ in middle[j])
            out.append(r"\hline \end{tabular}")
        for j in sorted(right):
            out.append(r"\begin{tabular}{|c|c|c|c|}")
            out.append(r"\hline $j$ & $l$ & $q$ & $P$\\ \hline")
            out.extend(rf"{a} & {b} & {c} & $\{{{d_[1:-1]}\}}$\\"
                       for a, b, c, d_ in right[j])
            out.append(r"\hline \end{tabular}")
        if other:
            out.extend(rf"% {line}" for line in other)
    return "\n".join(out) + "\n"
