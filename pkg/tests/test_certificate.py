"""Certificates: serialization, independent verification, rendering."""

import pytest

import qsym.certificate as cm
from qsym.certificate import (
    Certificate,
    parse_certificate,
    render_certificate,
    serialize_certificate,
    step,
    verify_certificate,
)
from qsym.engine import decide, lemma_fixpoint, _commutativity_certificate
from qsym.graphs import Graph
from qsym.named import build_named, circulant, cycle_graph
from qsym.perms import automorphism_group


def _lemma_certificate(name, use_global_seeds=True):
    g = build_named(name)
    aut = automorphism_group(g)
    kb, closed, _ = lemma_fixpoint(g, aut, use_global_seeds=use_global_seeds)
    assert closed, name
    reps = [orbit[0] for orbit in aut.vertex_orbits()]
    return g, _commutativity_certificate(g, aut, kb, reps)


def test_serialize_parse_roundtrip():
    for name in ("C5", "K2xC6", "C12(2)"):
        g, cert = _lemma_certificate(name)
        text = serialize_certificate(cert)
        back = parse_certificate(text)
        assert back == cert
        assert verify_certificate(g, back)


def test_witness_certificate_roundtrip():
    g = circulant(12, 5)
    v = decide(g)
    text = serialize_certificate(v.certificate)
    back = parse_certificate(text)
    assert verify_certificate(g, back)


def test_certificate_bound_to_its_graph():
    g, cert = _lemma_certificate("C5")
    other = cycle_graph(6)
    result = verify_certificate(other, cert)
    assert not result and "different graph" in result.message


def test_c5_without_seeds_reproduces_the_worked_example():
    """The worked 5-cycle derivation: two middle-rule rows and two
    reduction rows, exactly as published."""
    g, cert = _lemma_certificate("C5", use_global_seeds=False)
    middle = [(s.j, s.l, s.p, s.q) for s in cert.steps
              if s.kind == cm.CHOOSE_Q_MIDDLE]
    right = [(s.j, s.l, s.q, s.survivors) for s in cert.steps
             if s.kind == cm.CHOOSE_Q_RIGHT]
    assert (1, 2, 3, 1) in middle and (1, 5, 4, 1) in middle
    assert (1, 3, 2, (1,)) in right and (1, 4, 3, (1,)) in right
    rendered = render_certificate(cert, "latex")
    assert "1 & 2 & 3 & 1" in rendered and "1 & 5 & 4 & 1" in rendered
    assert "1 & 3 & 2 & $\\{1\\}$" in rendered
    assert "1 & 4 & 3 & $\\{1\\}$" in rendered


def test_render_markdown_groups_tables():
    g, cert = _lemma_certificate("K2xC6")
    md = render_certificate(cert, "md")
    assert "| j | l | p | q |" in md and "| j | l | q | P |" in md
    assert "| 1 | 7 | 2 | {1,8} |" in md  # the published reduction row


def test_render_empty_certificate_is_header_only():
    g = Graph(1, [])
    cert = Certificate.for_graph(
        g, cm.VERDICT_NONE,
        [step(cm.CONCLUSION_COMMUTATIVE, bases=(1,))])
    md = render_certificate(cert, "md")
    assert md.splitlines()[0].startswith("## certificate")
    assert "| j |" not in md


def test_render_refuses_invalid():
    g, cert = _lemma_certificate("C5")
    broken = Certificate(cert.verdict, cert.n, cert.edges, cert.steps[:-1])
    with pytest.raises(ValueError):
        render_certificate(broken, "md")
    with pytest.raises(ValueError):
        render_certificate(cert, "html")


def test_mutated_middle_q_is_rejected():
    g, cert = _lemma_certificate("C5", use_global_seeds=False)
    steps = list(cert.steps)
    for idx, s in enumerate(steps):
        if s.kind == cm.CHOOSE_Q_MIDDLE and (s.j, s.l, s.p, s.q) == (1, 2, 3, 1):
            # q = 2 violates the separation condition d(j,q) != d(q,p)
            steps[idx] = step(cm.CHOOSE_Q_MIDDLE, j=1, l=2, p=3, q=2)
            break
    mutated = Certificate(cert.verdict, cert.n, cert.edges, tuple(steps))
    result = verify_certificate(g, mutated)
    assert not result and result.step_index == idx


def test_premise_cited_before_derivation_is_rejected():
    g, cert = _lemma_certificate("C12(2)")
    steps = list(cert.steps)
    moved = None
    for idx, s in enumerate(steps):
        if s.kind == cm.CHOOSE_Q_RIGHT and idx > 0:
            moved = steps.pop(idx)
            break
    assert moved is not None
    reordered = Certificate(cert.verdict, cert.n, cert.edges,
                            tuple([moved] + steps))
    result = verify_certificate(g, reordered)
    assert not result


def test_truncated_certificate_is_rejected():
    g, cert = _lemma_certificate("K2xC6")
    truncated = Certificate(cert.verdict, cert.n, cert.edges, cert.steps[:-1])
    assert not verify_certificate(g, truncated)


def test_forged_witness_rejected():
    g = build_named("C12")  # has no disjoint automorphisms at all
    from qsym.perms import parse_cycles
    sigma = parse_cycles("(1 7)", 12)
    tau = parse_cycles("(4 10)", 12)
    cert = Certificate.for_graph(
        g, cm.VERDICT_HAS, [step(cm.DISJOINT_WITNESS, sigma=sigma, tau=tau)])
    result = verify_certificate(g, cert)
    assert not result and "not an automorphism" in result.message


def test_forged_injectivity_rejected():
    g = circulant(12, 2)  # cosine sums collide for this one
    cert = Certificate.for_graph(
        g, cm.VERDICT_NONE,
        [step(cm.INJECTIVE_F, n=12, chords=(2,), values=(0.0,) * 6)])
    assert not verify_certificate(g, cert)


def test_malformed_step_fields_do_not_crash():
    g, cert = _lemma_certificate("C5")
    bad = Certificate(cert.verdict, cert.n, cert.edges,
                      (step(cm.CHOOSE_Q_MIDDLE, j=1, l=2, p=3, q=99),)
                      + cert.steps)
    result = verify_certificate(g, bad)
    assert not result and result.step_index == 0
