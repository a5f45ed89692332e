"""Acceptance gate: the seven headline criteria, one pass/fail line each.

Criterion 4's full n=8/n=9 sweeps and criterion 7's full nontraceability
exhaustion are exposed as `-m slow` jobs; the default run covers every
criterion at the stated scale and tolerance.
"""

import json
import random
import time

import pytest

from tuttetrees.generators import (
    g_n,
    herschel,
    named,
    noftt,
    noftt_witness,
    star_s,
    zamfirescu,
    zamfirescu_terminals,
)
from tuttetrees.graph import SpanningTree, is_connected
from tuttetrees.harness import (
    THEOREM_IDS,
    _block_conditions,
    parse_graph6,
    replay_bundle,
    verify_theorem,
)
from tuttetrees.nonsep import (
    FAILS,
    HOLDS,
    verify_fundamental_tutte_tree,
    verify_tutte_tree,
)
from tuttetrees.planar import is_planar, leaves_on_common_face
from tuttetrees.search import (
    SearchConfig,
    build_ftt_block_structured,
    build_ftt_series_parallel,
    check_spg_conditions,
    decide_planar_tutte,
    find_fundamental_tutte_tree,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    find_tutte_tree,
)
from tuttetrees.structure import connectivity_at_least, h_bridges, is_series_parallel

from conftest import corpus_lines, random_connected


def _report(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {num}] {name}: {status}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {num} ({name}) failed: {detail}"


# --------------------------------------------------------------------------
# 1. The Herschel graph: planar, 3-connected, nonhamiltonian, no Tutte tree,
#    but a fundamental Tutte tree exists.  Budget: 60 s.
# --------------------------------------------------------------------------


def test_criterion_1_herschel_triple():
    t0 = time.monotonic()
    g = herschel()
    ok = is_planar(g) and connectivity_at_least(g, 3)
    ham = find_hamiltonian_cycle(g)
    ok = ok and ham.verdict == FAILS and ham.stats.exhausted
    tt = find_tutte_tree(g)
    ok = ok and tt.verdict == FAILS and tt.stats.exhausted
    ftt = find_fundamental_tutte_tree(g)
    ok = ok and ftt.verdict == HOLDS
    if ok:
        t = SpanningTree(g, ftt.witness.edges)
        ok = verify_fundamental_tutte_tree(g, t).verdict == HOLDS
    elapsed = time.monotonic() - t0
    _report(1, "herschel triple", ok and elapsed < 60, f"{elapsed:.1f}s")


# --------------------------------------------------------------------------
# 2. Counterexample families: g_n(5) has neither tree kind, star_s has no
#    Tutte tree; exhaustive, < 10 min each, stats carried on the certificate.
# --------------------------------------------------------------------------


def test_criterion_2_counterexample_families():
    results = []
    for label, graph, finder in (
        ("g_5 tutte", g_n(5), find_tutte_tree),
        ("g_5 ftt", g_n(5), find_fundamental_tutte_tree),
        ("star_s tutte", star_s(), find_tutte_tree),
    ):
        t0 = time.monotonic()
        cert = finder(graph)
        elapsed = time.monotonic() - t0
        ok = (
            cert.verdict == FAILS
            and cert.stats is not None
            and cert.stats.exhausted
            and cert.stats.nodes > 0
            and elapsed < 600
        )
        results.append((label, ok, elapsed, cert.stats.nodes))
    detail = "; ".join(f"{l}: {e:.1f}s/{n} nodes" for l, ok, e, n in results)
    _report(2, "counterexample families", all(ok for _, ok, _, _ in results), detail)


# --------------------------------------------------------------------------
# 3. Named positives, with the traceability separation on K_{3,5}.  < 30 s.
# --------------------------------------------------------------------------


def test_criterion_3_named_positives():
    t0 = time.monotonic()
    ok = True
    for name in ("petersen", "k33", "k5_barycentric", "k35"):
        g = named(name)
        cert = find_tutte_tree(g)
        if cert.verdict != HOLDS:
            ok = False
            break
        t = SpanningTree(g, cert.witness.edges)
        if verify_tutte_tree(g, t).verdict != HOLDS:
            ok = False
            break
    sep = find_hamiltonian_path(named("k35"))
    ok = ok and sep.verdict == FAILS and sep.stats.exhausted
    elapsed = time.monotonic() - t0
    _report(3, "named positives + traceability separation", ok and elapsed < 30, f"{elapsed:.1f}s")


# --------------------------------------------------------------------------
# 4. Exhaustive theorem suite: zero counterexamples.  Default gate runs the
#    full connected n<=7 corpus for all twelve claims; the planar n<=8,
#    T-face and the T-spg n=9 slices run here too (they fit the budget), and
#    duplicate slow-marked full sweeps exist below for reruns in isolation.
# --------------------------------------------------------------------------

_SUITE = [(tid, "connected_le7.g6") for tid in sorted(THEOREM_IDS)]
_SUITE += [
    ("O-2con", "planar_conn_le8.g6"),
    ("L-clique", "planar_conn_le8.g6"),
    ("T-planar", "planar_conn_le8.g6"),
    ("T-leaf3con", "planar_conn_le8.g6"),
    ("C-traceable", "planar_conn_le8.g6"),
    ("L-2cut", "planar_conn_le8.g6"),
    ("L-blocks", "planar_conn_le8.g6"),
    ("L-3bridges", "planar_conn_le8.g6"),
    ("C-uvhp", "planar_conn_le8.g6"),
    ("M-monotone", "planar_conn_le8.g6"),
    ("T-face", "planar_conn_le8.g6"),
    ("T-spg", "planar_conn_9.g6"),
]


@pytest.mark.parametrize("theorem,corpus", _SUITE, ids=[f"{t}-{c.split('.')[0]}" for t, c in _SUITE])
def test_criterion_4_theorem_suite(theorem, corpus, tmp_path):
    lines = corpus_lines(corpus)
    t0 = time.monotonic()
    rep = verify_theorem(theorem, lines, corpus_name=corpus)
    elapsed = time.monotonic() - t0
    assert rep.scanned == rep.qualified + len(rep.skipped)
    if rep.counterexamples:
        bundle_file = tmp_path / f"{theorem}-counterexamples.json"
        bundle_file.write_text(json.dumps(list(rep.counterexamples), indent=1))
        # every emitted bundle must replay
        assert all(replay_bundle(b)["reproduced"] for b in rep.counterexamples)
    _report(
        4,
        f"{theorem} over {corpus}",
        not rep.counterexamples,
        f"{rep.qualified}/{rep.scanned} qualified, {elapsed:.1f}s",
    )


# --------------------------------------------------------------------------
# 5. Constructor soundness on 100% of qualifying corpus graphs (n <= 9).
# --------------------------------------------------------------------------


def _planar_corpus_lines_n9():
    return corpus_lines("planar_conn_le8.g6") + corpus_lines("planar_conn_9.g6")


def test_criterion_5_series_parallel_constructor():
    t0 = time.monotonic()
    qualified = failures = 0
    for ln in _planar_corpus_lines_n9():
        g = parse_graph6(ln)
        if g.n < 3 or not connectivity_at_least(g, 2) or not is_series_parallel(g):
            continue
        if not check_spg_conditions(g).verdict:
            continue
        qualified += 1
        t = build_ftt_series_parallel(g)
        if verify_fundamental_tutte_tree(g, t).verdict != HOLDS:
            failures += 1
    elapsed = time.monotonic() - t0
    _report(
        5,
        "build_ftt_series_parallel soundness",
        qualified > 0 and failures == 0,
        f"{qualified} qualifying, {failures} failures, {elapsed:.1f}s",
    )


def test_criterion_5_block_constructor():
    t0 = time.monotonic()
    qualified = failures = 0
    lines = (
        corpus_lines("connected_le7.g6")
        + corpus_lines("connected_8.g6")
        + corpus_lines("planar_conn_9.g6")
    )
    for ln in lines:
        g = parse_graph6(ln)
        if g.n < 3 or not is_connected(g) or connectivity_at_least(g, 2):
            continue
        if _block_conditions(g) is not None:
            continue
        if find_fundamental_tutte_tree(g).verdict != HOLDS:
            continue  # the paper's block conditions alone do not suffice
        qualified += 1
        t = build_ftt_block_structured(g)
        if verify_fundamental_tutte_tree(g, t).verdict != HOLDS:
            failures += 1
    elapsed = time.monotonic() - t0
    _report(
        5,
        "build_ftt_block_structured soundness",
        qualified > 0 and failures == 0,
        f"{qualified} qualifying, {failures} failures, {elapsed:.1f}s",
    )


def test_criterion_5_decide_constructed_trees():
    t0 = time.monotonic()
    holds = failures = 0
    for ln in corpus_lines("planar_conn_le8.g6"):
        g = parse_graph6(ln)
        if g.n < 3:
            continue
        cert = decide_planar_tutte(g)
        if cert.verdict != HOLDS:
            continue
        holds += 1
        t = SpanningTree(g, cert.witness.edges)
        if verify_tutte_tree(g, t).verdict != HOLDS:
            failures += 1
    elapsed = time.monotonic() - t0
    _report(
        5,
        "decide_planar_tutte constructed trees",
        holds > 0 and failures == 0,
        f"{holds} holds cases, {failures} failures, {elapsed:.1f}s",
    )


# --------------------------------------------------------------------------
# 6. Oracle equivalence: pruned vs unpruned on 500 random connected graphs,
#    n <= 9, byte-identical witnesses.
# --------------------------------------------------------------------------


def test_criterion_6_pruned_unpruned_equivalence():
    t0 = time.monotonic()
    rng = random.Random(987654321)
    mismatches = 0
    for _ in range(500):
        g = random_connected(rng, rng.randrange(3, 10))
        a = find_tutte_tree(g, SearchConfig(prune=True))
        b = find_tutte_tree(g, SearchConfig(prune=False))
        if a.verdict != b.verdict:
            mismatches += 1
        elif a.verdict == HOLDS and a.witness.edges != b.witness.edges:
            mismatches += 1
    elapsed = time.monotonic() - t0
    _report(6, "pruned = unpruned on 500 random graphs", mismatches == 0, f"{elapsed:.1f}s")


# --------------------------------------------------------------------------
# 7. The noftt graph: exactly three {v1,v2}-bridges including the trivial
#    edge; a leaves-on-one-face spanning tree is exhibited and re-verified.
#    The provable implication "two or more bridges lack Hamiltonian uv-paths
#    => no FTT" is exercised on constructed stand-ins; the 137-vertex
#    nontraceability exhaustion is the slow-marked optional job.  Note that
#    a single deficient bridge does NOT force the no-FTT verdict (C-uvhp's
#    stronger three-bridge clause is refuted on the small corpora), so the
#    no-FTT status of the noftt graph itself is open at this scale.
# --------------------------------------------------------------------------


def test_criterion_7_noftt_default():
    t0 = time.monotonic()
    g = noftt()
    v1, v2 = zamfirescu_terminals()
    dec = h_bridges(g, [v1, v2])
    ok = len(dec.bridges) == 3 and sum(1 for b in dec.bridges if b.trivial) == 1
    tree, emb = noftt_witness()
    ok = ok and tree.host == g and leaves_on_common_face(emb, tree)
    elapsed = time.monotonic() - t0
    _report(7, "noftt bridges + leaf-face witness", ok, f"{elapsed:.1f}s")


def test_criterion_7_implication_wiring_small_standins():
    """If a 2-cut has more than one bridge without a Hamiltonian uv-path,
    no FTT can exist (the except-one clause checked by C-uvhp).  No graph
    on <= 7 vertices has a 3-bridge cut of that shape, so the stand-ins are
    constructed at 8 and 10 vertices."""
    t0 = time.monotonic()
    from tuttetrees.graph import Graph
    from tuttetrees.harness import _bridges_with_ham_path

    # Each bridge between the cut pair {0,1} is a theta-like piece with a
    # branch vertex whose two stubs cannot both lie on one 0-1 path, so the
    # bridge has no Hamiltonian 0-1 path.  With two such bridges the
    # "except possibly one" clause is violated.
    deficient_pair = [
        (0, 2), (0, 3), (2, 4), (3, 4), (4, 1),
        (0, 5), (0, 6), (5, 7), (6, 7), (7, 1),
    ]
    standins = [
        # three bridges at the cut, including the trivial edge: the exact
        # decomposition shape of the noftt graph, at 8 vertices
        (Graph(8, [(0, 1)] + deficient_pair), 3),
        # the two deficient bridges alone
        (Graph(8, deficient_pair), 2),
        # four bridges: trivial edge plus an extra 0-8-9-1 leg
        (Graph(10, [(0, 1), (0, 8), (8, 9), (9, 1)] + deficient_pair), 4),
    ]
    ok = True
    for g, expect_bridges in standins:
        if not connectivity_at_least(g, 2):
            ok = False
            break
        info = _bridges_with_ham_path(g, 0, 1)
        lacking = sum(1 for _, h in info if not h)
        if len(info) != expect_bridges or lacking != 2:
            ok = False  # stand-in does not have the required shape
            break
        # the implication: this shape forces the no-FTT verdict
        if find_fundamental_tutte_tree(g).verdict != FAILS:
            ok = False
            break
    elapsed = time.monotonic() - t0
    _report(7, "uv-path implication wiring (stand-ins)", ok, f"{elapsed:.1f}s")


@pytest.mark.slow
def test_criterion_7_full_nontraceability_job():
    """Optional long-running job: exhaustive Hamiltonian v1v2-path search on
    the full ring graph.  This establishes the nontraceability premise of
    the no-FTT argument for the noftt graph.  The argument's remaining step
    (one deficient bridge out of three => no FTT) is refuted on small
    graphs, so a fails verdict here does not by itself decide the no-FTT
    claim; it confirms the premise the claim depends on."""
    z = zamfirescu()
    v1, v2 = zamfirescu_terminals()
    cert = find_hamiltonian_path(z, (v1, v2))
    assert cert.verdict == FAILS and cert.stats.exhausted


@pytest.mark.slow
def test_criterion_4_connected_8_full_sweep():
    lines = corpus_lines("connected_8.g6")
    for theorem in sorted(THEOREM_IDS):
        if theorem == "T-spg":
            continue  # covered at n=9 in the default gate
        rep = verify_theorem(theorem, lines, corpus_name="connected_8.g6")
        assert not rep.counterexamples, rep.counterexamples[:1]
