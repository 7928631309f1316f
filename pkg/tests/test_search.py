"""Enumeration, extremal scans, the completion embedding, and probes."""

from __future__ import annotations

import random

import pytest

from eqspec.errors import BudgetExceeded, CompleteInput, NotStronglyConnected
from eqspec.families import (
    BidirectedComplete,
    DirectedCycle,
    KnkpDigraph,
    KnkpGraph,
    build,
)
from eqspec.graphs import (
    Digraph,
    Graph,
    build_matrix,
    is_strongly_connected,
    vertex_connectivity,
)
from eqspec.linalg import spectral_radius
from eqspec.quotient import BlockSpec, realize_block_matrix
from eqspec.search import (
    ScanJob,
    conjecture_search,
    dominate_with_extremal,
    enumerate_class,
    extremal_scan,
    graph_from_mask,
    is_isomorphic,
    labeled_isomorph_masks,
    mask_from_graph,
    pair_table,
    theorem_scan,
)


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_three_vertex_graphs():
    paths = list(enumerate_class(3, False, 1))
    assert len(paths) == 3
    assert all(len(g.edges) == 2 for g in paths)
    triangles = list(enumerate_class(3, False, 2))
    assert triangles == [Graph(3, [(0, 1), (0, 2), (1, 2)])]


def test_enumerate_three_vertex_digraphs_matches_filter_pipeline():
    # independent pipeline: connectivity + cut checks on all 2^6 arc sets
    expected = []
    for mask in range(64):
        dg = graph_from_mask(3, mask, True)
        if is_strongly_connected(dg) and vertex_connectivity(dg) == 1:
            expected.append(dg)
    assert list(enumerate_class(3, True, 1)) == expected


def test_enumerate_mask_order_is_ascending():
    masks = [mask_from_graph(g) for g in enumerate_class(3, False, 1)]
    assert masks == sorted(masks)


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_class(8, False, 1))
    with pytest.raises(BudgetExceeded):
        next(enumerate_class(6, True, 1))


def test_batched_kappa_matches_per_graph_computation():
    import numpy as np

    from eqspec.graphs import is_connected
    from eqspec.search import _adjacency_batch, _distances_and_connectivity, _kappa_batch

    rng = random.Random(44)
    for directed in (False, True):
        n = 5
        pairs = pair_table(n, directed)
        masks = np.array(
            sorted(rng.sample(range(1 << len(pairs)), 300)), dtype=np.int64
        )
        adj = _adjacency_batch(masks, n, pairs, directed)
        _, connected = _distances_and_connectivity(adj)
        kappa = _kappa_batch(adj, connected)
        for mask, conn, kap in zip(masks, connected, kappa):
            obj = graph_from_mask(n, int(mask), directed)
            alive = is_strongly_connected(obj) if directed else is_connected(obj)
            assert conn == alive
            if alive:
                assert kap == vertex_connectivity(obj)
            else:
                assert kap == -1


def test_mask_round_trip():
    rng = random.Random(41)
    for directed in (False, True):
        n = 5
        pairs = pair_table(n, directed)
        for _ in range(20):
            mask = rng.randrange(1 << len(pairs))
            assert mask_from_graph(graph_from_mask(n, mask, directed)) == mask


# ---------------------------------------------------------------------------
# extremal scans


def test_scan_directed_distance_min_n4():
    cert = extremal_scan(ScanJob(n=4, k=1, directed=True, objective="rhoD", mode="min"))
    fam1 = labeled_isomorph_masks(build(KnkpDigraph(4, 1, 1)))
    fam2 = labeled_isomorph_masks(build(KnkpDigraph(4, 1, 2)))
    assert set(cert.optimizers) == set(fam1 | fam2)
    assert "other" not in cert.classification.values()


def test_scan_directed_q_max_single_family():
    cert = extremal_scan(ScanJob(n=4, k=1, directed=True, objective="q", mode="max"))
    assert set(cert.optimizers) == set(labeled_isomorph_masks(build(KnkpDigraph(4, 1, 2))))


def test_scan_undirected_matches_bound():
    from eqspec.theorems import graph_bound

    cert = extremal_scan(ScanJob(n=5, k=2, directed=False, objective="rho", mode="max"))
    assert cert.value == pytest.approx(graph_bound(5, 2, "A").value, abs=1e-9)
    target = labeled_isomorph_masks(build(KnkpGraph(5, 2, 1)))
    assert set(cert.optimizers) == set(target)


def test_scan_shard_independence():
    jobs = [
        ScanJob(n=4, k=2, directed=False, objective="qD", mode="min", shards=s)
        for s in (1, 3)
    ]
    certs = [extremal_scan(job) for job in jobs]
    assert certs[0].value == certs[1].value
    assert certs[0].optimizers == certs[1].optimizers
    assert certs[0].examined == certs[1].examined


def test_theorem_scan_small_undirected():
    res = theorem_scan(5, False)
    for k in (1, 2, 3):
        for obj in ("rho", "q", "rhoD", "qD"):
            cert = res[k][obj]
            labels = set(cert.classification.values())
            assert labels and all(f"knkp-g:5,{k},1" in label for label in labels)


def test_scan_certificate_note_mentions_scope():
    cert = extremal_scan(ScanJob(n=4, k=1, directed=True, objective="rho", mode="max"))
    assert "verified only at this n" in cert.note


# ---------------------------------------------------------------------------
# completion embedding


def test_dominate_fixed_point():
    for n, k, p in ((5, 2, 1), (6, 2, 3), (7, 1, 3)):
        fam = build(KnkpDigraph(n, k, p))
        emb = dominate_with_extremal(fam)
        assert emb.p == p
        assert emb.host == build(KnkpDigraph(n, k, p))
        relabeled = Digraph(n, {(emb.witness[u], emb.witness[v]) for u, v in fam.arcs})
        assert relabeled == emb.host


def test_dominate_directed_cycle():
    c4 = build(DirectedCycle(4))
    emb = dominate_with_extremal(c4)
    assert 1 <= emb.p <= 2
    assert spectral_radius(build_matrix(c4, "A")) <= spectral_radius(
        build_matrix(emb.host, "A")
    ) + 1e-9


def test_dominate_rejects_bad_inputs():
    with pytest.raises(NotStronglyConnected):
        dominate_with_extremal(Digraph(3, [(0, 1), (1, 2)]))
    with pytest.raises(CompleteInput):
        dominate_with_extremal(build(BidirectedComplete(4)))


def test_dominate_randomized_monotonicity():
    rng = random.Random(42)
    done = 0
    while done < 50:
        n = rng.randint(3, 7)
        arcs = {
            (u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.45
        }
        arcs |= {(i, (i + 1) % n) for i in range(n)}  # keep it strongly connected
        dg = Digraph(n, arcs)
        if dg.is_complete():
            continue
        emb = dominate_with_extremal(dg)
        # witness: the input is a spanning subdigraph of the host
        relabeled = {(emb.witness[u], emb.witness[v]) for u, v in dg.arcs}
        assert relabeled <= emb.host.arcs
        assert emb.host == build(KnkpDigraph(n, vertex_connectivity(dg), emb.p))
        for kind, direction in (("A", 1), ("Q", 1), ("D", -1), ("DQ", -1)):
            mine = spectral_radius(build_matrix(dg, kind))
            host = spectral_radius(build_matrix(emb.host, kind))
            assert direction * (host - mine) >= -1e-9, kind
        done += 1


# ---------------------------------------------------------------------------
# conjecture probes


def test_conjecture_search_deterministic_and_empty():
    a = conjecture_search(300, seed=5)
    b = conjecture_search(300, seed=5)
    assert not a.found and not b.found
    assert a.to_json() == b.to_json()


def test_conjecture_result_serializes_counterexample_payload():
    from eqspec.quotient import ProbeReport
    from eqspec.search import ConjectureSearchResult

    spec = BlockSpec(sizes=(2,), l=(1,), p=(0,), s=((0,),))
    result = ConjectureSearchResult(
        trials=7, seed=1, counterexample=spec, report=ProbeReport(False, 1.0, 2.0)
    )
    payload = result.to_json()
    assert payload["counterexample_found"] is True
    assert payload["counterexample"]["sizes"] == [2]
    assert payload["rho_B"] == 1.0 and payload["rho_M"] == 2.0


def test_probe_block_diagonal_spec_holds():
    from eqspec.quotient import conjecture_probe

    spec = BlockSpec(
        sizes=(3, 2),
        l=(2, 5),
        p=(1, 0),
        s=((0, 0), (0, 0)),
    )
    report = conjecture_probe(realize_block_matrix(spec).to_numpy(), spec.partition())
    assert report.holds
    # block-diagonal: the radius is the larger block row sum
    assert report.rho_M == pytest.approx(max(2 * 3 + 1, 5 * 2), abs=1e-9)


def test_probe_single_block_constant_row_sum():
    from eqspec.quotient import conjecture_probe

    spec = BlockSpec(sizes=(4,), l=(3,), p=(2,), s=((0,),))
    report = conjecture_probe(realize_block_matrix(spec).to_numpy(), spec.partition())
    assert report.holds
    assert report.rho_B == pytest.approx(3 * 4 + 2, abs=1e-9)


# ---------------------------------------------------------------------------
# isomorphism


def test_is_isomorphic_relabelings():
    rng = random.Random(43)
    for _ in range(10):
        n = rng.randint(2, 6)
        g = Graph(n, {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5})
        perm = list(range(n))
        rng.shuffle(perm)
        h = Graph(n, {(perm[u], perm[v]) for u, v in g.edges})
        assert is_isomorphic(g, h)


def test_is_isomorphic_distinguishes():
    assert not is_isomorphic(Graph(3, [(0, 1)]), Graph(3, [(0, 1), (1, 2)]))
    assert not is_isomorphic(
        build(KnkpDigraph(5, 2, 1)), build(KnkpDigraph(5, 2, 2))
    )
    assert not is_isomorphic(Graph(2), Digraph(2))
