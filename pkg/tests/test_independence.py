"""alpha / maximum-independent-set enumeration / reductions around a
max-degree vertex that lies in every maximum independent set."""

import pytest

import oracles
from reslab.graphs import Graph, enumerate_labeled, isomorphism_classes
from reslab.independence import (
    all_mis,
    alpha,
    mdi_vertices,
    partition_neighborhood,
    prune_outside,
    reduce_to_unique_mis,
    reduction_pipeline,
)

P5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestAlpha:
    def test_exhaustive_small(self):
        for n in range(6):
            for g in enumerate_labeled(n):
                assert alpha(g) == oracles.brute_alpha(g)

    def test_class_reps_n7(self):
        for m in isomorphism_classes(7):
            g = Graph.from_mask(7, m)
            assert alpha(g) == oracles.brute_alpha(g)

    def test_examples(self):
        assert alpha(P5) == 3
        assert alpha(C4) == 2
        assert alpha(Graph(5)) == 5
        assert alpha(Graph(0)) == 0


class TestAllMIS:
    def test_exhaustive_small(self):
        for n in range(6):
            for g in enumerate_labeled(n):
                rep = all_mis(g)
                assert rep.alpha == oracles.brute_alpha(g)
                assert list(rep.sets) == oracles.brute_all_mis(g)

    def test_sorted_lexicographically(self):
        rep = all_mis(C4)
        assert [sorted(s) for s in rep.sets] == [[0, 2], [1, 3]]

    def test_empty_graph(self):
        rep = all_mis(Graph(0))
        assert rep.alpha == 0 and rep.sets == (frozenset(),)

    def test_cap(self):
        with pytest.raises(ValueError):
            all_mis(Graph(33))


class TestMDIVertices:
    def test_exhaustive_small(self):
        for n in range(1, 6):
            for g in enumerate_labeled(n):
                assert mdi_vertices(g) == oracles.brute_mdi(g)

    def test_frozen_examples(self):
        assert mdi_vertices(P5) == {2}
        assert mdi_vertices(C4) == frozenset()
        assert mdi_vertices(Graph(4, [(0, 1), (0, 2), (0, 3)])) == frozenset()
        assert mdi_vertices(Graph(3)) == {0, 1, 2}

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            mdi_vertices(Graph(0))


# n=7 hosts where the reductions genuinely delete vertices; the small-n
# exhaustive loops below only exercise the identity cases because up to
# six vertices such a vertex forces the maximum independent set unique.
MULTI_MIS_HOST = Graph(7, [(0, 4), (0, 6), (1, 4), (1, 5), (2, 3)])  # v = 4
PRUNABLE_HOST = Graph(7, [(0, 4), (0, 6), (1, 3), (1, 5), (2, 3), (2, 4)])  # v = 3


class TestReduceToUniqueMIS:
    def test_identity_when_already_unique(self):
        assert reduce_to_unique_mis(P5, 2) == P5

    def test_multi_mis_host(self):
        sets = [sorted(s) for s in all_mis(MULTI_MIS_HOST).sets]
        assert sets == [[2, 4, 5, 6], [3, 4, 5, 6]]
        assert mdi_vertices(MULTI_MIS_HOST) == {4}
        g1 = reduce_to_unique_mis(MULTI_MIS_HOST, 4)
        # vertex 3 (the swappable set member) goes; 4 lands at index 3
        assert g1 == Graph(6, [(0, 3), (0, 5), (1, 3), (1, 4)])
        assert [sorted(s) for s in all_mis(g1).sets] == [[2, 3, 4, 5]]

    def test_rejects_non_qualifying_vertex(self):
        with pytest.raises(ValueError):
            reduce_to_unique_mis(P5, 0)  # not max degree
        with pytest.raises(ValueError):
            reduce_to_unique_mis(C4, 0)  # in some but not all sets

    def test_exhaustive_invariants(self):
        for n in range(1, 6):
            for g in enumerate_labeled(n):
                for v in mdi_vertices(g):
                    g1 = reduce_to_unique_mis(g, v)
                    assert g1 == g  # unique already at this size
                    assert len(all_mis(g1).sets) == 1


class TestPruneOutside:
    def test_prunable_host(self):
        assert mdi_vertices(PRUNABLE_HOST) == {3, 4}
        # already unique, so the first reduction is the identity
        assert reduce_to_unique_mis(PRUNABLE_HOST, 3) == PRUNABLE_HOST
        g2 = prune_outside(PRUNABLE_HOST, 3)
        # vertex 0 sits outside N(3) and the set {3,4,5,6}
        assert g2 == Graph(6, [(0, 2), (0, 4), (1, 2), (1, 3)])

    def test_requires_unique_mis(self):
        with pytest.raises(ValueError):
            prune_outside(MULTI_MIS_HOST, 4)

    def test_requires_qualifying_vertex(self):
        with pytest.raises(ValueError):
            prune_outside(P5, 0)


class TestReductionPipeline:
    def test_tracks_vertex(self):
        g2, v2 = reduction_pipeline(MULTI_MIS_HOST, 4)
        assert (g2, v2) == (Graph(6, [(0, 3), (0, 5), (1, 3), (1, 4)]), 3)
        g2, v2 = reduction_pipeline(PRUNABLE_HOST, 3)
        assert (g2, v2) == (Graph(6, [(0, 2), (0, 4), (1, 2), (1, 3)]), 2)

    def test_invariants_on_class_reps(self):
        # degree of v preserved, output fits N[v] union the set exactly,
        # v still max-degree and in the now-unique maximum independent set
        for n in (6, 7):
            for m in isomorphism_classes(n):
                g = Graph.from_mask(n, m)
                for v in mdi_vertices(g):
                    g2, v2 = reduction_pipeline(g, v)
                    assert g2.degree(v2) == g.degree(v)
                    assert alpha(g2) == alpha(g)
                    rep = all_mis(g2)
                    assert len(rep.sets) == 1
                    assert v2 in rep.sets[0]
                    assert g2.n == g.degree(v) + rep.alpha
                    assert v2 in oracles.brute_mdi(g2)


class TestPartitionNeighborhood:
    def test_hand_example(self):
        # center 0 with set {0,1,2}; neighbor 3 touches 1, neighbor 4
        # touches 2, neighbor 5 touches both; 3-4 keeps the set unique
        g = Graph(
            6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4)]
        )
        part = partition_neighborhood(g, 0)
        assert part.center == 0
        assert part.iset == {0, 1, 2}
        assert part.iprime == {1, 2}
        assert part.q == {3, 4}
        assert part.q_u == {3}
        assert part.q_w == {4}
        assert part.n_both == {5}
        assert part.classes == (frozenset({3, 4}), frozenset({5}))

    def test_pair_accessors_need_alpha3(self):
        # a non-edgeless host with alpha <= 2 and a qualifying vertex does
        # not exist (that is one of the verified statements), so the only
        # alpha = 2 partitions come from two isolated vertices
        part = partition_neighborhood(Graph(2), 0)
        assert part.iprime == {1}
        assert part.q == frozenset()
        with pytest.raises(ValueError):
            part.q_u  # noqa: B018 - property access is the act under test
        with pytest.raises(ValueError):
            part.n_both  # noqa: B018

    def test_rejects_multi_mis(self):
        with pytest.raises(ValueError):
            partition_neighborhood(C4, 0)

    def test_rejects_outside_vertices(self):
        with pytest.raises(ValueError):
            partition_neighborhood(PRUNABLE_HOST, 3)  # vertex 0 not pruned yet

    def test_classes_cover_neighborhood(self):
        for n in (5, 6):
            for m in isomorphism_classes(n):
                g = Graph.from_mask(n, m)
                for v in mdi_vertices(g):
                    g2, v2 = reduction_pipeline(g, v)
                    part = partition_neighborhood(g2, v2)
                    merged = frozenset().union(*part.classes) if part.classes else frozenset()
                    assert merged == g2.neighbors(v2)
                    for i, cls in enumerate(part.classes):
                        for x in cls:
                            hits = sum(1 for y in part.iprime if g2.has_edge(x, y))
                            assert hits == i + 1
