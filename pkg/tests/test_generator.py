"""Instance generation: uniform sampling, seeded determinism, growth."""
import pytest

from vsbgraph import (
    Digraph,
    InstanceSpec,
    TooFewVerticesError,
    TooManyEdgesError,
    generate,
    grow_until_3vsb,
    is_k_vsb,
    random_digraph,
)

from graphutil import complete_bidirected


class TestInstanceSpec:
    def test_default_initial_edges(self):
        assert InstanceSpec(10, seed=1).initial_edges == 80

    def test_too_few_vertices(self):
        with pytest.raises(TooFewVerticesError):
            InstanceSpec(3, seed=1)

    def test_too_many_edges(self):
        # 8n exceeds the n(n-1) arc space at n=8
        with pytest.raises(TooManyEdgesError):
            InstanceSpec(8, 64, seed=1)


class TestRandomDigraph:
    def test_size_profile(self):
        g = random_digraph(InstanceSpec(10, 80, seed=1))
        assert g.n == 10
        assert g.m == 80
        assert all(u != v for u, v in g.edges())
        assert len(set(g.edges())) == 80

    def test_full_sampling_is_complete_graph(self):
        g = random_digraph(InstanceSpec(4, 12, seed=99))
        assert set(g.edges()) == set(complete_bidirected(4).edges())

    def test_seeded_determinism(self):
        spec = InstanceSpec(10, 40, seed=7)
        assert random_digraph(spec).edges() == random_digraph(spec).edges()

    def test_different_seeds_differ(self):
        a = random_digraph(InstanceSpec(10, 40, seed=1))
        b = random_digraph(InstanceSpec(10, 40, seed=2))
        assert a.edges() != b.edges()


class TestGrowth:
    def test_already_3vsb_adds_nothing(self):
        instance = grow_until_3vsb(complete_bidirected(4), seed=5)
        assert instance.edges_added_in_growth == 0
        assert instance.graph == complete_bidirected(4)

    def test_grown_instance_passes_replay(self):
        instance = grow_until_3vsb(random_digraph(InstanceSpec(10, 40, seed=3)), seed=3)
        assert is_k_vsb(instance.graph, 3).verdict
        assert instance.edges_added_in_growth > 0

    def test_empty_start_terminates(self):
        instance = grow_until_3vsb(Digraph(4), seed=11)
        assert instance.graph.m <= 12
        assert is_k_vsb(instance.graph, 3).verdict

    def test_input_not_mutated(self):
        g = Digraph(4)
        grow_until_3vsb(g, seed=11)
        assert g.m == 0

    def test_edge_accounting(self):
        g = random_digraph(InstanceSpec(10, 40, seed=3))
        instance = grow_until_3vsb(g, seed=3)
        assert instance.graph.m == g.m + instance.edges_added_in_growth
        assert instance.spec.initial_edges == g.m

    def test_too_few_vertices(self):
        with pytest.raises(TooFewVerticesError):
            grow_until_3vsb(Digraph(3, [(0, 1)]), seed=1)


class TestGenerate:
    def test_deterministic(self):
        spec = InstanceSpec(10, seed=42)
        a = generate(spec)
        b = generate(spec)
        assert a.graph == b.graph
        assert a.edges_added_in_growth == b.edges_added_in_growth

    def test_matches_composition_of_parts(self):
        spec = InstanceSpec(10, 40, seed=6)
        whole = generate(spec)
        parts = grow_until_3vsb(random_digraph(spec), spec.seed)
        assert whole.graph == parts.graph

    def test_instance_is_3vsb(self):
        assert is_k_vsb(generate(InstanceSpec(12, seed=0)).graph, 3).verdict

    def test_growth_exercised_at_half_density(self):
        # at the default 8n density small instances usually pass outright,
        # so the growth loop is exercised at 4n instead
        grown = [
            generate(InstanceSpec(10, 40, seed=s)).edges_added_in_growth
            for s in range(100)
        ]
        assert all(g >= 0 for g in grown)
        assert sum(grown) > 0
        final = [40 + g for g in grown]
        assert all(m >= 40 for m in final)

    def test_default_density_final_count_never_shrinks(self):
        for seed in range(20):
            instance = generate(InstanceSpec(10, seed=seed))
            assert instance.graph.m >= 80
            assert is_k_vsb(instance.graph, 3).verdict
