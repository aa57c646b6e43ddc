"""Core graph type: complement, induced subgraphs, inflations, invariants."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from hadwiger2.graphs import (
    Graph,
    InflationSpec,
    adjacent_twins,
    blow_up,
    complement,
    diameter,
    girth,
    induced_subgraph,
    inflate,
    odd_girth,
    twins,
    vertex_connectivity,
)
from hadwiger2.constructions import (
    complete,
    cycle,
    kneser,
    petersen,
)
from hadwiger2.iso import is_isomorphic, has_induced_subgraph
from hadwiger2.rng import SplitMix64

from conftest import (
    brute_diameter,
    brute_girth,
    brute_independence_number,
    brute_odd_girth,
    brute_vertex_connectivity,
    random_graph,
)


def graphs_strategy(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1 if pairs else 0))
        return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])

    return build()


class TestGraphBasics:
    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_edges_roundtrip(self):
        g = Graph(4, [(0, 1), (2, 3), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]
        assert g.edge_count == 3
        assert g.degree(1) == 2

    @given(graphs_strategy())
    @settings(max_examples=60, deadline=None)
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    def test_complement_examples(self):
        assert complement(complete(3)) == Graph(3)
        assert is_isomorphic(complement(cycle(5)), cycle(5))
        assert complement(petersen()).edge_count == 30


class TestInducedSubgraph:
    def test_identity(self):
        g = cycle(5)
        assert induced_subgraph(g, range(5)) == g

    def test_consecutive_cycle_vertices_give_path(self):
        g = induced_subgraph(cycle(5), [0, 1, 2])
        assert g.edges() == [(0, 1), (1, 2)]

    def test_independent_set_of_petersen(self):
        p = petersen()
        assert brute_independence_number(p) == 4
        # outer vertex 0 and the three inner vertices avoiding its spokes
        for s in [(1, 3, 5, 9), (0, 2, 8, 9)]:
            sub = induced_subgraph(p, s)
            if sub.edge_count == 0:
                assert sub == Graph(4)
                return
        raise AssertionError("no independent 4-set among the candidates")

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            induced_subgraph(cycle(5), [0, 7])


class TestInflation:
    def test_identity_inflation(self):
        spec = InflationSpec(cycle(5), (1,) * 5)
        assert inflate(spec) == cycle(5)
        assert spec.projection == (0, 1, 2, 3, 4)

    def test_uniform_two_inflation_of_c5(self):
        spec = InflationSpec(cycle(5), (2,) * 5)
        g = inflate(spec)
        assert g.n == 10
        assert brute_independence_number(g) == 2
        for x in range(5):
            assert g.has_edge(spec.offsets[x], spec.offsets[x] + 1)

    def test_zero_multiplicity_is_induced_subgraph(self):
        base = petersen()
        spec = InflationSpec(base, (1, 0, 1, 1, 0, 1, 1, 1, 0, 1))
        keep = [x for x in range(10) if spec.mult[x]]
        assert inflate(spec) == induced_subgraph(base, keep)

    def test_blow_up_k2_gives_c4(self):
        g = blow_up(InflationSpec(complete(2), (2, 2)))
        assert is_isomorphic(g, cycle(4))

    def test_blow_up_identity(self):
        g = petersen()
        assert blow_up(InflationSpec(g, (1,) * 10)) == g

    def test_blow_up_complement_duality(self):
        rng = SplitMix64(7)
        for _ in range(25):
            n = 2 + rng.randrange(5)
            g = random_graph(n, 50, rng)
            mult = tuple(rng.randrange(3) for _ in range(n))
            spec_g = InflationSpec(g, mult)
            spec_gc = InflationSpec(complement(g), mult)
            assert complement(blow_up(spec_gc)) == inflate(spec_g)

    def test_proper_inflation_preserves_alpha_and_complement_diameter(self):
        # Diameter preservation needs the base complement to be non-complete:
        # two expanded copies of one vertex sit at distance exactly 2 in the
        # blow-up, so a complement of diameter 1 grows to diameter 2.
        rng = SplitMix64(11)
        checked = 0
        while checked < 40:
            n = 2 + rng.randrange(7)
            base = random_graph(n, 40 + rng.randrange(40), rng)
            mult = tuple(1 + rng.randrange(3) for _ in range(n))
            g = inflate(InflationSpec(base, mult))
            assert brute_independence_number(g) == brute_independence_number(base)
            d_base = brute_diameter(complement(base))
            d_exp = brute_diameter(complement(g))
            if d_base == 1 and max(mult) > 1:
                assert d_exp == 2
            else:
                assert d_exp == d_base
            checked += 1

    def test_mult_length_mismatch(self):
        with pytest.raises(ValueError):
            InflationSpec(cycle(3), (1, 1))


class TestMetricInvariants:
    def test_diameter_examples(self):
        assert diameter(cycle(5)) == 2
        assert diameter(petersen()) == 2
        two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert diameter(two_triangles) == math.inf
        with pytest.raises(ValueError):
            diameter(Graph(0))

    def test_girth_examples(self):
        assert girth(petersen()) == 5
        assert girth(cycle(5)) == 5
        assert girth(Graph(4, [(0, 1), (1, 2)])) == math.inf
        assert odd_girth(cycle(4)) == math.inf

    def test_odd_girth_of_kneser_7_3(self):
        g = kneser(7, 3)
        assert odd_girth(g) == 7
        assert brute_odd_girth(g) == 7

    @given(graphs_strategy(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_metrics_match_brute_force(self, g):
        assert girth(g) == brute_girth(g)
        assert odd_girth(g) == brute_odd_girth(g)
        if g.n:
            assert diameter(g) == brute_diameter(g)


class TestConnectivity:
    def test_examples(self):
        assert vertex_connectivity(cycle(5)) == 2
        assert vertex_connectivity(petersen()) == 3
        assert brute_vertex_connectivity(petersen()) == 3
        assert vertex_connectivity(complete(5)) == 4

    def test_requires_two_vertices(self):
        with pytest.raises(ValueError):
            vertex_connectivity(Graph(1))

    @given(graphs_strategy(max_n=7))
    @settings(max_examples=30, deadline=None)
    def test_matches_brute_force(self, g):
        if g.n >= 2:
            assert vertex_connectivity(g) == brute_vertex_connectivity(g)


class TestTwins:
    def test_examples(self):
        assert adjacent_twins(complete(3)) == [(0, 1), (0, 2), (1, 2)]
        assert twins(cycle(4)) == [(0, 2), (1, 3)]
        assert adjacent_twins(cycle(5)) == []

    @given(graphs_strategy(max_n=8))
    @settings(max_examples=50, deadline=None)
    def test_twin_duality(self, g):
        # adjacent-twin-free iff the complement is twin-free
        assert (adjacent_twins(g) == []) == (twins(complement(g)) == [])
        assert sorted(adjacent_twins(g)) == sorted(twins(complement(g)))


class TestInflationHFreeness:
    def test_adjacent_twin_free_patterns_survive_inflation(self):
        # For adjacent-twin-free h, h-freeness is preserved by inflation.
        rng = SplitMix64(23)
        hs = []
        while len(hs) < 4:
            h = random_graph(4 + rng.randrange(2), 50, rng)
            if adjacent_twins(h) == [] and h.edge_count:
                hs.append(h)
        checked = 0
        while checked < 12:
            g = random_graph(4 + rng.randrange(4), 50, rng)
            for h in hs:
                if has_induced_subgraph(g, h):
                    continue
                mult = tuple(1 + rng.randrange(2) for _ in range(g.n))
                expanded = inflate(InflationSpec(g, mult))
                assert not has_induced_subgraph(expanded, h)
                checked += 1
