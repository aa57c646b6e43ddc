"""Clique-cover certificates: verification, named builders, lifting, covers."""

from fractions import Fraction

import pytest

from hadwiger2.certificates import (
    CliqueFamilyCertificate,
    aktf_bound,
    clebsch_certificate,
    classify_good_bad_outcome,
    four_cover_check,
    good_bad_partition,
    intersecting_family_size,
    kneser_certificate,
    lift_certificate,
    lift_cover,
    mesner_certificate,
    theta_f_lower_via_omega,
    theta_f_upper,
    verify_certificate,
    vertex_multiplicities,
)
from hadwiger2.cliques import is_clique
from hadwiger2.constructions import (
    clebsch,
    complete,
    cycle,
    generalized_kneser_geq,
    kneser_labels,
)
from hadwiger2.graphs import Graph, InflationSpec, complement, inflate
from hadwiger2.rng import SplitMix64
from hadwiger2.steiner import mesner

from conftest import brute_clique_number, brute_max_t_intersecting, random_graph


class TestVerify:
    def test_k3_trivial(self):
        cert = CliqueFamilyCertificate(((0, 1, 2),), Fraction(1))
        assert verify_certificate(complete(3), cert)

    def test_c5_edge_cliques(self):
        edges = tuple(cycle(5).edges())
        good = CliqueFamilyCertificate(edges, Fraction(5, 2))
        assert verify_certificate(cycle(5), good)
        tight = CliqueFamilyCertificate(edges, Fraction(2))
        assert not verify_certificate(cycle(5), tight)

    def test_rejects_non_clique(self):
        cert = CliqueFamilyCertificate(((0, 1, 2),), Fraction(1))
        assert not verify_certificate(cycle(5), cert)

    def test_out_of_range_vertex(self):
        cert = CliqueFamilyCertificate(((0, 9),), Fraction(1))
        with pytest.raises(ValueError):
            verify_certificate(complete(3), cert)

    def test_bound_below_one_rejected(self):
        with pytest.raises(ValueError):
            CliqueFamilyCertificate(((0,),), Fraction(1, 2))


class TestClebschCertificate:
    def test_structure(self):
        g = complement(clebsch())
        cert = clebsch_certificate(g)
        assert cert.bound == Fraction(16, 5)
        assert cert.size == 16
        assert all(len(c) == 5 for c in cert.cliques)
        assert vertex_multiplicities(g, cert) == [5] * 16
        assert verify_certificate(g, cert)

    def test_rejects_other_graphs(self):
        with pytest.raises(ValueError):
            clebsch_certificate(clebsch())
        with pytest.raises(ValueError):
            clebsch_certificate(complete(16))

    def test_pins_theta_f(self):
        g = complement(clebsch())
        assert theta_f_upper(g, clebsch_certificate(g)) == Fraction(16, 5)
        assert theta_f_lower_via_omega(g) == Fraction(16, 5)


class TestMesnerCertificate:
    def test_structure(self, steiner_system):
        g = complement(mesner(steiner_system))
        cert = mesner_certificate(g, steiner_system)
        assert cert.bound == Fraction(22, 6)
        assert cert.size == 22
        assert all(len(c) == 21 for c in cert.cliques)
        assert vertex_multiplicities(g, cert) == [6] * 77
        assert verify_certificate(g, cert)

    def test_rejects_mismatched_host(self, steiner_system):
        with pytest.raises(ValueError):
            mesner_certificate(mesner(steiner_system), steiner_system)


class TestKneserCertificate:
    def test_petersen_complement_case(self):
        cert = kneser_certificate(5, 2, 1, 0)
        host = generalized_kneser_geq(5, 2, 1)
        assert cert.size == 5
        assert all(len(c) == 4 for c in cert.cliques)
        assert cert.bound == Fraction(5, 2)
        assert verify_certificate(host, cert)

    def test_7_3_1_0(self):
        cert = kneser_certificate(7, 3, 1, 0)
        host = generalized_kneser_geq(7, 3, 1)
        assert verify_certificate(host, cert)

    def test_multiplicity_formula_matches_enumeration(self):
        n, k, t, r = 7, 3, 2, 1
        cert = kneser_certificate(n, k, t, r)
        host = generalized_kneser_geq(n, k, t)
        counts = vertex_multiplicities(host, cert)
        s = t + 2 * r
        labels = kneser_labels(n, k)
        from itertools import combinations

        for i, lab in enumerate(labels):
            direct = sum(
                1
                for sub in combinations(range(n), s)
                if len(set(sub) & set(lab)) >= t + r
            )
            assert counts[i] == direct

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            kneser_certificate(5, 2, 0, 0)
        with pytest.raises(ValueError):
            kneser_certificate(5, 2, 1, 3)


class TestAktf:
    def test_examples(self):
        assert aktf_bound(5, 2, 1) == 4
        assert brute_max_t_intersecting(5, 2, 1) == 4
        assert aktf_bound(6, 3, 3) == 1

    def test_family_size_formula(self):
        assert intersecting_family_size(5, 2, 1, 0) == 4
        assert intersecting_family_size(7, 3, 1, 0) == 15

    def test_matches_brute_family_search_small(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                for t in range(1, k + 1):
                    assert aktf_bound(n, k, t) == brute_max_t_intersecting(n, k, t)

    def test_domain(self):
        with pytest.raises(ValueError):
            aktf_bound(5, 6, 1)


class TestThetaBounds:
    def test_complete_graph(self):
        g = complete(6)
        cert = CliqueFamilyCertificate((tuple(range(6)),), Fraction(1))
        assert theta_f_upper(g, cert) == 1
        assert theta_f_lower_via_omega(g) == 1

    def test_petersen_complement_pinned(self):
        host = generalized_kneser_geq(5, 2, 1)
        assert theta_f_lower_via_omega(host) == Fraction(5, 2)

    def test_failed_certificate_raises(self):
        with pytest.raises(ValueError):
            theta_f_upper(cycle(5), CliqueFamilyCertificate(((0, 1, 2),), Fraction(1)))


class TestLifting:
    def test_identity_inflation(self):
        spec = InflationSpec(cycle(5), (1,) * 5)
        cover = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
        lifted = lift_cover(spec, cover)
        assert sorted(tuple(sorted(c)) for c in lifted) == sorted(cover)

    def test_c5_uniform_two(self):
        spec = InflationSpec(cycle(5), (2,) * 5)
        cover = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
        lifted = lift_cover(spec, cover)
        assert len(lifted) == 5
        assert sum(len(c) for c in lifted) == 15
        g = inflate(spec)
        union = set()
        for c in lifted:
            assert is_clique(g, c)
            union.update(c)
        assert union == set(range(10))

    def test_single_vertex_base(self):
        spec = InflationSpec(Graph(1), (4,))
        lifted = lift_cover(spec, [(0,)])
        assert lifted == [(0, 1, 2, 3)]

    def test_non_proper_rejected(self):
        with pytest.raises(ValueError):
            lift_cover(InflationSpec(cycle(5), (2, 0, 1, 1, 1)), [(0, 1)])

    def test_non_cover_rejected(self):
        with pytest.raises(ValueError):
            lift_cover(InflationSpec(cycle(5), (1,) * 5), [(0, 1)])

    def test_size_identity_randomised(self):
        rng = SplitMix64(99)
        done = 0
        while done < 200:
            n = 2 + rng.randrange(7)
            base = random_graph(n, 30 + rng.randrange(60), rng)
            mult = tuple(1 + rng.randrange(3) for _ in range(n))
            spec = InflationSpec(base, mult)
            from hadwiger2.cliques import maximal_cliques
            from hadwiger2.graphs import bits

            cliques = [tuple(bits(m)) for m in maximal_cliques(base)]
            rng.shuffle(cliques)
            cover = []
            seen = set()
            for c in cliques:
                if not set(c) <= seen:
                    cover.append(c)
                    seen.update(c)
            if seen != set(range(n)):
                continue
            lifted = lift_cover(spec, cover)
            assert len(lifted) == len(cover)
            assert sum(map(len, lifted)) == spec.expanded_n - n + sum(map(len, cover))
            g = inflate(spec)
            union = set()
            for c in lifted:
                assert is_clique(g, c)
                union.update(c)
            assert union == set(range(spec.expanded_n))
            done += 1

    def test_certificate_lift_preserves_bound(self):
        host = generalized_kneser_geq(5, 2, 1)
        cert = kneser_certificate(5, 2, 1, 0)
        rng = SplitMix64(5)
        for _ in range(10):
            mult = tuple(1 + rng.randrange(3) for _ in range(10))
            spec = InflationSpec(host, mult)
            lifted = lift_certificate(spec, cert)
            assert lifted.bound == cert.bound
            assert verify_certificate(inflate(spec), lifted)

    def test_theta_f_invariance_uniform(self):
        # Uniform proper inflations keep both the certified upper bound and
        # the omega-based lower bound, pinning theta_f at the same value.
        for host, cert in [
            (cycle(5), CliqueFamilyCertificate(tuple(cycle(5).edges()), Fraction(5, 2))),
            (generalized_kneser_geq(5, 2, 1), kneser_certificate(5, 2, 1, 0)),
        ]:
            for m in (1, 2, 3):
                spec = InflationSpec(host, (m,) * host.n)
                g = inflate(spec)
                lifted = lift_certificate(spec, cert)
                assert verify_certificate(g, lifted)
                assert theta_f_lower_via_omega(g) == cert.bound

    def test_inflated_clique_ratio_bound(self):
        # omega/|V| of any inflation is at least 1/bound for certified hosts.
        host = generalized_kneser_geq(5, 2, 1)
        cert = kneser_certificate(5, 2, 1, 0)
        rng = SplitMix64(17)
        for _ in range(15):
            mult = tuple(rng.randrange(4) for _ in range(10))
            if sum(mult) == 0:
                continue
            g = inflate(InflationSpec(host, mult))
            assert Fraction(brute_clique_number(g), g.n) >= 1 / cert.bound


class TestFourCover:
    def test_k6(self):
        cover = four_cover_check(complete(6))
        assert cover is not None
        assert sum(len(c) for c in cover) >= 8

    def test_c5(self):
        cover = four_cover_check(cycle(5))
        assert cover is not None
        assert sum(len(c) for c in cover) >= 7
        assert set().union(*[set(c) for c in cover]) == set(range(5))

    def test_higman_sims_complement_impossible(self, steiner_system):
        from hadwiger2.steiner import higman_sims

        gc = complement(higman_sims(steiner_system))
        assert four_cover_check(gc) is None

    def test_alpha_above_two_rejected(self):
        with pytest.raises(ValueError):
            four_cover_check(cycle(7))

    def test_c9_complement(self):
        cover = four_cover_check(complement(cycle(9)))
        assert cover is not None
        assert sum(len(c) for c in cover) >= 11


class TestGoodBad:
    def test_petersen_complement_partition(self):
        host = generalized_kneser_geq(5, 2, 1)
        cert = kneser_certificate(5, 2, 1, 0)
        part = good_bad_partition(host, cert)
        assert len(part.good) + len(part.bad) == host.edge_count
        assert classify_good_bad_outcome(host, part) == "d"

    def test_k4_trivial_certificate(self):
        g = complete(4)
        cert = CliqueFamilyCertificate(((0, 1, 2, 3),), Fraction(1))
        part = good_bad_partition(g, cert)
        assert len(part.good) == 6 and not part.bad
        assert classify_good_bad_outcome(g, part) == "a"

    def test_bound_three_rejected(self):
        g = complete(4)
        cert = CliqueFamilyCertificate(((0, 1, 2, 3),), Fraction(3))
        with pytest.raises(ValueError):
            good_bad_partition(g, cert)

    def test_odd_order_rejected(self):
        g = cycle(5)
        cert = CliqueFamilyCertificate(tuple(g.edges()), Fraction(5, 2))
        part = good_bad_partition(g, cert)
        with pytest.raises(ValueError):
            classify_good_bad_outcome(g, part)

    def test_hypotheses_hold_on_certified_small_hosts(self):
        # Certified bound < 3 partitions satisfy both structural hypotheses
        # (checked internally by good_bad_partition on every call).
        hosts = [
            (complete(6), CliqueFamilyCertificate((tuple(range(6)),), Fraction(1))),
            (generalized_kneser_geq(5, 2, 1), kneser_certificate(5, 2, 1, 0)),
            (
                generalized_kneser_geq(4, 2, 1),
                kneser_certificate(4, 2, 1, 0),
            ),
        ]
        for g, cert in hosts:
            part = good_bad_partition(g, cert)
            assert part.good | part.bad == frozenset(g.edges())


class TestTextFormat:
    def test_certificate_roundtrip(self):
        from hadwiger2.certificates import format_certificate, parse_certificate

        cert = kneser_certificate(5, 2, 1, 0)
        text = format_certificate(cert)
        assert text.splitlines()[0] == "theta_f 5/2"
        assert parse_certificate(text) == cert

    def test_cover4_roundtrip(self):
        from hadwiger2.certificates import format_cover4, parse_cover4

        cover = four_cover_check(cycle(5))
        text = format_cover4(cover)
        assert text.splitlines()[0] == "cover4"
        assert parse_cover4(text) == tuple(tuple(c) for c in cover)

    def test_parse_rejects_garbage(self):
        from hadwiger2.certificates import parse_certificate

        with pytest.raises(ValueError):
            parse_certificate("junk")
