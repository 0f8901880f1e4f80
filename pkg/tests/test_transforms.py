import random

import pytest

from diachromatic import (
    Digraph,
    DetachmentMap,
    Factorization,
    amalgamate_to_complete,
    check,
    complete_symmetric,
    cyclic_sequencing,
    directed_cycle,
    hamiltonian_cycle_factorization,
    hamiltonian_path_factorization,
    identify,
    induced_subdigraph,
    lexicographic_power,
    minimality_certificate,
    tournament_split,
    unfold_complete_to_cycle,
    verify_factorization,
    zykov_sum,
)


def random_digraph(rng, lo, hi, p=0.5):
    n = rng.randint(lo, hi)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph.of(n, arcs)


class TestZykovSum:
    def test_size_formula_on_random_instances(self):
        rng = random.Random(314159)
        for _ in range(100):
            base = random_digraph(rng, 1, 6)
            comps = [random_digraph(rng, 1, 4) for _ in range(base.order)]
            product, assignment = zykov_sum(base, comps)
            expected = sum(h.size for h in comps) + sum(
                comps[u].order * comps[v].order for (u, v) in base.arcs
            )
            assert product.size == expected
            assert product.order == sum(h.order for h in comps)
            # provenance is a bijection
            assert sorted(set(assignment.provenance)) == sorted(assignment.provenance)
            assert len(assignment.provenance) == product.order

    def test_single_vertex_components_reproduce_base(self):
        base = directed_cycle(6)
        product, _ = zykov_sum(base, [complete_symmetric(1)] * 6)
        assert product.arcs == base.arcs

    def test_uniform_triangles_over_hexagon(self):
        product, _ = zykov_sum(directed_cycle(6), [directed_cycle(3)] * 6)
        assert product.order == 18
        assert product.size == 6 * 3 + 6 * 9

    def test_empty_component_rejected(self):
        with pytest.raises(ValueError):
            zykov_sum(directed_cycle(2), [Digraph.of(0, []), directed_cycle(2)])


class TestLexicographicPower:
    def test_first_power(self):
        d, _ = lexicographic_power(directed_cycle(6), directed_cycle(3), 1)
        assert d.order == 18 and d.size == 72

    def test_second_power(self):
        d, assignments = lexicographic_power(directed_cycle(6), directed_cycle(3), 2)
        assert d.order == 54 and d.size == 702
        assert len(assignments) == 2

    def test_triangle_squared(self):
        d, _ = lexicographic_power(directed_cycle(3), directed_cycle(3), 1)
        assert d.order == 9 and d.size == 3 * 3 + 3 * 9

    def test_power_zero_rejected(self):
        with pytest.raises(ValueError):
            lexicographic_power(directed_cycle(3), directed_cycle(3), 0)


class TestIdentify:
    def test_antipodal_on_hexagon(self):
        merged, dmap = identify(directed_cycle(6), 0, 3)
        assert merged.order == 5 and merged.size == 6
        assert dmap.mapping[3] == 0

    def test_adjacent_rejected(self):
        with pytest.raises(ValueError, match="arc joins"):
            identify(directed_cycle(6), 0, 1)

    def test_two_cycle_rejected(self):
        with pytest.raises(ValueError, match="2-cycle"):
            identify(complete_symmetric(3), 0, 1)

    def test_shared_out_neighbor_rejected(self):
        d = Digraph.of(3, [(0, 2), (1, 2)])
        with pytest.raises(ValueError, match="out-neighbor"):
            identify(d, 0, 1)

    def test_shared_in_neighbor_rejected(self):
        d = Digraph.of(3, [(2, 0), (2, 1)])
        with pytest.raises(ValueError, match="in-neighbor"):
            identify(d, 0, 1)

    def test_size_always_preserved(self):
        rng = random.Random(8)
        done = 0
        while done < 25:
            d = random_digraph(rng, 4, 8, p=0.25)
            pairs = [
                (u, v)
                for u in range(d.order)
                for v in range(u + 1, d.order)
            ]
            for (u, v) in pairs:
                try:
                    merged, _ = identify(d, u, v)
                except ValueError:
                    continue
                assert merged.size == d.size
                done += 1
                break


class TestUnfold:
    @pytest.mark.parametrize("k", range(3, 13))
    def test_unfold_properties(self, k):
        u = unfold_complete_to_cycle(k)
        assert u.cycle.order == k * (k - 1)
        report = check(u.cycle, u.coloring)
        assert report.complete and report.acyclic and report.balanced
        sizes = [len(u.coloring.class_of(c)) for c in range(1, k + 1)]
        assert sizes == [k - 1] * k
        assert minimality_certificate(u.cycle, u.coloring)
        # fibers of the detachment are independent sets (validated on build,
        # re-checked here directly)
        for target in range(k):
            fiber = u.detachment.fiber(target)
            sub, _ = induced_subdigraph(u.cycle, fiber)
            assert sub.size == 0

    def test_k5_reaches_twenty(self):
        assert unfold_complete_to_cycle(5).cycle.order == 20


class TestAmalgamate:
    @pytest.mark.parametrize("k", (3, 4, 5))
    def test_roundtrip_from_unfold(self, k):
        u = unfold_complete_to_cycle(k)
        out = amalgamate_to_complete(u.cycle)
        assert out.found and out.exhaustive
        assert out.detachment.target.arcs == complete_symmetric(k).arcs

    def test_wrong_size_is_definitive(self):
        out = amalgamate_to_complete(directed_cycle(5))
        assert not out.found and out.exhaustive

    def test_complete_digraph_maps_to_itself(self):
        out = amalgamate_to_complete(complete_symmetric(4))
        assert out.found
        assert out.detachment.target.order == 4
        assert sorted(out.detachment.mapping) == [0, 1, 2, 3]

    def test_budget_exhaustion_is_flagged(self):
        u = unfold_complete_to_cycle(5)
        out = amalgamate_to_complete(u.cycle, budget=5)
        assert not out.found and not out.exhaustive


class TestDetachmentMap:
    def test_rejects_non_exact_map(self):
        # merging adjacent vertices of a triangle loses an arc
        with pytest.raises(ValueError):
            DetachmentMap(directed_cycle(3), directed_cycle(2), (0, 1, 0))

    def test_rejects_non_surjective(self):
        with pytest.raises(ValueError):
            DetachmentMap(directed_cycle(3), directed_cycle(3), (0, 1, 0))


class TestCycleFactorization:
    def test_triangle_pair(self):
        f = hamiltonian_cycle_factorization(3)
        assert f.q == 2
        arcsets = sorted(tuple(sorted(h.arcs)) for h in f.factors)
        assert arcsets == [
            tuple(sorted({(0, 1), (1, 2), (2, 0)})),
            tuple(sorted({(0, 2), (2, 1), (1, 0)})),
        ]

    @pytest.mark.parametrize("n", (3, 5, 7, 9))
    def test_odd_orders(self, n):
        f = hamiltonian_cycle_factorization(n)
        assert f.q == n - 1
        assert verify_factorization(f).ok
        for h in f.factors:
            assert h.size == n
            assert all(h.out_degree(v) == 1 and h.in_degree(v) == 1 for v in range(n))

    @pytest.mark.parametrize("n", (8, 10))
    def test_even_orders_by_search(self, n):
        f = hamiltonian_cycle_factorization(n)
        assert f.q == n - 1
        assert verify_factorization(f).ok

    @pytest.mark.parametrize("n", (4, 6))
    def test_impossible_orders_rejected(self, n):
        with pytest.raises(ValueError, match="no factorization"):
            hamiltonian_cycle_factorization(n)

    def test_sizes_partition(self):
        for n in (3, 5, 7):
            f = hamiltonian_cycle_factorization(n)
            assert sum(h.size for h in f.factors) == n * (n - 1)


class TestPathFactorization:
    def test_two(self):
        f = hamiltonian_path_factorization(2)
        arcsets = sorted(tuple(h.arcs) for h in f.factors)
        assert arcsets == [((0, 1),), ((1, 0),)]

    def test_four_is_translates_of_0132(self):
        f = hamiltonian_path_factorization(4)
        assert f.factors[0].arc_list == ((0, 1), (1, 3), (3, 2))
        assert verify_factorization(f).ok
        assert sum(h.size for h in f.factors) == 12

    def test_odd_unsupported(self):
        with pytest.raises(ValueError, match="unsupported"):
            hamiltonian_path_factorization(5)

    @pytest.mark.parametrize("n", (2, 4, 6, 8, 12))
    def test_even_orders(self, n):
        f = hamiltonian_path_factorization(n)
        assert f.q == n
        assert verify_factorization(f).ok

    @pytest.mark.parametrize("n", (2, 4, 6, 8, 10, 12))
    def test_sequencing_partial_sums_distinct(self, n):
        seq = cyclic_sequencing(n)
        assert sorted(seq) == list(range(n))
        sums = []
        total = 0
        for x in seq:
            total = (total + x) % n
            sums.append(total)
        assert len(set(sums)) == n


class TestVerifyFactorization:
    def test_duplicate_arcs_reported(self):
        tri = directed_cycle(3)
        report = verify_factorization(Factorization(3, (tri, tri)))
        assert not report.ok
        assert report.duplicate_arcs == ((0, 1), (1, 2), (2, 0))

    def test_missing_arcs_reported(self):
        f = Factorization(4, (tournament_split(4).factors[0],))
        report = verify_factorization(f)
        assert not report.ok
        assert len(report.missing_arcs) == 6

    def test_relabel_names(self):
        f = hamiltonian_cycle_factorization(5)
        assert f.relabel_name(1, 0) == (1, 1)
        assert f.relabel_name(4, 2) == (3, 4)

    def test_generated_factorizations_always_verify(self):
        for f in (
            tournament_split(5),
            hamiltonian_cycle_factorization(7),
            hamiltonian_path_factorization(6),
        ):
            assert verify_factorization(f).ok
