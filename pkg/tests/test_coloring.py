import random

import pytest

from diachromatic import (
    Coloring,
    ColorScheme,
    check,
    class_pair_matrix,
    complete_color_bound,
    complete_color_bound_floor,
    complete_symmetric,
    directed_cycle,
    minimality_certificate,
    unfold_complete_to_cycle,
    Digraph,
)


def random_colored(rng, max_order=8):
    n = rng.randint(1, max_order)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4]
    d = Digraph.of(n, arcs)
    k = rng.randint(1, n)
    c = Coloring(k, tuple(rng.randint(1, k) for _ in range(n)))
    return d, c


class TestCheck:
    def test_singletons_on_k3(self):
        d = complete_symmetric(3)
        report = check(d, Coloring(3, (1, 2, 3)))
        assert report.proper and report.acyclic and report.complete
        assert report.harmonious and report.balanced

    def test_monochromatic_cycle(self):
        report = check(directed_cycle(6), Coloring(1, (1,) * 6))
        assert not report.proper and not report.acyclic
        assert report.witnesses["acyclic"]["cycle"]  # a concrete cycle
        assert len(report.witnesses["acyclic"]["cycle"]) == 6

    def test_unfold_coloring_is_complete_acyclic_balanced(self):
        u = unfold_complete_to_cycle(3)
        report = check(u.cycle, u.coloring)
        assert report.complete and report.acyclic and report.balanced

    def test_color_out_of_range(self):
        with pytest.raises(ValueError):
            Coloring(2, (1, 3))

    def test_partial_coloring_rejected(self):
        with pytest.raises(ValueError):
            check(directed_cycle(3), Coloring(2, (1, 2)))

    def test_missing_pair_witness(self):
        # two classes, arcs only one way around
        d = Digraph.of(2, [(0, 1)])
        report = check(d, Coloring(2, (1, 2)))
        assert not report.complete
        assert report.witnesses["complete"]["missing_pair"] == (2, 1)

    def test_harmonious_violation_witness(self):
        d = Digraph.of(4, [(0, 1), (2, 3)])
        report = check(d, Coloring(2, (1, 2, 1, 2)))
        assert not report.harmonious
        assert report.witnesses["harmonious"]["pair"] == (1, 2)
        assert len(report.witnesses["harmonious"]["arcs"]) == 2


class TestClassPairMatrix:
    def test_k3_singletons(self):
        m = class_pair_matrix(complete_symmetric(3), Coloring(3, (1, 2, 3)))
        assert all(m.entry(i, i) == 0 for i in (1, 2, 3))
        assert m.off_diagonal_range() == (1, 1)

    def test_antipodal_classes_on_hexagon(self):
        c = Coloring(3, (1, 2, 3, 1, 2, 3))
        m = class_pair_matrix(directed_cycle(6), c)
        assert m.entry(1, 2) == 2 and m.entry(2, 3) == 2 and m.entry(3, 1) == 2
        assert m.total == 6

    def test_total_equals_size(self):
        rng = random.Random(5)
        for _ in range(30):
            d, c = random_colored(rng)
            assert class_pair_matrix(d, c).total == d.size

    def test_consistency_with_check(self):
        rng = random.Random(11)
        for _ in range(60):
            d, c = random_colored(rng)
            report = check(d, c)
            lo, hi = class_pair_matrix(d, c).off_diagonal_range()
            if c.k > 1:
                assert report.complete == (lo >= 1)
            assert report.harmonious == (hi <= 1)


class TestProperties:
    def test_proper_implies_acyclic(self):
        rng = random.Random(99)
        seen_proper = 0
        for _ in range(300):
            d, c = random_colored(rng)
            report = check(d, c)
            if report.proper:
                seen_proper += 1
                assert report.acyclic
        assert seen_proper > 10

    def test_complete_and_harmonious_force_exact_size(self):
        rng = random.Random(4242)
        seen = 0
        for _ in range(400):
            d, c = random_colored(rng, max_order=5)
            report = check(d, c)
            if report.complete and report.harmonious and report.proper:
                seen += 1
                assert d.size == c.k * (c.k - 1)
                lo, hi = class_pair_matrix(d, c).off_diagonal_range()
                if c.k > 1:
                    assert (lo, hi) == (1, 1)
        assert seen > 3

    def test_certified_colorings_respect_arc_bound(self):
        for k in (3, 4, 5):
            u = unfold_complete_to_cycle(k)
            assert u.coloring.k <= complete_color_bound(u.cycle.size)


class TestCertificate:
    def test_unfold_is_minimal(self):
        u = unfold_complete_to_cycle(3)
        assert minimality_certificate(u.cycle, u.coloring)

    def test_seven_cycle_never_minimal_with_three_colors(self):
        c = Coloring(3, (1, 2, 3, 1, 2, 3, 1))
        assert not minimality_certificate(directed_cycle(7), c)


class TestBound:
    def test_values(self):
        assert complete_color_bound(72) == 9.0
        assert complete_color_bound(6) == 3.0
        assert complete_color_bound(0) == 1.0

    def test_floor_matches_float(self):
        for m in range(0, 2000):
            assert complete_color_bound_floor(m) == int(complete_color_bound(m))

    def test_monotone(self):
        values = [complete_color_bound(m) for m in range(500)]
        assert all(a <= b for a, b in zip(values, values[1:]))


class TestColorScheme:
    def test_flat_and_pair_roundtrip(self):
        scheme = ColorScheme((2, 3, 4))
        assert scheme.total == 9
        flat = [scheme.flat(i, l) for i in (1, 2, 3) for l in range(1, scheme.block_sizes[i - 1] + 1)]
        assert flat == list(range(1, 10))
        for color in range(1, 10):
            i, l = scheme.pair(color)
            assert scheme.flat(i, l) == color

    def test_range_errors(self):
        scheme = ColorScheme((2, 2))
        with pytest.raises(ValueError):
            scheme.flat(1, 3)
        with pytest.raises(ValueError):
            scheme.pair(5)
