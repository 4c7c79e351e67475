"""Region-graph invariants, canonical codes, and isomorphism."""

import random
from itertools import permutations

import pytest

from bcontact.enumeration import enum_equicolored_trees, enum_torus_classes
from bcontact.oracle import brute_force_isomorphic
from bcontact.region_graph import (
    InvalidRegionGraphError,
    RegionGraph,
    are_isomorphic,
    canonical_code,
    validate,
)


def graph(signs, edges, genera=None):
    genera = genera or [0] * len(signs)
    return RegionGraph(
        [(i, s, g) for i, (s, g) in enumerate(zip(signs, genera))], edges
    )


def path(signs):
    return graph(signs, [(i, i + 1) for i in range(len(signs) - 1)])


def star(center_sign, leaves):
    return graph([center_sign] + [-center_sign] * leaves, [(0, i + 1) for i in range(leaves)])


def permutations_isomorphic(g1, g2):
    """Exhaustive check over every vertex bijection; test-local oracle."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    ids1, ids2 = list(g1.vertex_ids), list(g2.vertex_ids)
    edges1 = sorted(g1.edges)
    for perm in permutations(ids2):
        mapping = dict(zip(ids1, perm))
        if any(
            g1.sign_of(v) != g2.sign_of(mapping[v])
            or g1.genus_of(v) != g2.genus_of(mapping[v])
            for v in ids1
            ):
            continue
        mapped = sorted(
            (min(mapping[a], mapping[b]), max(mapping[a], mapping[b])) for a, b in edges1
        )
        if mapped == sorted(g2.edges):
            return True
    return False


def shuffled(g, rng):
    ids = list(g.vertex_ids)
    images = ids[:]
    rng.shuffle(images)
    return g.relabeled(dict(zip(ids, images)))


class TestValidate:
    def test_single_edge_is_ok(self):
        assert validate(path([1, -1])) is None

    def test_like_signed_edge_is_improper_coloring(self):
        violation = validate(path([1, 1]))
        assert violation is not None and violation.rule == "improper coloring"

    def test_two_independent_cycles_break_edge_count(self):
        g = graph([1, -1, 1, -1], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)])
        violation = validate(g)
        assert violation is not None and violation.rule == "edge count"

    def test_self_loop(self):
        g = graph([1, -1], [(0, 1), (0, 0)])
        violation = validate(g)
        assert violation is not None and violation.rule == "self-loop"

    def test_disconnected(self):
        g = RegionGraph([(0, 1, 0), (1, -1, 0), (2, 1, 0), (3, -1, 0)], [(0, 1), (2, 3)])
        violation = validate(g)
        assert violation is not None and violation.rule == "disconnected"

    def test_genus_sum_capped(self):
        g = graph([1, -1], [(0, 1)], genera=[1, 1])
        violation = validate(g)
        assert violation is not None and violation.rule == "genus sum"

    def test_unknown_edge_endpoint(self):
        g = RegionGraph([(0, 1, 0), (1, -1, 0)], [(0, 5)])
        violation = validate(g)
        assert violation is not None and violation.rule == "malformed"


class TestCanonicalCode:
    def test_relabeling_invariance_on_reversed_path(self):
        g1 = path([1, -1, 1, -1])
        g2 = g1.relabeled({0: 3, 1: 2, 2: 1, 3: 0})
        assert canonical_code(g1) == canonical_code(g2)

    def test_swap_invariance_only_with_flag(self):
        g1 = path([1, -1, 1, -1])
        g2 = path([-1, 1, -1, 1])
        assert canonical_code(g1, modulo_swap=True) == canonical_code(g2, modulo_swap=True)
        # The path has a color-exchanging reversal, so the codes agree even
        # without the flag; a star has none.
        assert canonical_code(star(1, 3), True) == canonical_code(star(-1, 3), True)
        assert canonical_code(star(1, 3)) != canonical_code(star(-1, 3))

    def test_path_and_star_differ(self):
        p = path([1, -1, 1, -1])
        s = graph([1, -1, -1, -1], [(0, 1), (0, 2), (0, 3)])
        assert not permutations_isomorphic(p, s)
        assert canonical_code(p) != canonical_code(s)

    def test_rejects_invalid_graph(self):
        with pytest.raises(InvalidRegionGraphError):
            canonical_code(path([1, 1]))

    def test_hundred_random_permutations(self):
        rng = random.Random(20260810)
        pool = enum_equicolored_trees(3) + enum_equicolored_trees(4)
        pool += [d.graph for d in enum_torus_classes(5, 2)]
        for g in pool:
            code = canonical_code(g)
            code_swap = canonical_code(g, modulo_swap=True)
            for _ in range(100):
                h = shuffled(g, rng)
                assert canonical_code(h) == code
                assert canonical_code(h, modulo_swap=True) == code_swap

    def test_deterministic_across_calls(self):
        g = path([1, -1, 1, -1, 1, -1])
        assert canonical_code(g) == canonical_code(g)


class TestAreIsomorphic:
    def test_identity_after_random_permutation(self):
        rng = random.Random(7)
        for g in enum_equicolored_trees(4):
            assert are_isomorphic(g, shuffled(g, rng))

    def test_path_vs_double_star_six_vertices(self):
        p = path([1, -1, 1, -1, 1, -1])
        double_star = graph(
            [1, -1, -1, -1, 1, 1], [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
        )
        assert validate(double_star) is None
        assert not are_isomorphic(p, double_star)
        assert not brute_force_isomorphic(p, double_star)

    def test_parallel_edges_distinguish(self):
        doubled = graph([1, -1], [(0, 1), (0, 1)])
        single = path([1, -1])
        assert not are_isomorphic(doubled, single)

    def test_equivalence_relation_on_samples(self):
        rng = random.Random(99)
        reps = enum_equicolored_trees(4)[:6]
        sample = [shuffled(g, rng) for g in reps for _ in range(3)]
        for a in sample:
            assert are_isomorphic(a, a)
        for _ in range(200):
            a, b, c = rng.choice(sample), rng.choice(sample), rng.choice(sample)
            assert are_isomorphic(a, b) == are_isomorphic(b, a)
            if are_isomorphic(a, b) and are_isomorphic(b, c):
                assert are_isomorphic(a, c)

    def test_agrees_with_bijection_search_up_to_eight_vertices(self):
        rng = random.Random(4242)
        pool = [
            g
            for n in (1, 2, 3, 4)
            for g in enum_equicolored_trees(n)
        ] + [d.graph for d in enum_torus_classes(6, 1) if d.graph.vertex_count <= 8]
        for _ in range(300):
            a = shuffled(rng.choice(pool), rng)
            b = shuffled(rng.choice(pool), rng)
            for mode in (False, True):
                assert are_isomorphic(a, b, mode) == brute_force_isomorphic(a, b, mode)

    def test_even_cycles_as_a_consequence_of_coloring(self):
        # Length of the unique cycle, found by stripping leaves; must be even
        # in every properly colored unicyclic graph the enumerator emits.
        for d in enum_torus_classes(6, 1):
            g = d.graph
            if g.edge_count != g.vertex_count:
                continue
            degrees = dict(g.degrees)
            alive = set(degrees)
            changed = True
            while changed:
                changed = False
                for v in list(alive):
                    if degrees[v] == 1:
                        alive.discard(v)
                        changed = True
                        for w in g.adjacency[v]:
                            if w in alive:
                                degrees[w] -= 1
            assert len(alive) % 2 == 0
