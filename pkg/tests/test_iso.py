"""Isomorphism tests. networkx's VF2 matcher serves as the independent
oracle for the search; certificates are double-checked by scanning all
vertex pairs directly."""
from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from mdlab.digraph import build_digraph
from mdlab.errors import CongruenceFailed, NotCoprime, SizeMismatch
from mdlab.field import extension_field, prime_field
from mdlab.iso import (
    EXHAUSTED,
    FOUND,
    NOT_ISOMORPHIC,
    brute_force_iso,
    certificate_from_json,
    certificate_to_json,
    color_refinement,
    find_power_map,
    fingerprint,
    frobenius_automorphism,
    permute_digraph,
    power_map_iso,
    unit_orbit,
    verify_iso,
)


def to_networkx(D):
    G = nx.DiGraph()
    G.add_nodes_from(range(D.order))
    G.add_edges_from(D.arcs())
    return G


def nx_isomorphic(D1, D2):
    return nx.algorithms.isomorphism.DiGraphMatcher(to_networkx(D1), to_networkx(D2)).is_isomorphic()


def violation_scan(D1, D2, mapping):
    """Oracle: first pair (u, v) in index order where adjacency disagrees."""
    for u in range(D1.order):
        for v in range(D1.order):
            if D1.has_arc_index(u, v) != D2.has_arc_index(mapping[u], mapping[v]):
                return (D1.vertex_at(u), D1.vertex_at(v))
    return None


class TestVerify:
    def test_identity_on_self(self):
        D = build_digraph(prime_field(5), 1, 2)
        assert verify_iso(D, D, tuple(range(D.order))).ok

    def test_power_map_example(self):
        ctx = prime_field(11)
        D1 = build_digraph(ctx, 1, 3)
        D2 = build_digraph(ctx, 7, 1)
        mapping = [0] * D1.order
        for x in range(11):
            for y in range(11):
                mapping[x * 11 + y] = pow(x, 3, 11) * 11 + y
        assert verify_iso(D1, D2, tuple(mapping)).ok

    def test_identity_fails_with_first_violation(self):
        D1 = build_digraph(prime_field(3), 1, 2)
        D2 = build_digraph(prime_field(3), 2, 1)
        ident = tuple(range(9))
        result = verify_iso(D1, D2, ident)
        assert not result.ok
        # independent scan confirms both that it is a violation and that
        # it is the first one in index order
        assert result.witness == violation_scan(D1, D2, ident) == ((1, 0), (2, 1))

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            verify_iso(build_digraph(prime_field(3), 1, 1),
                       build_digraph(prime_field(5), 1, 1),
                       tuple(range(9)))

    def test_rejects_non_permutation(self):
        D = build_digraph(prime_field(3), 1, 2)
        with pytest.raises(ValueError):
            verify_iso(D, D, (0,) * 9)


class TestPowerMap:
    def test_proof_mapping(self):
        ctx = prime_field(11)
        cert = power_map_iso(build_digraph(ctx, 1, 3), build_digraph(ctx, 7, 1), 3)
        assert cert[0] == 0
        # (2, 5) -> (2^3, 5) = (8, 5)
        assert cert[2 * 11 + 5] == 8 * 11 + 5

    def test_identity_certificate(self):
        D = build_digraph(prime_field(7), 2, 3)
        assert power_map_iso(D, D, 1) == tuple(range(D.order))

    def test_gf5_pair(self):
        ctx = prime_field(5)
        cert = power_map_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 3, 2), 3)
        assert verify_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 3, 2), cert).ok

    def test_not_coprime(self):
        ctx = prime_field(5)
        with pytest.raises(NotCoprime):
            power_map_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 1, 2), 2)

    def test_congruence_failure_carries_detail(self):
        ctx = prime_field(5)
        with pytest.raises(CongruenceFailed) as ei:
            power_map_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 1, 1), 1)
        assert ei.value.modulus == 4

    def test_find_power_map(self):
        ctx = prime_field(11)
        found = find_power_map(build_digraph(ctx, 1, 3), build_digraph(ctx, 7, 1))
        assert found is not None and found[0] == 3
        assert find_power_map(build_digraph(ctx, 1, 3), build_digraph(ctx, 1, 5)) is None

    def test_frobenius_nontrivial_on_extension_field(self):
        D = build_digraph(extension_field(3, 2), 1, 2)
        cert = frobenius_automorphism(D)
        assert verify_iso(D, D, cert).ok
        assert cert != tuple(range(D.order))

    def test_frobenius_identity_on_prime_field(self):
        D = build_digraph(prime_field(7), 1, 2)
        assert frobenius_automorphism(D) == tuple(range(D.order))


class TestFingerprint:
    def test_loop_count(self):
        assert fingerprint(build_digraph(prime_field(3), 1, 2)).loop_count == 3

    def test_relabel_invariance(self):
        D = build_digraph(prime_field(3), 1, 2)
        rng = random.Random(11)
        perm = list(range(D.order))
        rng.shuffle(perm)
        assert fingerprint(D) == fingerprint(permute_digraph(D, perm))

    def test_converse_pair_differs_in_pattern_counts(self):
        f1 = fingerprint(build_digraph(prime_field(3), 1, 2))
        f2 = fingerprint(build_digraph(prime_field(3), 2, 1))
        assert f1.loop_count == f2.loop_count
        assert f1.two_cycle_count == f2.two_cycle_count
        assert f1.pattern_counts != f2.pattern_counts

    def test_power_map_pairs_share_fingerprints(self):
        ctx = prime_field(5)
        assert fingerprint(build_digraph(ctx, 1, 2)) == fingerprint(build_digraph(ctx, 3, 2))

    def test_pattern_component_flagged_off_beyond_cap(self):
        fp = fingerprint(build_digraph(prime_field(17), 1, 2))
        assert fp.pattern_counts is None
        assert fp.loop_count == 17

    def test_refinement_histogram_is_canonical(self):
        D = build_digraph(prime_field(5), 1, 3)
        perm = list(reversed(range(D.order)))
        colors = color_refinement(D)
        colors_perm = color_refinement(permute_digraph(D, perm))
        assert sorted(colors) == sorted(colors_perm)


class TestBruteForce:
    def test_known_isomorphic_pair_found(self):
        ctx = prime_field(5)
        out = brute_force_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 3, 2))
        assert out.status == FOUND
        assert verify_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 3, 2),
                          out.certificate).ok

    def test_converse_pair_not_isomorphic(self):
        ctx = prime_field(3)
        out = brute_force_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 2, 1))
        assert out.status == NOT_ISOMORPHIC

    def test_self_is_found(self):
        D = build_digraph(prime_field(5), 2, 3)
        out = brute_force_iso(D, D)
        assert out.status == FOUND
        assert verify_iso(D, D, out.certificate).ok

    def test_budget_exhaustion(self):
        ctx = prime_field(5)
        out = brute_force_iso(build_digraph(ctx, 1, 2), build_digraph(ctx, 3, 2), budget=3)
        assert out.status == EXHAUSTED
        assert out.expansions == 4  # the run stops on the first over-budget trial

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            brute_force_iso(build_digraph(prime_field(3), 1, 1),
                            build_digraph(prime_field(5), 1, 1))

    @pytest.mark.parametrize("q,pairs", [
        (3, None),   # all pairs
        (4, None),
        (5, [((1, 2), (3, 2)), ((1, 2), (2, 1)), ((1, 1), (3, 3)), ((2, 2), (2, 4))]),
    ])
    def test_against_networkx_oracle(self, q, pairs):
        ctx = extension_field(2, 2) if q == 4 else prime_field(q)
        digs = {(m, n): build_digraph(ctx, m, n)
                for m in range(1, q) for n in range(1, q)}
        if pairs is None:
            pairs = list(combinations(sorted(digs), 2))
        for a, b in pairs:
            ours = brute_force_iso(digs[a], digs[b])
            assert ours.status in (FOUND, NOT_ISOMORPHIC)
            assert (ours.status == FOUND) == nx_isomorphic(digs[a], digs[b])

    def test_power_map_success_implies_searchable(self):
        ctx = prime_field(7)
        D1, D2 = build_digraph(ctx, 1, 5), build_digraph(ctx, 5, 1)
        assert find_power_map(D1, D2) is not None
        assert brute_force_iso(D1, D2).status == FOUND


class TestUnitOrbit:
    def test_gf5_doubleton(self):
        assert unit_orbit(5, 1, 2) == frozenset({(1, 2), (3, 2)})

    def test_gf3_singleton(self):
        assert unit_orbit(3, 1, 2) == frozenset({(1, 2)})

    def test_contains_seed(self):
        for q in (3, 4, 5, 7, 8, 9):
            for m in range(1, q):
                for n in range(1, q):
                    assert (m, n) in unit_orbit(q, m, n)

    def test_partition_matches_search(self):
        # orbits and exhaustive search agree on which digraphs coincide
        for q in (3, 4):
            ctx = extension_field(2, 2) if q == 4 else prime_field(q)
            digs = {(m, n): build_digraph(ctx, m, n)
                    for m in range(1, q) for n in range(1, q)}
            for a, b in combinations(sorted(digs), 2):
                same_orbit = unit_orbit(q, *a) == unit_orbit(q, *b)
                found = brute_force_iso(digs[a], digs[b]).status == FOUND
                assert same_orbit == found

    def test_invalid_exponent(self):
        from mdlab.errors import InvalidExponent
        with pytest.raises(InvalidExponent):
            unit_orbit(5, 0, 2)


class TestSharedInvariants:
    @pytest.mark.parametrize("p,k,m,n", [(3, 1, 1, 2), (5, 1, 2, 3), (7, 1, 1, 4),
                                         (2, 2, 1, 2), (3, 2, 2, 5)])
    def test_converse_pair_loop_and_two_cycle_counts(self, p, k, m, n):
        # two-cycles and loops are self-converse, so D(q;m,n) and D(q;n,m)
        # must agree on both even when they are not isomorphic
        ctx = extension_field(p, k)
        f1 = fingerprint(build_digraph(ctx, m, n))
        f2 = fingerprint(build_digraph(ctx, n, m))
        assert f1.loop_count == f2.loop_count
        assert f1.two_cycle_count == f2.two_cycle_count

    def test_certified_pair_has_equal_pattern_counts(self):
        # a verified isomorphism carries every subdigraph census with it,
        # including patterns beyond the fingerprint library
        from mdlab.patterns import Pattern, count_pattern
        ctx = prime_field(5)
        D1, D2 = build_digraph(ctx, 1, 2), build_digraph(ctx, 3, 2)
        assert find_power_map(D1, D2) is not None
        four_cycle = Pattern(4, frozenset({(0, 1), (1, 2), (2, 3), (3, 0)}))
        looped_path = Pattern(4, frozenset({(0, 0), (0, 1), (1, 2), (2, 3)}))
        for pat in (four_cycle, looped_path):
            assert count_pattern(D1, pat).subdigraphs == count_pattern(D2, pat).subdigraphs


class TestCertificateJson:
    def test_roundtrip(self):
        D = build_digraph(prime_field(3), 1, 2)
        cert = tuple(range(D.order))
        text = certificate_to_json(cert)
        assert text == "[0,1,2,3,4,5,6,7,8]"
        assert certificate_from_json(text, 9) == cert

    def test_rejects_bad_payload(self):
        with pytest.raises(ValueError):
            certificate_from_json("[0,0,1]", 3)
        with pytest.raises(ValueError):
            certificate_from_json('{"a":1}', 3)
