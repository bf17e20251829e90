"""Digraph construction tests: a full golden fixture for D(3;1,2) and a
brute-force arc-equation oracle for everything else."""
from __future__ import annotations

import pytest

from mdlab.errors import CapExceeded, InvalidExponent
from mdlab.digraph import build_digraph
from mdlab.field import extension_field, prime_field

# All 27 arcs of D(3;1,2), listed vertex by vertex; each entry was
# hand-checked against the arc equation x2 + y2 = x1 * y1^2 over GF(3).
D312_ARCS = {
    (1, 0): [(0, 0), (2, 1), (1, 1)],
    (0, 0): [(1, 0), (2, 0), (0, 0)],
    (2, 0): [(0, 0), (2, 2), (1, 2)],
    (2, 1): [(1, 1), (0, 2), (2, 1)],
    (1, 1): [(1, 0), (2, 0), (0, 2)],
    (2, 2): [(1, 0), (2, 0), (0, 1)],
    (1, 2): [(2, 2), (0, 1), (1, 2)],
    (0, 2): [(2, 1), (1, 1), (0, 1)],
    (0, 1): [(2, 2), (1, 2), (0, 2)],
}


def arcs_by_equation(ctx, m, n):
    """Independent oracle: filter all q^4 ordered vertex pairs."""
    arcs = set()
    for x1 in ctx.elements():
        for x2 in ctx.elements():
            for y1 in ctx.elements():
                for y2 in ctx.elements():
                    lhs = ctx.add(x2, y2)
                    rhs = ctx.mul(ctx.pow(x1, m), ctx.pow(y1, n))
                    if lhs == rhs:
                        arcs.add(((x1, x2), (y1, y2)))
    return arcs


def arc_set(D):
    return {(D.vertex_at(i), D.vertex_at(j)) for i, j in D.arcs()}


class TestGoldenFixture:
    def test_exact_arc_set(self):
        D = build_digraph(prime_field(3), 1, 2)
        expected = {(u, v) for u, outs in D312_ARCS.items() for v in outs}
        assert arc_set(D) == expected
        assert D.arc_count == 27

    def test_named_arcs(self):
        D = build_digraph(prime_field(3), 1, 2)
        assert D.has_arc((2, 2), (1, 0))
        assert not D.has_arc((1, 0), (2, 2))
        assert D.has_arc((1, 2), (1, 2))

    def test_loops(self):
        D = build_digraph(prime_field(3), 1, 2)
        assert D.loop_vertices() == [(0, 0), (1, 2), (2, 1)]

    def test_out_neighbors(self):
        D = build_digraph(prime_field(3), 1, 2)
        assert D.out_neighbors((0, 0)) == [(0, 0), (1, 0), (2, 0)]
        assert D.out_neighbors((1, 0)) == [(0, 0), (1, 1), (2, 1)]


class TestConstruction:
    def test_exponent_normalization(self):
        ctx = prime_field(3)
        assert build_digraph(ctx, 1, 4).same_arcs(build_digraph(ctx, 1, 2))
        assert build_digraph(ctx, 1, 4).n == 2
        ctx11 = prime_field(11)
        assert build_digraph(ctx11, 13, 3).same_arcs(build_digraph(ctx11, 3, 3))

    def test_invalid_exponent(self):
        with pytest.raises(InvalidExponent):
            build_digraph(prime_field(3), 1, 0)
        with pytest.raises(InvalidExponent):
            build_digraph(prime_field(3), -1, 2)

    def test_matrix_cap(self):
        with pytest.raises(CapExceeded):
            build_digraph(prime_field(191), 1, 1)

    @pytest.mark.parametrize("p,k,m,n", [(3, 1, 1, 2), (5, 1, 2, 3), (2, 2, 1, 1),
                                         (7, 1, 3, 4), (3, 2, 2, 5)])
    def test_matches_equation_oracle(self, p, k, m, n):
        ctx = extension_field(p, k)
        D = build_digraph(ctx, m, n)
        assert arc_set(D) == arcs_by_equation(ctx, m, n)


class TestRegularity:
    @pytest.mark.parametrize("p,k", [(3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (13, 1)])
    def test_degrees_arcs_loops(self, p, k):
        ctx = extension_field(p, k)
        q = ctx.q
        for m in range(1, q) if q <= 7 else [1, q - 1]:
            for n in range(1, q) if q <= 7 else [2, q - 2]:
                D = build_digraph(ctx, m, n)
                assert D.arc_count == q**3
                assert len(D.loop_vertices()) == q
                indeg = [0] * D.order
                for i in range(D.order):
                    outs = D.out_indices(i)
                    assert len(outs) == q
                    for j in outs:
                        indeg[j] += 1
                assert all(d == q for d in indeg)


class TestConverse:
    def test_involution(self):
        D = build_digraph(prime_field(5), 1, 2)
        assert D.converse().converse().same_arcs(D)

    def test_parameter_swap_identity(self):
        ctx3 = prime_field(3)
        assert build_digraph(ctx3, 1, 2).converse().same_arcs(build_digraph(ctx3, 2, 1))
        ctx11 = prime_field(11)
        assert build_digraph(ctx11, 1, 3).converse().same_arcs(build_digraph(ctx11, 3, 1))

    def test_metadata_records_swapped_params(self):
        C = build_digraph(prime_field(5), 1, 3).converse()
        assert (C.m, C.n) == (3, 1)

    @pytest.mark.parametrize("p,k,m,n", [(3, 1, 2, 2), (5, 1, 3, 2), (2, 2, 1, 2), (7, 1, 5, 1)])
    def test_converse_equals_swapped_build(self, p, k, m, n):
        ctx = extension_field(p, k)
        assert build_digraph(ctx, m, n).converse().same_arcs(build_digraph(ctx, n, m))


class TestLoopVertices:
    def test_odd_q_formula(self):
        # loops solve 2*s = u^(m+n); oracle here is the formula, the
        # implementation scans the adjacency diagonal
        ctx = prime_field(11)
        D = build_digraph(ctx, 1, 3)
        half = ctx.inv(2)
        expected = sorted((u, ctx.mul(ctx.pow(u, 4), half)) for u in range(11))
        assert D.loop_vertices() == expected

    def test_even_q_zero_column(self):
        ctx = extension_field(2, 2)
        D = build_digraph(ctx, 1, 1)
        assert D.loop_vertices() == [(0, s) for s in range(4)]


class TestDotExport:
    def test_counts_and_header(self):
        D = build_digraph(prime_field(3), 1, 2)
        dot = D.to_dot()
        lines = dot.splitlines()
        assert lines[0] == 'digraph "D_3_1_2" {'
        assert lines[-1] == "}"
        assert sum(1 for l in lines if "->" in l) == 27
        assert sum(1 for l in lines if l.endswith(";") and "->" not in l) == 9

    def test_deterministic(self):
        a = build_digraph(prime_field(3), 1, 2).to_dot()
        b = build_digraph(prime_field(3), 1, 2).to_dot()
        assert a == b
        assert a.encode() == b.encode()

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build_digraph(prime_field(17), 1, 1).to_dot()
