"""Monomial digraphs on GF(q) x GF(q) with dense bitset adjacency.

The vertex (x1, x2) has index code(x1) * q + code(x2); the adjacency
matrix is stored as one little-endian bitset row (a bytes object) per
source vertex, so arc tests are single bit lookups and whole-row
comparisons are memcmp. Rows are immutable and the digraph is safe to
share across workers.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterator

from . import caps
from .errors import CapExceeded, InvalidExponent
from .field import FieldCtx

Vertex = tuple[int, int]

# bit positions set in each byte value, for fast row scans
_BYTE_BITS = tuple(tuple(b for b in range(8) if (v >> b) & 1) for v in range(256))


def normalize_exponent(e: int, q: int) -> int:
    """Map e >= 1 into {1, ..., q-1}; x^e = x^normalize(e) on GF(q)."""
    if e < 1:
        raise InvalidExponent(f"exponent must be >= 1, got {e}")
    return 1 + (e - 1) % (q - 1)


class MonomialDigraph:
    """D(q; m, n): arc (x1,x2) -> (y1,y2) iff x2 + y2 = x1^m * y1^n.

    Instances come from build_digraph or converse(); rows is the finished
    adjacency, one bitset per source index.
    """

    def __init__(self, ctx: FieldCtx, m: int, n: int, rows: tuple[bytes, ...]):
        self.ctx = ctx
        self.m = m
        self.n = n
        self.rows = rows
        self.q = ctx.q
        self.order = ctx.q * ctx.q

    # -- vertex indexing --

    def vertex_index(self, v: Vertex) -> int:
        return v[0] * self.q + v[1]

    def vertex_at(self, i: int) -> Vertex:
        return divmod(i, self.q)

    def vertices(self) -> Iterator[Vertex]:
        q = self.q
        return ((x1, x2) for x1 in range(q) for x2 in range(q))

    # -- arc queries --

    def has_arc_index(self, i: int, j: int) -> bool:
        return bool(self.rows[i][j >> 3] >> (j & 7) & 1)

    def has_arc(self, u: Vertex, v: Vertex) -> bool:
        return self.has_arc_index(self.vertex_index(u), self.vertex_index(v))

    def out_indices(self, i: int) -> list[int]:
        out = []
        for pos, byte in enumerate(self.rows[i]):
            if byte:
                base = pos << 3
                out.extend(base + b for b in _BYTE_BITS[byte])
        return out

    def out_neighbors(self, u: Vertex) -> list[Vertex]:
        """Targets of u, ordered by vertex index; always exactly q of them."""
        return [self.vertex_at(j) for j in self.out_indices(self.vertex_index(u))]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i in range(self.order):
            for j in self.out_indices(i):
                yield (i, j)

    @cached_property
    def arc_count(self) -> int:
        return sum(int.from_bytes(row, "little").bit_count() for row in self.rows)

    # -- loops --

    def loop_indices(self) -> list[int]:
        return [i for i in range(self.order) if self.has_arc_index(i, i)]

    def loop_vertices(self) -> list[Vertex]:
        """Vertices carrying loops, sorted by index; always exactly q."""
        return [self.vertex_at(i) for i in self.loop_indices()]

    def in_index_lists(self) -> list[list[int]]:
        """Sources per target index (the transposed adjacency as lists)."""
        incoming: list[list[int]] = [[] for _ in range(self.order)]
        for i in range(self.order):
            for j in self.out_indices(i):
                incoming[j].append(i)
        return incoming

    def converse(self) -> "MonomialDigraph":
        """Arc-reversed digraph; parameters recorded as (n, m)."""
        nbytes = len(self.rows[0])
        cols = [bytearray(nbytes) for _ in range(self.order)]
        for i in range(self.order):
            ibyte, ibit = i >> 3, 1 << (i & 7)
            for j in self.out_indices(i):
                cols[j][ibyte] |= ibit
        return MonomialDigraph(self.ctx, self.n, self.m, tuple(bytes(c) for c in cols))

    def same_arcs(self, other: "MonomialDigraph") -> bool:
        return self.order == other.order and self.rows == other.rows

    def __repr__(self) -> str:
        return f"D({self.q};{self.m},{self.n})"

    def to_dot(self) -> str:
        """DOT text, one node line per vertex and one edge line per arc,
        both sorted by index; byte-identical across runs."""
        if self.q > caps.MAX_DOT_ORDER:
            raise CapExceeded(f"DOT export capped at q <= {caps.MAX_DOT_ORDER}")
        def label(i: int) -> str:
            x1, x2 = self.vertex_at(i)
            return f'"({x1},{x2})"'
        lines = [f'digraph "D_{self.q}_{self.m}_{self.n}" {{']
        lines.extend(f"  {label(i)};" for i in range(self.order))
        lines.extend(f"  {label(i)} -> {label(j)};" for i, j in self.arcs())
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_digraph(ctx: FieldCtx, m: int, n: int,
                  max_q: int = caps.MAX_DIGRAPH_ORDER) -> MonomialDigraph:
    """Construct D(q; m, n); exponents are normalized into {1, ..., q-1}.

    Iterates (x1, x2, y1) and solves y2 = x1^m * y1^n - x2, so construction
    is O(q^3) rather than a q^4 filter.
    """
    q = ctx.q
    if q > max_q:
        raise CapExceeded(f"q = {q} exceeds dense-matrix cap {max_q}")
    m = normalize_exponent(m, q)
    n = normalize_exponent(n, q)
    order = q * q
    nbytes = (order + 7) >> 3
    rows = []
    if ctx.k == 1:
        pm = [pow(x, m, q) for x in range(q)]
        pn = [pow(y, n, q) for y in range(q)]
        for x1 in range(q):
            prods = [pm[x1] * pn[y1] % q for y1 in range(q)]
            for x2 in range(q):
                row = bytearray(nbytes)
                for y1 in range(q):
                    t = y1 * q + (prods[y1] - x2) % q
                    row[t >> 3] |= 1 << (t & 7)
                rows.append(bytes(row))
    else:
        pm = [ctx.pow(x, m) for x in range(q)]
        pn = [ctx.pow(y, n) for y in range(q)]
        for x1 in range(q):
            prods = [ctx.mul(pm[x1], pn[y1]) for y1 in range(q)]
            for x2 in range(q):
                row = bytearray(nbytes)
                for y1 in range(q):
                    t = y1 * q + ctx.sub(prods[y1], x2)
                    row[t >> 3] |= 1 << (t & 7)
                rows.append(bytes(row))
    return MonomialDigraph(ctx, m, n, tuple(rows))
