"""The Steiner system S(3,6,22) and the graphs it generates.

The system is built from the projective plane PG(2,4): 21 points, 21
lines of 5 points, plus an extra point oo = 21.  Blocks are the 21
extended lines (line plus oo) together with one of the three families of
56 pairwise-evenly-intersecting hyperovals.  The Steiner property (every
triple of points in exactly one block) is verified exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .constructions import _check, verify_srg
from .graphs import Graph, bits, induced_subgraph

# F4 in the polynomial basis with x^2 = x + 1: elements 0, 1, w=2, w^2=3.
# Addition is XOR; the multiplication table is fixed below.
_F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def _f4_mul(a: int, b: int) -> int:
    return _F4_MUL[a][b]


def _pg24_points() -> list[tuple[int, int, int]]:
    """Projective points over F4, normalised to leading coordinate 1."""
    pts = []
    for a in (0, 1):
        if a == 1:
            pts.extend((1, b, c) for b in range(4) for c in range(4))
    pts.extend((0, 1, c) for c in range(4))
    pts.append((0, 0, 1))
    assert len(pts) == 21
    return pts


def _pg24_lines(points) -> list[int]:
    """Lines as point bitmasks: [a:b:c] selects points with ax+by+cz = 0."""
    lines = []
    for coeff in points:  # dual coordinates run over the same 21 triples
        a, b, c = coeff
        mask = 0
        for i, (x, y, z) in enumerate(points):
            if _f4_mul(a, x) ^ _f4_mul(b, y) ^ _f4_mul(c, z) == 0:
                mask |= 1 << i
        assert mask.bit_count() == 5
        lines.append(mask)
    return lines


def _hyperovals(lines: list[int]) -> list[int]:
    """All 6-point sets meeting every line in 0 or 2 points (as bitmasks).

    Equivalently: all 6-arcs.  Found by depth-first extension of arcs
    (sets with no 3 collinear points).
    """
    out = []

    def extend(chosen: list[int], mask: int, start: int, line_counts: list[int]):
        if len(chosen) == 6:
            out.append(mask)
            return
        for p in range(start, 21):
            ok = True
            touched = []
            for li, lm in enumerate(lines):
                if lm >> p & 1:
                    if line_counts[li] == 2:
                        ok = False
                        break
                    touched.append(li)
            if not ok:
                continue
            for li in touched:
                line_counts[li] += 1
            chosen.append(p)
            extend(chosen, mask | (1 << p), p + 1, line_counts)
            chosen.pop()
            for li in touched:
                line_counts[li] -= 1

    extend([], 0, 0, [0] * 21)
    return out


def _even_family(hyperovals: list[int]) -> list[int]:
    """One maximal family of hyperovals pairwise meeting in 0 or 2 points.

    The compatibility graph (even intersection) splits into three
    components; each is a clique of 56 and any one yields a valid system.
    The component of the lexicographically least hyperoval is used.
    """
    hs = sorted(hyperovals)
    n = len(hs)
    _check(n == 168, f"expected 168 hyperovals in PG(2,4), got {n}")
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if (hs[i] & hs[j]).bit_count() % 2 == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    members = list(bits(seen))
    _check(len(members) == 56, "hyperoval family must have 56 members")
    for i in members:
        _check(
            all(adj[i] >> j & 1 for j in members if j != i),
            "hyperoval family must be pairwise even-intersecting",
        )
    return [hs[i] for i in members]


@dataclass(frozen=True)
class SteinerSystem:
    """The block set of S(3,6,22) over the point set 0..21."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check(len(self.blocks) == 77, "S(3,6,22) must have 77 blocks")
        masks = []
        for b in self.blocks:
            _check(len(b) == 6 and all(0 <= x <= 21 for x in b), "bad block")
            m = 0
            for x in b:
                m |= 1 << x
            _check(m.bit_count() == 6, "block with repeated points")
            masks.append(m)
        for triple in combinations(range(22), 3):
            tm = (1 << triple[0]) | (1 << triple[1]) | (1 << triple[2])
            hits = sum(1 for m in masks if m & tm == tm)
            _check(hits == 1, f"triple {triple} lies in {hits} blocks")

    def block_masks(self) -> list[int]:
        out = []
        for b in self.blocks:
            m = 0
            for x in b:
                m |= 1 << x
            out.append(m)
        return out


def steiner_3_6_22() -> SteinerSystem:
    """Build S(3,6,22) from PG(2,4) extended lines plus 56 hyperovals."""
    points = _pg24_points()
    lines = _pg24_lines(points)
    ovals = _even_family(_hyperovals(lines))
    oo = 21
    blocks = [tuple(sorted(bits(lm))) + (oo,) for lm in lines]
    blocks += [tuple(sorted(bits(om))) for om in ovals]
    blocks.sort()
    return SteinerSystem(tuple(blocks))


def mesner(sys: SteinerSystem) -> Graph:
    """Blocks of S(3,6,22), adjacent iff disjoint: srg(77,16,0,4)."""
    masks = sys.block_masks()
    edges = [
        (i, j)
        for i in range(77)
        for j in range(i + 1, 77)
        if masks[i] & masks[j] == 0
    ]
    g = Graph(77, edges)
    verify_srg(g, 77, 16, 0, 4, "mesner")
    return g


def gewirtz(sys: SteinerSystem, point: int = 21) -> Graph:
    """Blocks avoiding one point, adjacent iff disjoint: srg(56,10,0,2)."""
    if not 0 <= point <= 21:
        raise ValueError("point must be in 0..21")
    keep = [i for i, b in enumerate(sys.blocks) if point not in b]
    _check(len(keep) == 56, "gewirtz: expected 56 blocks avoiding the point")
    g = induced_subgraph(mesner(sys), keep)
    verify_srg(g, 56, 10, 0, 2, "gewirtz")
    return g


def higman_sims(sys: SteinerSystem) -> Graph:
    """Mesner graph plus 22 point-vertices and one apex: srg(100,22,0,6).

    Vertices 0..76 are blocks, 77..98 are the points 0..21, and 99 is the
    apex adjacent to the 22 point-vertices.  A point-vertex is adjacent to
    the blocks containing it.
    """
    masks = sys.block_masks()
    edges = [
        (i, j)
        for i in range(77)
        for j in range(i + 1, 77)
        if masks[i] & masks[j] == 0
    ]
    for i, m in enumerate(masks):
        for x in bits(m):
            edges.append((i, 77 + x))
    for x in range(22):
        edges.append((77 + x, 99))
    g = Graph(100, edges)
    verify_srg(g, 100, 22, 0, 6, "higman_sims")
    return g
