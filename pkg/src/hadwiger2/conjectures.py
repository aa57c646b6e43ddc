"""Checkers and searchers for the conjecture objects: connected matchings,
connected dominating matchings, small-branch-set complete-graph models,
seagull packings, dominating edges, and unavoidable induced subgraphs.

All first-witness outputs break ties lexicographically on sorted vertex
indices, so results are deterministic; randomised searches take an
explicit seed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    InflationSpec,
    alpha_at_most_2,
    bits,
    complement,
    girth,
    independence_number_is_2,
    inflate,
    is_connected,
    induced_subgraph,
    vertex_connectivity,
)
from .iso import find_induced_c5, has_induced_subgraph, is_isomorphic
from .matching import Matching, matching_number
from .rng import SplitMix64


# ---------------------------------------------------------------------------
# Dominating edges and connected (dominating) matchings


def dominating_edge(g: Graph) -> tuple[int, int] | None:
    """First edge (lexicographic) whose endpoint neighbourhoods cover V."""
    full = g.full_mask
    for u in range(g.n):
        ru = g.row(u)
        for v in bits(ru >> (u + 1)):
            v += u + 1
            if ru | g.row(v) == full:
                return (u, v)
    return None


@dataclass(frozen=True)
class ConnectedMatching:
    """A matching whose edges are pairwise joined by at least one cross edge."""

    matching: Matching

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.matching.edges

    @property
    def size(self) -> int:
        return self.matching.size


def is_connected_matching(g: Graph, edges) -> bool:
    m = Matching(tuple(edges))
    if not m.is_matching_of(g):
        return False
    es = m.edges
    for i, (u, v) in enumerate(es):
        reach = g.row(u) | g.row(v)
        for x, y in es[i + 1:]:
            if not (reach >> x & 1 or reach >> y & 1):
                return False
    return True


def is_dominating_matching(g: Graph, edges) -> bool:
    m = Matching(tuple(edges))
    if not m.is_matching_of(g):
        return False
    uncovered = g.full_mask & ~m.covered()
    for u, v in m.edges:
        reach = g.row(u) | g.row(v)
        if uncovered & ~reach:
            return False
    return True


def is_cdm(g: Graph, edges) -> bool:
    return (
        len(tuple(edges)) > 0
        and is_connected_matching(g, edges)
        and is_dominating_matching(g, edges)
    )


def connected_matching_max(
    g: Graph, budget: int | None = None
) -> tuple[ConnectedMatching, bool]:
    """Largest connected matching; exact when the search completes.

    Branch and bound over edges in lexicographic order: a candidate edge
    must be disjoint from and adjacent to every chosen edge.  Returns the
    best matching found and an exactness flag (always True when the node
    budget, if any, was not exhausted).
    """
    edges = g.edges()
    reach = [g.row(u) | g.row(v) | (1 << u) | (1 << v) for u, v in edges]
    best: list[tuple[int, int]] = []
    nodes = 0
    exhausted = False

    def dfs(candidates: list[int], chosen: list) -> None:
        nonlocal best, nodes, exhausted
        if budget is not None and nodes > budget:
            exhausted = True
            return
        nodes += 1
        if len(chosen) > len(best):
            best = list(chosen)
        for pos, i in enumerate(candidates):
            if len(chosen) + len(candidates) - pos <= len(best):
                break
            u, v = edges[i]
            r = reach[i]
            mask = (1 << u) | (1 << v)
            nxt = [
                j
                for j in candidates[pos + 1:]
                if not mask & ((1 << edges[j][0]) | (1 << edges[j][1]))
                and (r >> edges[j][0] & 1 or r >> edges[j][1] & 1)
            ]
            chosen.append(edges[i])
            dfs(nxt, chosen)
            chosen.pop()

    dfs(list(range(len(edges))), [])
    return ConnectedMatching(Matching(tuple(best))), not exhausted


def connected_matching_number(g: Graph) -> int:
    cm, exact = connected_matching_max(g)
    assert exact
    return cm.size


class SearchBudgetExceeded(RuntimeError):
    """An exact search ran out of its node budget before deciding."""


def connected_dominating_matching(
    g: Graph, budget: int | None = None
) -> ConnectedMatching | None:
    """A non-empty connected dominating matching, or None if none exists.

    The search is violation-directed: once a first edge is fixed, any
    uncovered vertex non-adjacent to a chosen edge must become an endpoint
    of a later edge, so branching is restricted to the edges at the least
    such vertex.  This is exhaustive; with a node ``budget`` it raises
    SearchBudgetExceeded instead of running to completion.  Requires a
    connected host with independence number exactly 2.
    """
    if not is_connected(g):
        raise ValueError("connected dominating matchings need a connected host")
    if not independence_number_is_2(g):
        raise ValueError("host must have independence number exactly 2")
    e = dominating_edge(g)
    if e is not None:
        return ConnectedMatching(Matching((e,)))
    full = g.full_mask
    nodes = 0

    def violated(chosen: list, used: int) -> int:
        out = 0
        uncovered = full & ~used
        for u, v in chosen:
            out |= uncovered & ~(g.row(u) | g.row(v))
        return out

    def dfs(chosen: list, used: int) -> ConnectedMatching | None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded("CDM search budget exhausted")
        bad = violated(chosen, used)
        if not bad:
            return ConnectedMatching(Matching(tuple(chosen)))
        w = (bad & -bad).bit_length() - 1
        for x in bits(g.row(w) & ~used):
            u, v = min(w, x), max(w, x)
            reach = g.row(u) | g.row(v) | (1 << u) | (1 << v)
            if any(not (reach >> a & 1 or reach >> b & 1) for a, b in chosen):
                continue
            chosen.append((u, v))
            got = dfs(chosen, used | (1 << u) | (1 << v))
            chosen.pop()
            if got is not None:
                return got
        return None

    for first in g.edges():
        u, v = first
        got = dfs([first], (1 << u) | (1 << v))
        if got is not None:
            return got
    return None


def girth5_cdm_construct(spec: InflationSpec) -> ConnectedMatching:
    """Constructive CDM for a connected inflation whose base has a
    complement of girth at least 5.

    If the support of the inflation is C5-free the dominating-edge path
    applies; otherwise an induced 5-cycle abcde of the support is
    oriented so the clique of a is smallest and the clique of c no larger
    than d's, and the matching saturating a into e plus c into d is a
    connected dominating matching.  The result is re-verified before
    return.
    """
    if girth(complement(spec.base)) < 5:
        raise ValueError("base complement must have girth at least 5")
    g = inflate(spec)
    if g.n < 2:
        raise ValueError("expanded graph needs at least 2 vertices")
    if not is_connected(g):
        raise ValueError("expanded graph must be connected")
    support = [x for x in range(spec.base.n) if spec.mult[x] > 0]
    h = induced_subgraph(spec.base, support)
    c5 = find_induced_c5(h)
    if c5 is None:
        e = dominating_edge(g)
        if e is None:
            raise RuntimeError("C5-free support must yield a dominating edge")
        result = ConnectedMatching(Matching((e,)))
    else:
        cyc = [support[i] for i in c5]
        mult = spec.mult

        def orientations(c):
            a, b, cc, d, e = c
            out = []
            ring = [a, b, cc, d, e]
            for shift in range(5):
                rot = ring[shift:] + ring[:shift]
                out.append(tuple(rot))
                out.append(tuple([rot[0]] + list(reversed(rot[1:]))))
            return out

        candidates = [
            o
            for o in orientations(cyc)
            if mult[o[0]] == min(mult[x] for x in cyc)
            and mult[o[2]] <= mult[o[3]]
        ]
        a, b, c, d, e = min(candidates)
        ca = list(bits(spec.block(a)))
        ce = list(bits(spec.block(e)))
        cc = list(bits(spec.block(c)))
        cd = list(bits(spec.block(d)))
        m1 = list(zip(ca, ce))
        m2 = list(zip(cc, cd))
        result = ConnectedMatching(Matching(tuple(m1 + m2)))
    if not is_cdm(g, result.edges):
        raise RuntimeError("constructed matching failed CDM verification")
    return result


# ---------------------------------------------------------------------------
# Complete-graph models with small branch sets


@dataclass(frozen=True)
class KModel:
    """Disjoint connected branch sets, pairwise joined by edges."""

    branch_sets: tuple[tuple[int, ...], ...]
    target_order: int

    def __post_init__(self):
        object.__setattr__(
            self,
            "branch_sets",
            tuple(tuple(sorted(b)) for b in self.branch_sets),
        )

    @property
    def order(self) -> int:
        return len(self.branch_sets)


def verify_k_model(g: Graph, model: KModel) -> bool:
    """Disjointness, per-set connectivity, pairwise adjacency, order."""
    if model.order != model.target_order:
        return False
    masks = []
    used = 0
    for b in model.branch_sets:
        m = 0
        for v in b:
            if not 0 <= v < g.n or used >> v & 1 or m >> v & 1:
                return False
            m |= 1 << v
        if not b:
            return False
        used |= m
        if not _mask_connected(g, m):
            return False
        masks.append(m)
    reaches = []
    for m in masks:
        r = 0
        for v in bits(m):
            r |= g.row(v)
        reaches.append(r)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not reaches[i] & masks[j]:
                return False
    return True


def _mask_connected(g: Graph, mask: int) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.row(v)
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def k_model_size2_max(
    g: Graph, budget: int | None = None
) -> tuple[KModel, bool]:
    """Largest complete-graph model with branch sets of size 1 or 2.

    Branch and bound over vertices in increasing order: the least unused
    vertex is skipped, kept as a singleton, or paired with an unused
    neighbour, subject to adjacency with all existing branch sets.
    Exactness flag is False only when the node budget ran out.
    """
    best: list[tuple[int, ...]] = []
    nodes = 0
    exhausted = False

    def dfs(avail: int, chosen: list, reaches: list) -> None:
        nonlocal best, nodes, exhausted
        if budget is not None and nodes > budget:
            exhausted = True
            return
        nodes += 1
        if len(chosen) > len(best):
            best = list(chosen)
        if not avail or len(chosen) + avail.bit_count() <= len(best):
            return
        v = avail & -avail
        vi = v.bit_length() - 1
        rest = avail & ~v
        # Option 1: v as a singleton branch set
        if all(r & v for r in reaches):
            chosen.append((vi,))
            dfs(rest, chosen, reaches + [g.row(vi)])
            chosen.pop()
        # Option 2: v paired with an unused neighbour
        for wi in bits(g.row(vi) & rest):
            mask = v | (1 << wi)
            if all(r & mask for r in reaches):
                chosen.append((vi, wi))
                dfs(rest & ~(1 << wi), chosen, reaches + [g.row(vi) | g.row(wi)])
                chosen.pop()
        # Option 3: v unused in the model
        dfs(rest, chosen, reaches)

    dfs(g.full_mask, [], [])
    model = KModel(tuple(best), len(best))
    return model, not exhausted


def had2(g: Graph) -> int:
    model, exact = k_model_size2_max(g)
    assert exact
    return model.order


def eberhard_model(p: int) -> KModel:
    """The explicit four-type partition model on the Eberhard complement.

    Type 1: singletons (i,0) for i outside {(p-1)/2, p-1}; Type 2: the
    pair {((p-1)/2,0), (p-1,0)}; Type 3: pairs {(j,i),(j,p-1-i)} for
    i in 1..(p-1)/2-1; Type 4: pairs {(j,(p-1)/2),(j,p-1)}.  The model
    order is (p*p+p-2)/2 and it is verified on the Eberhard complement.
    """
    from .constructions import eberhard

    half = (p - 1) // 2

    def idx(a: int, b: int) -> int:
        return (a % p) * p + (b % p)

    sets: list[tuple[int, ...]] = []
    for i in range(p):
        if i not in (half, p - 1):
            sets.append((idx(i, 0),))
    sets.append((idx(half, 0), idx(p - 1, 0)))
    for j in range(p):
        for i in range(1, half):
            sets.append((idx(j, i), idx(j, p - 1 - i)))
    for j in range(p):
        sets.append((idx(j, half), idx(j, p - 1)))
    want = (p * p + p - 2) // 2
    if len(sets) != want:
        raise RuntimeError("type counts do not add up to (p^2+p-2)/2")
    model = KModel(tuple(sets), want)
    host = complement(eberhard(p))
    if not verify_k_model(host, model):
        raise RuntimeError("eberhard model failed verification")
    return model


def connected_perfect_matching_search(
    g: Graph,
    seed: int,
    budget: int = 500_000,
    host_for_adjacency: Graph | None = None,
) -> KModel | None:
    """A perfect matching whose edges are pairwise adjacent, or None.

    Randomised greedy pairing plus 2-swap local search with restarts:
    a violating pair of matching edges is re-paired when that does not
    increase the number of non-adjacent pairs.  ``budget`` caps the total
    number of local-search moves across restarts.  Matching edges are
    edges of g; pairwise adjacency is tested in ``host_for_adjacency``
    (g itself by default).
    """
    n = g.n
    if n % 2:
        raise ValueError("perfect matchings need an even number of vertices")
    host = host_for_adjacency or g
    if not alpha_at_most_2(host):
        raise ValueError("search is intended for hosts with alpha <= 2")
    if n == 0:
        return KModel((), 0)
    rng = SplitMix64(seed)
    moves = 0

    def random_perfect_matching() -> list[int] | None:
        for _ in range(50):
            order = list(range(n))
            rng.shuffle(order)
            match = [-1] * n
            ok = True
            for v in order:
                if match[v] != -1:
                    continue
                cands = [w for w in bits(g.row(v)) if match[w] == -1]
                if not cands:
                    ok = False
                    break
                w = cands[rng.randrange(len(cands))]
                match[v] = w
                match[w] = v
            if ok:
                return match
        return None

    def pairs_of(match: list[int]) -> list[tuple[int, int]]:
        return [(v, match[v]) for v in range(n) if v < match[v]]

    def violations(pairs) -> list[tuple[int, int]]:
        reach = [host.row(u) | host.row(v) for u, v in pairs]
        out = []
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                x, y = pairs[j]
                if not (reach[i] >> x & 1 or reach[i] >> y & 1):
                    out.append((i, j))
        return out

    while moves < budget:
        match = random_perfect_matching()
        if match is None:
            return None  # no perfect matching reachable greedily
        pairs = pairs_of(match)
        bad = violations(pairs)
        stall = 0
        while bad and moves < budget and stall < 200:
            moves += 1
            i, j = bad[rng.randrange(len(bad))]
            a, b = pairs[i]
            c, d = pairs[j]
            options = []
            if g.has_edge(a, c) and g.has_edge(b, d):
                options.append(((a, c), (b, d)))
            if g.has_edge(a, d) and g.has_edge(b, c):
                options.append(((a, d), (b, c)))
            improved = False
            for p1, p2 in options:
                trial = list(pairs)
                trial[i] = (min(p1), max(p1))
                trial[j] = (min(p2), max(p2))
                tb = violations(trial)
                if len(tb) <= len(bad):
                    if len(tb) < len(bad):
                        stall = 0
                    else:
                        stall += 1
                    pairs = trial
                    bad = tb
                    improved = True
                    break
            if not improved:
                stall += 1
                if stall >= 200:
                    break
        if not bad:
            model = KModel(tuple(pairs), len(pairs))
            if host_for_adjacency is None:
                if verify_k_model(g, model):
                    return model
            else:
                if all(g.has_edge(u, v) for u, v in pairs) and verify_k_model(
                    host, model
                ):
                    return model
    return None


def half_order_model_search(g: Graph, seed: int, budget: int = 500_000) -> KModel | None:
    """A K_{ceil(n/2)} model with branch sets of size at most 2, or None.

    Even order reduces to a connected perfect matching; odd order pairs
    all but one vertex and keeps the leftover as a singleton branch set.
    """
    if g.n % 2 == 0:
        return connected_perfect_matching_search(g, seed, budget)
    rng = SplitMix64(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    per_vertex = max(budget // max(g.n, 1), 10_000)
    for s in order:
        rest = [v for v in range(g.n) if v != s]
        sub = induced_subgraph(g, rest)
        model = connected_perfect_matching_search(sub, rng.next_u64(), per_vertex)
        if model is None:
            continue
        sets = [tuple(rest[v] for v in b) for b in model.branch_sets]
        sets.append((s,))
        full_model = KModel(tuple(sets), len(sets))
        if verify_k_model(g, full_model):
            return full_model
    return None


# ---------------------------------------------------------------------------
# Seagulls


@dataclass(frozen=True)
class SeagullReport:
    size_ok: bool
    connectivity_ok: bool
    clique_condition_ok: bool
    matching_ok: bool
    clique_condition_exact: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.size_ok
            and self.connectivity_ok
            and self.clique_condition_ok
            and self.matching_ok
        )


def seagull_conditions(g: Graph, k: int) -> SeagullReport:
    """The four packing conditions for k vertex-disjoint seagulls.

    The clique condition quantifies over all cliques up to 16 vertices
    (exact); above that only maximal cliques are enumerated and the
    report is flagged as necessary-side only.
    """
    if not alpha_at_most_2(g):
        raise ValueError("seagull conditions require alpha <= 2")
    if k < 1:
        raise ValueError("k must be positive")
    n = g.n
    size_ok = n >= 3 * k
    connectivity_ok = n >= 2 and vertex_connectivity(g, at_least=k) >= k
    from .cliques import all_cliques, maximal_cliques

    exact = n <= 16
    clique_source = all_cliques(g) if exact else maximal_cliques(g)
    clique_ok = True
    for cmask in clique_source:
        outside = g.full_mask & ~cmask
        d = 0
        for v in bits(outside):
            rv = g.row(v)
            if rv & cmask and cmask & ~rv:
                d += 1
        if d + outside.bit_count() < 2 * k:
            clique_ok = False
            break
    matching_ok = matching_number(complement(g)) >= k
    return SeagullReport(size_ok, connectivity_ok, clique_ok, matching_ok, exact)


def _induced_seagulls(g: Graph) -> list[tuple[int, int, int]]:
    """All induced 3-vertex paths (a, c, b): c the centre, a < b, ab not an edge."""
    out = []
    for c in range(g.n):
        rc = g.row(c)
        nbrs = list(bits(rc))
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not g.has_edge(a, b):
                    out.append((a, c, b))
    return out


def seagull_pack_exact(g: Graph, k: int) -> list[tuple[int, int, int]] | None:
    """k vertex-disjoint induced 3-paths by backtracking, or None."""
    if not alpha_at_most_2(g):
        raise ValueError("seagull packing requires alpha <= 2")
    seagulls = _induced_seagulls(g)

    def dfs(start: int, used: int, chosen: list) -> list | None:
        if len(chosen) == k:
            return list(chosen)
        if g.n - used.bit_count() < 3 * (k - len(chosen)):
            return None
        for i in range(start, len(seagulls)):
            a, c, b = seagulls[i]
            m = (1 << a) | (1 << c) | (1 << b)
            if used & m:
                continue
            chosen.append((a, c, b))
            got = dfs(i + 1, used | m, chosen)
            chosen.pop()
            if got is not None:
                return got
        return None

    return dfs(0, 0, [])


# ---------------------------------------------------------------------------
# Unavoidable induced subgraphs


def builtin_patterns() -> list[tuple[str, Graph]]:
    """The textually defined unavoidable patterns."""
    from .constructions import complete, cycle, wheel5

    c4 = cycle(4)
    c5 = cycle(5)
    w5 = wheel5()
    k8 = complete(8)
    # complement of the star K_{1,6}: a K6 plus one isolated vertex
    k16c = Graph(7, [(u, v) for u in range(1, 7) for v in range(u + 1, 7)])
    return [("C4", c4), ("C5", c5), ("W5", w5), ("K8", k8), ("K1_6_complement", k16c)]


def unavoidable_scan(
    g: Graph, patterns: list[tuple[str, Graph]] | None = None
) -> dict[str, bool]:
    """Induced-subgraph test for each pattern (built-ins by default)."""
    pats = patterns if patterns is not None else builtin_patterns()
    return {name: has_induced_subgraph(g, pat) for name, pat in pats}


def is_w5(g: Graph) -> bool:
    from .constructions import wheel5

    return g.n == 6 and is_isomorphic(g, wheel5())


def patterns_from_graph6_file(path: str) -> list[tuple[str, Graph]]:
    """Load extra scan patterns (one graph6 per line), named by line number."""
    from .graph6 import read_graph6_file

    return [
        (f"{path}:{i + 1}", g) for i, g in enumerate(read_graph6_file(path))
    ]


# ---------------------------------------------------------------------------
# Witness text format


def format_model(model: KModel) -> str:
    lines = [f"model {model.order}"]
    for b in model.branch_sets:
        lines.append("B " + " ".join(str(v) for v in b))
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> KModel:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("model "):
        raise ValueError("model text must start with a 'model <order>' line")
    order = int(lines[0].split()[1])
    sets = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] != "B":
            raise ValueError(f"unexpected line in model text: {ln!r}")
        sets.append(tuple(int(x) for x in parts[1:]))
    return KModel(tuple(sets), order)
