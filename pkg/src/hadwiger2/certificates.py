"""Fractional clique-cover certificates, lifting, and clique-ratio checks.

A certificate is a multiset of cliques X_1..X_r together with a rational
bound k; it is valid when every vertex lies in at least r/k of the
cliques (counted with multiplicity), which witnesses that the fractional
clique cover number is at most k.  All threshold comparisons are exact
rational arithmetic; no floating point is used anywhere here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .cliques import is_clique, max_clique, maximal_cliques
from .constructions import kneser_labels, srg_parameters
from .graphs import (
    Graph,
    InflationSpec,
    alpha_at_most_2,
    bits,
    complement,
    vertex_connectivity,
)


@dataclass(frozen=True)
class CliqueFamilyCertificate:
    """Cliques X_1..X_r (repetition allowed) with a rational bound k >= 1."""

    cliques: tuple[tuple[int, ...], ...]
    bound: Fraction

    def __post_init__(self):
        object.__setattr__(
            self,
            "cliques",
            tuple(tuple(sorted(set(c))) for c in self.cliques),
        )
        object.__setattr__(self, "bound", Fraction(self.bound))
        if self.bound < 1:
            raise ValueError("certificate bound must be at least 1")

    @property
    def size(self) -> int:
        return len(self.cliques)


def vertex_multiplicities(g: Graph, cert: CliqueFamilyCertificate) -> list[int]:
    counts = [0] * g.n
    for clique in cert.cliques:
        for v in clique:
            if not 0 <= v < g.n:
                raise ValueError(f"certificate references vertex {v} outside host")
            counts[v] += 1
    return counts


def verify_certificate(g: Graph, cert: CliqueFamilyCertificate) -> bool:
    """True iff every member is a clique and min multiplicity >= r/k (exact)."""
    counts = vertex_multiplicities(g, cert)
    if g.n and not cert.cliques:
        return False
    if any(not is_clique(g, c) for c in cert.cliques):
        return False
    threshold = Fraction(cert.size) / cert.bound
    return all(count >= threshold for count in counts)


def theta_f_upper(g: Graph, cert: CliqueFamilyCertificate) -> Fraction:
    if not verify_certificate(g, cert):
        raise ValueError("certificate does not verify on this host")
    return cert.bound


def theta_f_lower_via_omega(g: Graph) -> Fraction:
    """|V|/omega, valid for every graph since theta_f * omega >= |V|."""
    if g.n == 0:
        raise ValueError("empty graph has no clique ratio")
    return Fraction(g.n, len(max_clique(g)))


def clebsch_certificate(g: Graph) -> CliqueFamilyCertificate:
    """The 16 non-neighbourhood 5-cliques of the Clebsch complement, bound 16/5."""
    ok = (
        g.n == 16
        and g.is_regular()
        and g.degree(0) == 10
        and alpha_at_most_2(g)
        and srg_parameters(complement(g)) is not None
    )
    if not ok:
        raise ValueError("host is not the complement of the Clebsch graph")
    cliques = []
    for v in range(16):
        mask = g.full_mask & ~g.row(v) & ~(1 << v)
        cliques.append(tuple(bits(mask)))
    cert = CliqueFamilyCertificate(tuple(cliques), Fraction(16, 5))
    if not verify_certificate(g, cert):
        raise ValueError("host is not the complement of the Clebsch graph")
    return cert


def mesner_certificate(g: Graph, sys) -> CliqueFamilyCertificate:
    """22 point-cliques of the Mesner complement (blocks through a point), 22/6."""
    from .steiner import mesner

    if g != complement(mesner(sys)):
        raise ValueError("host does not match the complement of mesner(sys)")
    cliques = []
    for point in range(22):
        members = tuple(
            i for i, b in enumerate(sys.blocks) if point in b
        )
        cliques.append(members)
    cert = CliqueFamilyCertificate(tuple(cliques), Fraction(22, 6))
    if not verify_certificate(g, cert):
        raise ValueError("mesner certificate failed verification")
    return cert


def intersecting_family_size(n: int, k: int, t: int, r: int) -> int:
    """Size of the canonical t-intersecting family with parameter r."""
    s = t + 2 * r
    return sum(
        comb(s, i) * comb(n - s, k - i)
        for i in range(t + r, s + 1)
        if 0 <= k - i
    )


def aktf_bound(n: int, k: int, t: int) -> int:
    """Maximum size of a t-intersecting family of k-subsets of [n]."""
    if not 1 <= t <= k <= n:
        raise ValueError("need 1 <= t <= k <= n")
    return max(
        intersecting_family_size(n, k, t, r)
        for r in range(0, (n - t) // 2 + 1)
    )


def kneser_certificate(n: int, k: int, t: int, r: int) -> CliqueFamilyCertificate:
    """Certificate for K(n,k,>=t): one clique per (t+2r)-subset S.

    The clique of S consists of the k-sets meeting S in at least t+r
    elements.  The emitted bound is C(n,k) divided by the size of the
    canonical family with this r; when r maximises the family size this
    equals C(n,k)/aktf_bound(n,k,t).
    """
    if not (t >= 1 and r >= 0 and t + 2 * r <= n and 1 <= k <= n):
        raise ValueError("need t >= 1, r >= 0, t+2r <= n, 1 <= k <= n")
    fam = intersecting_family_size(n, k, t, r)
    if fam < 1:
        raise ValueError("empty canonical family; no certificate for these parameters")
    s = t + 2 * r
    labels = kneser_labels(n, k)
    label_masks = []
    for c in labels:
        m = 0
        for x in c:
            m |= 1 << x
        label_masks.append(m)
    cliques = []
    for subset in combinations(range(n), s):
        sm = 0
        for x in subset:
            sm |= 1 << x
        members = tuple(
            i
            for i, am in enumerate(label_masks)
            if (am & sm).bit_count() >= t + r
        )
        cliques.append(members)
    return CliqueFamilyCertificate(tuple(cliques), Fraction(comb(n, k), fam))


def lift_certificate(
    spec: InflationSpec, cert: CliqueFamilyCertificate
) -> CliqueFamilyCertificate:
    """Certificate for the expanded graph: each clique becomes the union
    of the vertex-cliques it meets; multiplicities and bound are preserved."""
    if not spec.is_proper:
        raise ValueError("certificate lifting needs a proper inflation")
    lifted = []
    for clique in cert.cliques:
        members: list[int] = []
        for x in clique:
            members.extend(bits(spec.block(x)))
        lifted.append(tuple(sorted(members)))
    return CliqueFamilyCertificate(tuple(lifted), cert.bound)


def lift_cover(spec: InflationSpec, cover) -> list[tuple[int, ...]]:
    """Lift a covering collection of cliques to a proper inflation.

    Each base vertex donates its whole expanded clique to the first cover
    member containing it and a single representative to every other
    member, which keeps the cover property, the count, and the size
    identity  sum |Q'| = |V(G')| - |V(G)| + sum |Q|  exact.
    """
    if not spec.is_proper:
        raise ValueError("cover lifting needs a proper inflation")
    base = spec.base
    cover = [tuple(sorted(set(c))) for c in cover]
    covered = 0
    for c in cover:
        for x in c:
            if not 0 <= x < base.n:
                raise ValueError("cover references vertex outside the base graph")
            covered |= 1 << x
    if covered != base.full_mask:
        raise ValueError("input cliques do not cover the base graph")
    owner = [-1] * base.n
    for idx, c in enumerate(cover):
        for x in c:
            if owner[x] == -1:
                owner[x] = idx
    lifted = []
    for idx, c in enumerate(cover):
        members: list[int] = []
        for x in c:
            if owner[x] == idx:
                members.extend(bits(spec.block(x)))
            else:
                members.append(spec.offsets[x])
        lifted.append(tuple(sorted(members)))
    got = sum(len(q) for q in lifted)
    want = spec.expanded_n - base.n + sum(len(q) for q in cover)
    if got != want:
        raise RuntimeError("cover lifting violated the size identity")
    return lifted


def four_cover_check(g: Graph):
    """Four cliques covering V with total size >= |V|+2, or None.

    Exact search below 20 vertices (branching on the least uncovered
    vertex over maximal cliques, best-first by clique size); greedy plus
    2-swap local search above.  A returned witness certifies that every
    proper inflation has a clique of at least a quarter of its order plus
    a half, hence satisfies the half-order Hadwiger bound.
    """
    if not alpha_at_most_2(g):
        raise ValueError("four-clique covers are only used when alpha <= 2")
    n = g.n
    if n == 0:
        return ((), (), (), ())
    target = n + 2
    cliques = sorted(maximal_cliques(g), key=lambda m: -m.bit_count())
    omega = cliques[0].bit_count()
    if 4 * omega < target:
        return None
    by_vertex = [[] for _ in range(n)]
    for m in cliques:
        for v in bits(m):
            by_vertex[v].append(m)

    best: list[int] | None = None

    def dfs(chosen: list[int], covered: int, total: int) -> bool:
        nonlocal best
        slots_left = 4 - len(chosen)
        if covered == g.full_mask:
            if total + slots_left * omega >= target:
                fill = chosen + [cliques[0]] * slots_left
                best = fill
                return True
            return False
        if slots_left == 0:
            return False
        if total + slots_left * omega < target:
            return False
        v = ((~covered) & g.full_mask & -((~covered) & g.full_mask)).bit_length() - 1
        for m in by_vertex[v]:
            if dfs(chosen + [m], covered | m, total + m.bit_count()):
                return True
        return False

    if n <= 20:
        if dfs([], 0, 0):
            assert best is not None
            return tuple(tuple(bits(m)) for m in best)
        return None
    # Heuristic: greedy max-new-coverage from the largest clique, then
    # single-slot swaps; verified before returning.
    chosen = [cliques[0]]
    covered = cliques[0]
    while len(chosen) < 4:
        pick = max(cliques, key=lambda m: ((m & ~covered).bit_count(), m.bit_count()))
        chosen.append(pick)
        covered |= pick
    for _ in range(8):
        covered = 0
        for m in chosen:
            covered |= m
        total = sum(m.bit_count() for m in chosen)
        if covered == g.full_mask and total >= target:
            return tuple(tuple(bits(m)) for m in chosen)
        improved = False
        for i in range(4):
            others = chosen[:i] + chosen[i + 1:]
            om = 0
            for m in others:
                om |= m
            pick = max(cliques, key=lambda m: ((m & ~om).bit_count(), m.bit_count()))
            if pick != chosen[i]:
                chosen[i] = pick
                improved = True
        if not improved:
            break
    covered = 0
    for m in chosen:
        covered |= m
    if covered == g.full_mask and sum(m.bit_count() for m in chosen) >= target:
        return tuple(tuple(bits(m)) for m in chosen)
    return None


def format_certificate(cert: CliqueFamilyCertificate) -> str:
    """Text form: a 'theta_f num/den' line, then one 'X v1 v2 ...' per clique."""
    b = Fraction(cert.bound)
    lines = [f"theta_f {b.numerator}/{b.denominator}"]
    for c in cert.cliques:
        lines.append("X " + " ".join(str(v) for v in c))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> CliqueFamilyCertificate:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("theta_f "):
        raise ValueError("certificate text must start with a 'theta_f' line")
    num, den = lines[0].split()[1].split("/")
    cliques = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] != "X":
            raise ValueError(f"unexpected certificate line: {ln!r}")
        cliques.append(tuple(int(x) for x in parts[1:]))
    return CliqueFamilyCertificate(tuple(cliques), Fraction(int(num), int(den)))


def format_cover4(cover) -> str:
    """Same clique-line format as certificates, under a 'cover4' header."""
    lines = ["cover4"]
    for c in cover:
        lines.append("X " + " ".join(str(v) for v in c))
    return "\n".join(lines) + "\n"


def parse_cover4(text: str) -> tuple[tuple[int, ...], ...]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "cover4":
        raise ValueError("cover text must start with a 'cover4' line")
    out = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] != "X":
            raise ValueError(f"unexpected cover line: {ln!r}")
        out.append(tuple(int(x) for x in parts[1:]))
    return tuple(out)


@dataclass(frozen=True)
class GoodBadPartition:
    """Edge partition where good edges pair up across the graph and bad
    edges close triangles at shared endpoints."""

    good: frozenset[tuple[int, int]]
    bad: frozenset[tuple[int, int]]
    source: CliqueFamilyCertificate = field(compare=False)


def good_bad_partition(g: Graph, cert: CliqueFamilyCertificate) -> GoodBadPartition:
    """Partition E(G) by clique support: uv is good iff n(uv) > r/2.

    n(uv) counts, with multiplicity, the certificate cliques meeting
    {u,v}.  Requires a verified certificate with bound < 3 and alpha <= 2;
    the two structural hypotheses (disjoint good edges are adjacent, bad
    edges sharing an endpoint close a triangle) are checked before return.
    """
    if cert.bound >= 3:
        raise ValueError("good/bad partition needs a certificate bound below 3")
    if not verify_certificate(g, cert):
        raise ValueError("certificate does not verify on this host")
    if not alpha_at_most_2(g):
        raise ValueError("good/bad partition requires alpha <= 2")
    r = cert.size
    incidence = [0] * g.n
    for idx, clique in enumerate(cert.cliques):
        for v in clique:
            incidence[v] |= 1 << idx
    good = set()
    bad = set()
    for u, v in g.edges():
        n_uv = (incidence[u] | incidence[v]).bit_count()
        if 2 * n_uv > r:
            good.add((u, v))
        else:
            bad.add((u, v))
    part = GoodBadPartition(frozenset(good), frozenset(bad), cert)
    _check_good_bad(g, part)
    return part


def _check_good_bad(g: Graph, part: GoodBadPartition) -> None:
    good = sorted(part.good)
    for i, (u, v) in enumerate(good):
        mask_uv = (1 << u) | (1 << v)
        reach = g.row(u) | g.row(v) | mask_uv
        for x, y in good[i + 1:]:
            if mask_uv & ((1 << x) | (1 << y)):
                continue
            if not reach >> x & 1 and not reach >> y & 1:
                raise RuntimeError("good/bad hypothesis (1) violated")
    bad_at = [set() for _ in range(g.n)]
    for u, v in part.bad:
        bad_at[u].add(v)
        bad_at[v].add(u)
    for v in range(g.n):
        nbrs = sorted(bad_at[v])
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if not g.has_edge(u, w):
                    raise RuntimeError("good/bad hypothesis (2) violated")


def classify_good_bad_outcome(g: Graph, part: GoodBadPartition) -> str | None:
    """First conclusion that holds for an even-order host:

    'a' dominating edge; 'b' connectivity at most n/2; 'c' clique of at
    least n/2; 'd' connected perfect matching of good edges.  The search
    for 'd' is exact up to 16 vertices, heuristic with verification above;
    None means no conclusion was established.
    """
    n = g.n
    if n % 2:
        raise ValueError("outcome classification needs an even-order host")
    if not alpha_at_most_2(g):
        raise ValueError("outcome classification requires alpha <= 2")
    full = g.full_mask
    for u, v in g.edges():
        if g.row(u) | g.row(v) == full:
            return "a"
    if n >= 2 and vertex_connectivity(g, at_least=n // 2 + 1) <= n // 2:
        return "b"
    if len(max_clique(g)) >= n // 2:
        return "c"
    good_rows = [0] * n
    for u, v in part.good:
        good_rows[u] |= 1 << v
        good_rows[v] |= 1 << u

    def cpm(used: int, chosen: list[tuple[int, int]]) -> bool:
        if used == full:
            return True
        v = ((~used) & full & -((~used) & full)).bit_length() - 1
        for w in bits(good_rows[v] & ~used & ~((1 << (v + 1)) - 1)):
            ok = True
            reach = g.row(v) | g.row(w) | (1 << v) | (1 << w)
            for x, y in chosen:
                if not (reach >> x & 1 or reach >> y & 1):
                    ok = False
                    break
            if ok and cpm(used | (1 << v) | (1 << w), chosen + [(v, w)]):
                return True
        return False

    if n <= 16:
        if cpm(0, []):
            return "d"
        return None
    from .conjectures import connected_perfect_matching_search

    sub = Graph(n, sorted(part.good))
    model = connected_perfect_matching_search(
        sub, seed=0, budget=200_000, host_for_adjacency=g
    )
    return "d" if model is not None else None
