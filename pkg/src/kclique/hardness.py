"""Exact-weight k-clique instances and their reduction to capped listing.

A weighted complete k-partite graph is hashed (w' = x*w + per-vertex
offsets that cancel around any k-clique), F_p is cut into s intervals, and
each admissible choice of one interval per part pair yields an unweighted
subgraph H.  Listing a bounded number of k-cliques in every H and checking
their weights decides whether a zero-weight k-clique exists.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import nextprime

from .cliques import count_in_mask
from .graph import Clique, CliqueList, Graph, SplitMix64, canonical, pad_to_clique_count
from .lister import ListingBudget, ListingReport, list_k1, list_kl

Edge = Tuple[int, int]


@dataclass
class WeightedGraph:
    """Complete k-partite graph; vertex part*n + i is the i-th vertex of a part."""
    k: int
    n: int
    p: int
    weights: Dict[Edge, int]
    planted: Optional[Clique] = None

    @property
    def parts(self) -> List[List[int]]:
        return [list(range(i * self.n, (i + 1) * self.n)) for i in range(self.k)]

    def part_of(self, v: int) -> int:
        return v // self.n

    def weight(self, u: int, v: int) -> int:
        return self.weights[(u, v) if u < v else (v, u)]

    def clique_weight(self, clique: Sequence[int], w: Optional[Dict[Edge, int]] = None) -> int:
        w = self.weights if w is None else w
        return sum(w[e] for e in combinations(sorted(clique), 2)) % self.p

    def graph(self) -> Graph:
        return Graph.from_edges(self.n * self.k, self.weights)


@dataclass
class HashedWeights:
    x: int
    y: Dict[Tuple[int, int], int]  # (vertex, other part) -> offset
    weights: Dict[Edge, int]


@dataclass
class IntervalFamily:
    p: int
    s: int
    k: int

    def bounds(self, r: int) -> Tuple[int, int]:
        """Closed range of interval r; lengths differ by at most one."""
        return self.p * r // self.s, self.p * (r + 1) // self.s - 1

    def index(self, value: int) -> int:
        r = value * self.s // self.p
        while self.bounds(r)[0] > value:
            r -= 1
        while self.bounds(r)[1] < value:
            r += 1
        return r

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return list(combinations(range(self.k), 2))

    def last_choices(self, lo: int, hi: int) -> List[int]:
        """Intervals r whose range added to [lo, hi] contains a multiple of p."""
        out = set()
        p = self.p
        for m in range(-(-lo // p), (hi + p - 1) // p + 1):
            a, b = max(0, m * p - hi), min(p - 1, m * p - lo)
            if a > b:
                continue
            for r in range(self.index(a), self.index(b) + 1):
                out.add(r)
        return sorted(out)

    def admissible(self) -> Iterator[Tuple[int, ...]]:
        """Every interval choice (one per part pair, pairs in lex order) whose sumset meets 0 mod p."""
        head = len(self.pairs) - 1
        for first in product(range(self.s), repeat=head):
            lo = sum(self.bounds(r)[0] for r in first)
            hi = sum(self.bounds(r)[1] for r in first)
            for r in self.last_choices(lo, hi):
                yield first + (r,)

    def contains_zero(self, combo: Sequence[int]) -> bool:
        lo = sum(self.bounds(r)[0] for r in combo)
        hi = sum(self.bounds(r)[1] for r in combo)
        return -(-lo // self.p) * self.p <= hi


def gen_exact_instance(n: int, k: int, seed: int, plant: bool = False,
                       weight_range: Optional[int] = None) -> WeightedGraph:
    """Uniform weights in [-W, W] (default W = n^(2k)) stored mod p."""
    if not n >= k >= 3:
        raise ValueError("need n >= k >= 3")
    W = n ** (2 * k) if weight_range is None else weight_range
    p = int(nextprime(8 * k * k * n ** k * W))
    rng = SplitMix64(seed)
    weights: Dict[Edge, int] = {}
    for i, j in combinations(range(k), 2):
        for a in range(n):
            for b in range(n):
                weights[(i * n + a, j * n + b)] = (rng.randbelow(2 * W + 1) - W) % p
    planted = None
    if plant:
        planted = tuple(i * n + rng.randbelow(n) for i in range(k))
        edges = list(combinations(planted, 2))
        weights[edges[-1]] = -sum(weights[e] for e in edges[:-1]) % p
    return WeightedGraph(k, n, p, weights, planted)


def hash_weights(wg: WeightedGraph, seed: int) -> HashedWeights:
    """w'(u, v) = x*w(u, v) + y[u, part v] + y[v, part u] with each vertex's offsets summing to 0."""
    rng = SplitMix64(seed)
    p, k = wg.p, wg.k
    x = 1 + rng.randbelow(p - 1)
    y: Dict[Tuple[int, int], int] = {}
    for v in range(wg.n * k):
        others = [j for j in range(k) if j != wg.part_of(v)]
        draws = [rng.randbelow(p) for _ in others[:-1]]
        draws.append(-sum(draws) % p)
        for j, d in zip(others, draws):
            y[(v, j)] = d
    out = {}
    for (u, v), w in wg.weights.items():
        out[(u, v)] = (x * w + y[(u, wg.part_of(v))] + y[(v, wg.part_of(u))]) % p
    return HashedWeights(x, y, out)


def interval_subgraphs(wg: WeightedGraph, hashed: HashedWeights, s: int
                       ) -> Iterator[Tuple[int, Tuple[int, ...], Graph]]:
    """(id, interval choice, H) for each admissible choice, in a fixed order."""
    if not 1 <= s <= wg.p:
        raise ValueError("need 1 <= s <= p")
    fam = IntervalFamily(wg.p, s, wg.k)
    buckets = _buckets(wg, hashed, fam)
    N = wg.n * wg.k
    for cid, combo in enumerate(fam.admissible()):
        adj = [0] * N
        for pi, r in enumerate(combo):
            for u, v in buckets[pi].get(r, ()):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield cid, combo, Graph(N, adj)


def _buckets(wg: WeightedGraph, hashed: HashedWeights, fam: IntervalFamily):
    pair_id = {pr: i for i, pr in enumerate(fam.pairs)}
    buckets: List[Dict[int, List[Edge]]] = [dict() for _ in fam.pairs]
    for (u, v), w in hashed.weights.items():
        pi = pair_id[(wg.part_of(u), wg.part_of(v))]
        buckets[pi].setdefault(fam.index(w), []).append((u, v))
    return buckets


def exact_cliques_brute(wg: WeightedGraph, weights: Optional[Dict[Edge, int]] = None) -> List[Clique]:
    """All zero-weight k-cliques by trying every k-tuple."""
    out = []
    for tup in product(*wg.parts):
        if wg.clique_weight(tup, weights) == 0:
            out.append(tuple(tup))
    return out


def choose_s(n: int, k: int, ell: int, gamma) -> int:
    """s = n^((k - gamma*ell) / (C(k,2) - gamma*C(ell,2))), rounded, at least 1."""
    den = math.comb(k, 2) - gamma * math.comb(ell, 2)
    if den <= 0:
        raise ValueError("gamma too large for this (k, ell)")
    return max(1, round(n ** ((k - gamma * ell) / den)))


Lister = Callable[[Graph, int, int, CliqueList, ListingBudget], ListingReport]


def default_lister(g: Graph, k: int, ell: int, L: CliqueList, budget: ListingBudget) -> ListingReport:
    if ell == 1:
        return list_k1(g, k, budget)
    return list_kl(g, k, ell, L, budget)


@dataclass
class DecisionStats:
    s: int = 0
    combinations: int = 0
    skipped: int = 0
    padded: int = 0
    pad_unreachable: int = 0
    listed: int = 0
    repeats: int = 0
    ell_counts: List[int] = field(default_factory=list)
    found: Optional[Clique] = None


def decide_exact_kclique(wg: WeightedGraph, k: int, ell: int, gamma, seed: int,
                         lister: Optional[Lister] = None, s: Optional[int] = None,
                         repeats: Optional[int] = None, stats: Optional[DecisionStats] = None,
                         emit: Optional[Callable[[int, Graph], None]] = None) -> bool:
    """True iff a zero-weight k-clique turns up among the capped listings.

    Never true on a zero-free instance.  Each repeat rehashes the weights;
    subgraphs with too many ell-cliques are skipped, sparse ones are padded
    with a disjoint complete ell-partite graph, and each run lists at most
    t = n^k ln n / s^C(k,2) + 1 cliques.
    """
    if k != wg.k:
        raise ValueError("k does not match the instance")
    if not 1 <= ell < k:
        raise ValueError("need 1 <= ell < k")
    if not 0 <= gamma <= k / ell:
        raise ValueError("need 0 <= gamma <= k/ell")
    lister = lister or default_lister
    stats = stats if stats is not None else DecisionStats()
    n = wg.n
    s = s or choose_s(n, k, ell, gamma)
    stats.s = s
    log_n = math.log(n)
    # expected ell-clique count of H is C(k, ell) n^ell / s^C(ell, 2)
    scale = math.comb(k, ell) / s ** math.comb(ell, 2)
    skip_above = scale * n ** ell * log_n
    t = int(n ** k * log_n / s ** math.comb(k, 2)) + 1
    repeats = repeats or max(3, math.ceil(3 * log_n))
    rng = SplitMix64(seed)
    ell_index = _ell_cliques_by_key(wg, ell)
    fam = IntervalFamily(wg.p, s, k)
    pair_id = {pr: i for i, pr in enumerate(fam.pairs)}
    for _ in range(repeats):
        stats.repeats += 1
        hashed = hash_weights(wg, rng.next_u64())
        for cid, combo, H in interval_subgraphs(wg, hashed, s):
            stats.combinations += 1
            L = _ell_cliques_in(H, ell, combo, pair_id, ell_index, hashed, fam)
            stats.ell_counts.append(len(L))
            if len(L) > skip_above:
                stats.skipped += 1
                continue
            H, L = _pad(H, ell, L, n, scale, stats)
            if emit is not None:
                emit(cid, H)
            rep = lister(H, k, ell, CliqueList(ell, L), ListingBudget.capped(t))
            stats.listed += len(rep.cliques)
            for c in rep.cliques:
                if max(c) < n * k and wg.clique_weight(c) == 0:
                    stats.found = c
                    return True
    return False


def _ell_cliques_by_key(wg: WeightedGraph, ell: int) -> Dict[Tuple[int, ...], List[Clique]]:
    """Group the ell-cliques of the complete k-partite graph by their parts."""
    out: Dict[Tuple[int, ...], List[Clique]] = {}
    for parts in combinations(range(wg.k), ell):
        out[parts] = [tuple(c) for c in product(*(wg.parts[i] for i in parts))]
    return out


def _ell_cliques_in(H: Graph, ell: int, combo, pair_id, index, hashed: HashedWeights,
                    fam: IntervalFamily) -> List[Clique]:
    """ell-cliques of G whose every edge falls in the chosen interval of its pair."""
    if ell == 1:
        return [(v,) for v in range(H.n)]
    out = []
    for parts, cliques in index.items():
        want = [(combo[pair_id[(a, b)]], pa, pb) for (pa, a), (pb, b)
                in combinations(enumerate(parts), 2)]
        for c in cliques:
            if all(fam.index(hashed.weights[(c[pa], c[pb])]) == r for r, pa, pb in want):
                out.append(c)
    return sorted(out)


def _pad(H: Graph, ell: int, L: List[Clique], n: int, scale: float, stats: DecisionStats):
    """Add a disjoint complete ell-partite graph so the ell-clique count reaches 0.99 of target."""
    if ell < 2 or len(L) >= 0.99 * scale * n ** ell:
        return H, L
    for extra in range(1, 8 * n + 1):
        if len(L) + extra ** ell >= 0.99 * scale * (n + extra) ** ell:
            break
    else:
        stats.pad_unreachable += 1
        return H, L
    stats.padded += 1
    before = H.n
    H2 = pad_to_clique_count(H, ell, extra ** ell)
    per = (H2.n - before) // ell
    new = [tuple(before + i * per + x for i, x in enumerate(c))
           for c in product(range(per), repeat=ell)]
    return H2, L + new


def hash_preserved(wg: WeightedGraph, hashed: HashedWeights) -> bool:
    """Zero-weight k-cliques are the same under w and w' (exhaustive)."""
    return set(exact_cliques_brute(wg)) == set(exact_cliques_brute(wg, hashed.weights))


def clique_count_in(H: Graph, ell: int) -> int:
    return count_in_mask(H.adj, (1 << H.n) - 1, ell)
