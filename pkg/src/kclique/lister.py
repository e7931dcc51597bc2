"""Output-sensitive k-clique listing.

Every lister here is exact: randomness (the sampled products that spot
dense edges or dense K4s) only decides how much exact certification work
is skipped.  Working state is a mutable list of bitset rows plus an
``alive`` mask; ``orig`` maps local ids back to the caller's graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .boolmat import BoolMatrix, masked_witness_multiply
from .cliques import _covering, cliques_in_mask, count_in_mask
from .graph import (Clique, CliqueList, Graph, SplitMix64, bits_list, canonical,
                    kpartite_copy, mask_of)
from .planner import (ListingPlan, dense_sparse_params, four_three_threshold,
                      kl_node_threshold, make_plan, reduction_valid, six_a_params,
                      six_b_params, sparse42_params)


@dataclass
class ListingBudget:
    t: Optional[int] = None
    mode: str = "all"

    def __post_init__(self) -> None:
        if self.mode not in ("all", "capped"):
            raise ValueError(f"unknown budget mode {self.mode!r}")
        if self.mode == "capped" and (self.t is None or self.t < 1):
            raise ValueError("capped mode needs t >= 1")

    @classmethod
    def capped(cls, t: int) -> "ListingBudget":
        return cls(t, "capped")


@dataclass
class ListingReport:
    cliques: CliqueList
    phases: Dict[str, int] = field(default_factory=dict)
    plan: Optional[ListingPlan] = None

    def __len__(self) -> int:
        return len(self.cliques)


class _Stop(Exception):
    pass


class _Ctx:
    def __init__(self, k: int, cap: Optional[int], seed: int, omega, t: int) -> None:
        self.k = k
        self.cap = cap
        self.out: Set[Clique] = set()
        self.rng = SplitMix64(seed)
        self.omega = omega
        self.t = max(1, t)
        self.tally: Dict[str, int] = {}

    def bump(self, key: str, by: int = 1) -> None:
        self.tally[key] = self.tally.get(key, 0) + by

    def deepest(self, depth: int) -> None:
        if depth > self.tally.get("max_depth", 0):
            self.tally["max_depth"] = depth

    def emit(self, clique: Sequence[int], phase: str) -> None:
        c = canonical(clique)
        if c in self.out:
            return
        self.out.add(c)
        self.bump(phase)
        if self.cap is not None and len(self.out) >= self.cap:
            raise _Stop


def _sub(adj: Sequence[int], mask: int, orig: Sequence[int]):
    """Relabel the induced subgraph on mask to 0..r-1."""
    verts = bits_list(mask)
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        row = 0
        for u in bits_list(adj[v] & mask):
            row |= 1 << pos[u]
        out.append(row)
    return out, [orig[v] for v in verts], pos


def _edges(adj: Sequence[int], alive: int) -> List[Tuple[int, int]]:
    out = []
    for u in bits_list(alive):
        for v in bits_list(adj[u] & alive & ~((2 << u) - 1)):
            out.append((u, v))
    return out


def _edge_count(adj: Sequence[int], alive: int) -> int:
    return sum((adj[u] & alive).bit_count() for u in bits_list(alive)) // 2


def _drop_edge(adj: List[int], u: int, v: int) -> None:
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)


def _rounds(lam: int, n: int, k: int) -> int:
    """Sampling repetitions: ceil(3 * lam * ln(n^k))."""
    return max(1, int(math.ceil(3 * lam * k * math.log(max(n, 2)))))


def _sampled_witnesses(ctx: _Ctx, items: List, lam: int, n: int, k: int,
                       row_masks: Callable[[object], int], pairs: List[Tuple[int, int]],
                       nrows: int) -> Dict[Tuple[int, int], Set[int]]:
    """Distinct sampled witnesses for each row pair (p, q).

    Each round samples ceil(|items| / lam) items; A[row, j] is set iff the
    row lies in row_masks(item_j).  The witness product A * A^T reports, per
    pair of rows, the lowest sampled item adjacent to both.
    """
    seen: Dict[Tuple[int, int], Set[int]] = {}
    size = int(math.ceil(len(items) / lam))
    rounds = 1 if size >= len(items) else _rounds(lam, n, k)
    ids = list(range(len(items)))
    wanted: Dict[int, int] = {}
    for p, q in pairs:
        wanted[p] = wanted.get(p, 0) | 1 << q
    masks = [wanted.get(p, 0) for p in range(nrows)]
    for _ in range(rounds):
        chosen = ids if size >= len(items) else sorted(ctx.rng.sample(ids, size))
        A = [0] * nrows
        AT = []
        for j, it in enumerate(chosen):
            rm = row_masks(items[it])
            AT.append(rm)
            for r in bits_list(rm):
                A[r] |= 1 << j
        Z = masked_witness_multiply(BoolMatrix(nrows, len(chosen), A),
                                    BoolMatrix(len(chosen), nrows, AT), masks)
        for p, wp in enumerate(Z.witness):
            for q, j in wp.items():
                s = seen.setdefault((p, q), set())
                if len(s) < lam:
                    s.add(chosen[j])
        ctx.bump("matmul_rounds")
    return seen


# ---------------------------------------------------------------------------
# Dense / Sparse k-clique listing
# ---------------------------------------------------------------------------

def _emit_local(ctx, prefix, orig, local, phase):
    ctx.emit(prefix + tuple(orig[i] for i in local), phase)


def _small(ctx, adj, alive, orig, k, prefix, phase):
    """Direct listing for k <= 2 (and empty k)."""
    for c in cliques_in_mask(adj, alive, k):
        _emit_local(ctx, prefix, orig, c, phase)


def _dense(ctx: _Ctx, adj: List[int], alive: int, orig: Sequence[int], k: int,
           prefix: Tuple[int, ...], depth: int, t: int) -> None:
    """Alternate the light-edge step and the low-degree-node step until done."""
    ctx.deepest(depth)
    if k <= 2:
        _small(ctx, adj, alive, orig, k, prefix, "base_cliques")
        return
    while True:
        n = alive.bit_count()
        if n < k or _edge_count(adj, alive) < math.comb(k, 2):
            return
        lam, x = dense_sparse_params(k, n, t, ctx.omega)
        removed = _light_edges(ctx, adj, alive, orig, k, prefix, lam, n)
        if alive.bit_count() < k or _edge_count(adj, alive) < math.comb(k, 2):
            return
        before = alive
        alive = _sparse_nodes(ctx, adj, alive, orig, k, prefix, depth, t, x)
        if not removed and alive == before:
            t *= 2
            ctx.bump("t_doublings")


def _light_edges(ctx, adj, alive, orig, k, prefix, lam, n) -> int:
    """List the k-cliques on lam-light edges, then delete those edges."""
    edges = _edges(adj, alive)
    seen: Dict[Tuple[int, int], Set[int]] = {}
    sampled: Optional[Dict[Clique, int]] = None
    could_be_dense = any(
        math.comb((adj[u] & adj[v] & alive).bit_count(), k - 2) >= lam for u, v in edges)
    if lam > 1 and could_be_dense:
        L = cliques_in_mask(adj, alive, k - 2)
        if len(L) >= lam:
            cm = {c: _common(adj, alive, c) for c in L}
            seen = _sampled_witnesses(
                ctx, L, lam, n, k, lambda c: cm[c],
                edges, len(adj))
            sampled = {c: i for i, c in enumerate(L)}
    removed = 0
    for u, v in edges:
        obs = seen.get((u, v), ())
        if len(obs) >= lam:
            continue
        inside = adj[u] & adj[v] & alive
        if count_in_mask(adj, inside, k - 2) >= lam:
            continue
        rest = cliques_in_mask(adj, inside, k - 2)
        for c in rest:
            _emit_local(ctx, prefix, orig, (u, v) + c, "light_edge_cliques")
        if sampled is not None:
            # cliques on a light edge whose remainder no sampling round isolated
            ctx.bump("sampled_light_cliques", len(rest))
            ctx.bump("sampling_missed", sum(sampled[c] not in obs for c in rest))
        _drop_edge(adj, u, v)
        removed += 1
    return removed


def _common(adj, alive, c) -> int:
    m = alive
    for v in c:
        m &= adj[v]
    return m


def _sparse_nodes(ctx, adj, alive, orig, k, prefix, depth, t, x) -> int:
    """Recurse into neighbourhoods of nodes of degree <= x, deleting each."""
    for v in bits_list(alive):
        if (adj[v] & alive).bit_count() > x:
            continue
        nb = adj[v] & alive
        if nb.bit_count() >= k - 1:
            sadj, sorig, _ = _sub(adj, nb, orig)
            _dense(ctx, sadj, (1 << len(sorig)) - 1, sorig, k - 1,
                   prefix + (orig[v],), depth + 1, t)
            ctx.bump("light_node_visits")
        alive &= ~(1 << v)
    return alive


def _run(k: int, budget: Optional[ListingBudget], seed: int, omega, n: int,
         body: Callable[[_Ctx], None]) -> Tuple[Set[Clique], Dict[str, int]]:
    """Drive a lister under the budget.

    Capped mode stops at t cliques.  In all mode with no hint, the size
    bound used for parameters is guessed by doubling: an attempt that
    outgrows its guess is abandoned and retried with twice the guess.
    """
    budget = budget or ListingBudget()
    if budget.mode == "capped":
        ctx = _Ctx(k, budget.t, seed, omega, budget.t)
        try:
            body(ctx)
        except _Stop:
            ctx.bump("capped_stop")
        return ctx.out, ctx.tally
    if budget.t is not None:
        ctx = _Ctx(k, None, seed, omega, budget.t)
        body(ctx)
        return ctx.out, ctx.tally
    guess = max(1, n)
    attempts = 0
    while True:
        attempts += 1
        ctx = _Ctx(k, guess + 1, seed + attempts, omega, guess)
        try:
            body(ctx)
        except _Stop:
            guess *= 2
            continue
        ctx.tally["attempts"] = attempts
        return ctx.out, ctx.tally


def _report(k: int, out: Set[Clique], tally: Dict[str, int], plan, cap: Optional[int]) -> ListingReport:
    items = sorted(out)
    if cap is not None:
        items = items[:cap]
    return ListingReport(CliqueList(k, items), dict(sorted(tally.items())), plan)


def _cap(budget: Optional[ListingBudget]) -> Optional[int]:
    return budget.t if budget is not None and budget.mode == "capped" else None


def _plan_for(g, k, ell, delta, budget, omega, tag, plan=None, s=None):
    if plan is not None:
        return plan
    t = budget.t if budget is not None and budget.t else max(1, g.n)
    return make_plan(k, ell, g.n, g.m, delta, t, omega, tag=tag, s=s)


def list_k1(g: Graph, k: int, budget: Optional[ListingBudget] = None,
            plan: Optional[ListingPlan] = None, seed: int = 0, omega=2) -> ListingReport:
    """All k-cliques (or t in capped mode) by the Dense/Sparse alternation."""
    if k < 1:
        raise ValueError("k must be positive")
    plan = _plan_for(g, k, 1, g.n, budget, omega, "dense-sparse", plan)

    def body(ctx):
        _dense(ctx, list(g.adj), (1 << g.n) - 1, list(range(g.n)), k, (), 0, ctx.t)

    out, tally = _run(k, budget, seed, omega, g.n, body)
    return _report(k, out, tally, plan, _cap(budget))


# ---------------------------------------------------------------------------
# (k, ell) listing
# ---------------------------------------------------------------------------

def _check_list(g: Graph, items, ell: int) -> List[Clique]:
    L = sorted({canonical(c) for c in items})
    for c in L:
        if len(c) != ell or not g.is_clique(c):
            raise ValueError(f"{c} is not an {ell}-clique of the graph")
    return L


def _kl(ctx, adj, alive, orig, k, ell, L, prefix, depth, t) -> None:
    """Light nodes (few ell-cliques) recurse with stripped lists; rest goes dense."""
    ctx.deepest(depth)
    if ell == 1:
        _dense(ctx, adj, alive, orig, k, prefix, depth, t)
        return
    if not L:
        return
    if k == ell:
        for c in L:
            _emit_local(ctx, prefix, orig, c, "base_cliques")
        return
    delta = len(L)
    x = kl_node_threshold(k, ell, delta, t, ctx.omega)
    load: Dict[int, int] = {}
    for c in L:
        for v in c:
            load[v] = load.get(v, 0) + 1
    dead = 0
    for v in sorted(load):
        if load[v] > x:
            continue
        live = [c for c in L if v in c and not any(dead >> u & 1 for u in c)]
        nb = adj[v] & alive & ~dead
        if live and nb.bit_count() >= k - 1:
            sadj, sorig, pos = _sub(adj, nb, orig)
            stripped = [tuple(pos[u] for u in c if u != v) for c in live]
            _kl(ctx, sadj, (1 << len(sorig)) - 1, sorig, k - 1, ell - 1, stripped,
                prefix + (orig[v],), depth + 1, t)
            ctx.bump("light_node_visits")
        dead |= 1 << v
    alive &= ~dead
    heavy_bound = k * delta / x
    if alive.bit_count() > heavy_bound:
        ctx.bump("bound_violations")
    _dense(ctx, adj, alive, orig, k, prefix, depth, t)


def list_kl(g: Graph, k: int, ell: int, ell_cliques, budget: Optional[ListingBudget] = None,
            plan: Optional[ListingPlan] = None, seed: int = 0, omega=2) -> ListingReport:
    """All k-cliques given every ell-clique."""
    if not 1 <= ell < k:
        raise ValueError(f"need 1 <= ell < k, got ell={ell}, k={k}")
    L = _check_list(g, ell_cliques, ell)
    plan = _plan_for(g, k, ell, len(L), budget, omega, "kl" if ell > 1 else "dense-sparse", plan)

    def body(ctx):
        _kl(ctx, list(g.adj), (1 << g.n) - 1, list(range(g.n)), k, ell, L, (), 0, ctx.t)

    out, tally = _run(k, budget, seed, omega, max(g.n, len(L)), body)
    return _report(k, out, tally, plan, _cap(budget))


# ---------------------------------------------------------------------------
# (4, 3) listing and the edge-parameterized Sparse entry
# ---------------------------------------------------------------------------

def _sparse_by_edges(ctx, adj, alive, orig, k, prefix, depth, t) -> None:
    """Sparse step planned from m, then hand over to Dense on what is left."""
    m = _edge_count(adj, alive)
    if alive.bit_count() < k or m < math.comb(k, 2):
        return
    _, x = sparse42_params(k, m, t)
    alive = _sparse_nodes(ctx, adj, alive, orig, k, prefix, depth, t, x)
    if alive.bit_count() > 2 * m / x:
        ctx.bump("bound_violations")
    _dense(ctx, adj, alive, orig, k, prefix, depth, t)


def _four_three(ctx, adj, alive, orig, triangles, t) -> None:
    x = four_three_threshold(len(triangles), t)
    for u, v in _edges(adj, alive):
        apex = adj[u] & adj[v] & alive
        if apex.bit_count() > x:
            continue
        for w, z in cliques_in_mask(adj, apex, 2):
            _emit_local(ctx, (), orig, (u, v, w, z), "light_edge_cliques")
        _drop_edge(adj, u, v)
    _sparse_by_edges(ctx, adj, alive, orig, 4, (), 1, t)


def list_43(g: Graph, triangles, budget: Optional[ListingBudget] = None,
            plan: Optional[ListingPlan] = None, seed: int = 0, omega=2) -> ListingReport:
    """All 4-cliques given every triangle."""
    T = _check_list(g, triangles, 3)
    plan = _plan_for(g, 4, 3, len(T), budget, omega, "4-3", plan)

    def body(ctx):
        _four_three(ctx, list(g.adj), (1 << g.n) - 1, list(range(g.n)), T, ctx.t)

    out, tally = _run(4, budget, seed, omega, max(g.n, len(T)), body)
    return _report(4, out, tally, plan, _cap(budget))


# ---------------------------------------------------------------------------
# six-clique listers
# ---------------------------------------------------------------------------

def _light_k4(ctx, adj, alive, orig, rho, n) -> Set[Clique]:
    """List 6-cliques through K4s in at most rho 6-cliques; return the dense K4s.

    Sampling runs over edges: rows and columns of the product are edges, and
    a K4 {a, b, c, d} is observed through the entry ((a, b), (c, d)).
    """
    k4s = cliques_in_mask(adj, alive, 4)
    room = {q: _common(adj, alive, q) for q in k4s}
    seen: Dict[Tuple[int, int], Set[int]] = {}
    pid: Dict[Clique, int] = {}
    if any(math.comb(room[q].bit_count(), 2) > rho for q in k4s):
        pairs = _edges(adj, alive)
        pid = {p: i for i, p in enumerate(pairs)}

        def rows_for(c):
            return mask_of(pid[e] for e in _edges(adj, _common(adj, alive, c)))

        halves = [(pid[q[:2]], pid[q[2:]]) for q in k4s]
        seen = _sampled_witnesses(ctx, pairs, rho + 1, n, 6, rows_for, halves, len(pairs))
    dense: Set[Clique] = set()
    for q in k4s:
        obs = seen.get((pid[q[:2]], pid[q[2:]]), ()) if pid else ()
        if len(obs) > rho:
            dense.add(q)
            continue
        extra = cliques_in_mask(adj, room[q], 2)
        if len(extra) > rho:
            dense.add(q)
            continue
        for e in extra:
            _emit_local(ctx, (), orig, q + e, "light_k4_cliques")
    return dense


def _dense_k4_in(adj, mask, dense: Set[Clique]) -> List[Clique]:
    return [q for q in cliques_in_mask(adj, mask, 4) if q in dense]


def _node_tier(ctx, adj, alive, orig, limit, depth, t) -> int:
    """Nodes with at most `limit` remaining edges: list 5-cliques around them."""
    for v in bits_list(alive):
        nb = adj[v] & alive
        if nb.bit_count() > limit:
            continue
        if nb.bit_count() >= 5:
            sadj, sorig, _ = _sub(adj, nb, orig)
            _dense(ctx, sadj, (1 << len(sorig)) - 1, sorig, 5, (orig[v],), depth + 1, t)
            ctx.bump("light_node_visits")
        alive &= ~(1 << v)
    return alive


def _six_a(ctx, adj, alive, orig, t) -> None:
    depth = 0
    while alive.bit_count() > 5:
        ctx.deepest(depth)
        n = alive.bit_count()
        rho, lam, x = six_a_params(n, t)
        dense = _light_k4(ctx, adj, alive, orig, rho, n)
        removed = 0
        # light edges: few dense K4s in their common neighbourhood
        edges = _edges(adj, alive)
        seen: Dict[Tuple[int, int], Set[int]] = {}
        dlist = sorted(dense)
        if dlist and len(dlist) > lam and any(
                math.comb((adj[u] & adj[v] & alive).bit_count(), 4) > lam for u, v in edges):
            cm = {q: _common(adj, alive, q) for q in dlist}
            seen = _sampled_witnesses(ctx, dlist, lam + 1, n, 6, lambda q: cm[q],
                                      edges, len(adj))
        for u, v in edges:
            obs = seen.get((u, v))
            if obs is not None and len(obs) > lam:
                continue
            partners = _dense_k4_in(adj, adj[u] & adj[v] & alive, dense)
            if len(partners) > lam:
                continue
            for q in partners:
                _emit_local(ctx, (), orig, (u, v) + q, "light_edge_cliques")
            _drop_edge(adj, u, v)
            removed += 1
        before = alive
        alive = _node_tier(ctx, adj, alive, orig, x, depth, t)
        if alive.bit_count() > 30 * t / (x * lam):
            ctx.bump("bound_violations")
        if not removed and alive == before:
            t *= 2
            ctx.bump("t_doublings")
        depth += 1


def _six_b(ctx, adj, alive, orig, t) -> None:
    depth = 0
    while alive.bit_count() > 5:
        ctx.deepest(depth)
        n = alive.bit_count()
        rho, x, y, clamped = six_b_params(n, t)
        if clamped:
            ctx.bump("y_clamped")
        dense = _light_k4(ctx, adj, alive, orig, rho, n)
        on_edge: Dict[Tuple[int, int], List[Clique]] = {}
        for q in dense:
            for e in combinations(q, 2):
                on_edge.setdefault(e, []).append(q)
        removed = 0
        for u, v in _edges(adj, alive):
            live = [q for q in on_edge.get((u, v), ()) if _is_live(adj, alive, q)]
            if len(live) > x:
                continue
            # partner graph: (w, z) joined iff {u, v, w, z} is a dense K4
            inside = adj[u] & adj[v] & alive
            verts = bits_list(inside)
            pos = {w: i for i, w in enumerate(verts)}
            hadj = [0] * len(verts)
            for q in live:
                w, z = [r for r in q if r != u and r != v]
                hadj[pos[w]] |= 1 << pos[z]
                hadj[pos[z]] |= 1 << pos[w]
            if len(verts) >= 4:
                horig = [orig[w] for w in verts]
                _sparse_by_edges(ctx, hadj, (1 << len(verts)) - 1, horig, 4,
                                 (orig[u], orig[v]), depth + 1, t)
            _drop_edge(adj, u, v)
            removed += 1
        before = alive
        alive = _node_tier(ctx, adj, alive, orig, y, depth, t)
        if not removed and alive == before:
            t *= 2
            ctx.bump("t_doublings")
        depth += 1


def _is_live(adj, alive, q) -> bool:
    for i, u in enumerate(q):
        if not alive >> u & 1:
            return False
        for v in q[i + 1:]:
            if not adj[u] >> v & 1:
                return False
    return True


def _six(g, budget, plan, seed, omega, tag, worker) -> ListingReport:
    plan = _plan_for(g, 6, 1, g.n, budget, omega, tag, plan)

    def body(ctx):
        if g.n > 5:
            worker(ctx, list(g.adj), (1 << g.n) - 1, list(range(g.n)), ctx.t)

    out, tally = _run(6, budget, seed, omega, g.n, body)
    return _report(6, out, tally, plan, _cap(budget))


def list_61_a(g: Graph, budget: Optional[ListingBudget] = None,
              plan: Optional[ListingPlan] = None, seed: int = 0, omega=2) -> ListingReport:
    """6-cliques via light K4s, then light edges against dense K4s, then low-degree nodes."""
    return _six(g, budget, plan, seed, omega, "six-I", _six_a)


def list_61_b(g: Graph, budget: Optional[ListingBudget] = None,
              plan: Optional[ListingPlan] = None, seed: int = 0, omega=2) -> ListingReport:
    """6-cliques via light K4s, then per-light-edge 4-clique listing in partner graphs."""
    return _six(g, budget, plan, seed, omega, "six-II", _six_b)


# ---------------------------------------------------------------------------
# tuple-graph reduction
# ---------------------------------------------------------------------------

@dataclass
class TupleGraph:
    graph: Graph
    nodes: List[Tuple[int, Clique]]  # (block index, vertices of g)
    blocks: List[int]  # block sizes
    ell_cliques: List[Clique]  # ell'-cliques of the tuple graph (may be empty)

    def project(self, clique: Sequence[int]) -> Clique:
        return canonical(v for i in clique for v in self.nodes[i][1])


def _block_sizes(k: int, s: int) -> List[int]:
    kk = -(-k // s)
    return [s] * (kk - 1) + [k - s * (kk - 1)]


def build_tuple_graph(g: Graph, k: int, s: int, parts: Optional[Sequence[Sequence[int]]] = None,
                      ell: Optional[int] = None, ell_cliques=None) -> TupleGraph:
    """Group k vertices into ceil(k/s) blocks of at most s.

    With ``parts`` (k vertex groups of a k-partite g), block i takes one
    vertex from each of its parts.  Without it, every vertex of block i must
    precede every vertex of block i+1; each k-clique then splits into
    blocks in exactly one way, so no k-partite copy is needed.
    """
    sizes = _block_sizes(k, s)
    kk = len(sizes)
    by_size = {r: cliques_in_mask(g.adj, (1 << g.n) - 1, r) for r in set(sizes)}
    nodes: List[Tuple[int, Clique]] = []
    part_of = None
    if parts is not None:
        if len(parts) != k:
            raise ValueError("need exactly k parts")
        part_of = {}
        for i, P in enumerate(parts):
            for v in P:
                part_of[v] = i
        starts = [sum(sizes[:b]) for b in range(kk)]
        for b in range(kk):
            want = list(range(starts[b], starts[b] + sizes[b]))
            for c in by_size[sizes[b]]:
                if sorted(part_of.get(v, -1) for v in c) == want:
                    nodes.append((b, c))
    else:
        for b in range(kk):
            for c in by_size[sizes[b]]:
                nodes.append((b, c))
    cm = [g.common_mask(c) for _, c in nodes]
    km = [mask_of(c) for _, c in nodes]
    N = len(nodes)
    adj = [0] * N
    for i in range(N):
        bi, ci = nodes[i]
        for j in range(i + 1, N):
            bj, cj = nodes[j]
            if bi == bj or km[j] & cm[i] != km[j]:
                continue
            if part_of is None:
                lo, hi = (ci, cj) if bi < bj else (cj, ci)
                if lo[-1] > hi[0]:
                    continue
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    tg = TupleGraph(Graph(N, adj), nodes, sizes, [])
    if ell is not None and ell_cliques is not None:
        tg.ell_cliques = _tuple_ell_cliques(g, tg, -(-ell // s), ell, ell_cliques)
    return tg


def _tuple_ell_cliques(g: Graph, tg: TupleGraph, ellp: int, ell: int, ell_cliques) -> List[Clique]:
    """ell'-cliques of the tuple graph, from the matching cliques of g.

    Each choice of ell' blocks needs cliques of g of the blocks' total size;
    those are listed from g's ell-cliques by the covering lister (or taken
    directly when the total is below ell).
    """
    if ellp == 1:
        return [(i,) for i in range(tg.graph.n)]
    index = {node: i for i, node in enumerate(tg.nodes)}
    L = sorted({canonical(c) for c in ell_cliques})
    cache: Dict[int, List[Clique]] = {}
    out = set()
    for blocks in combinations(range(len(tg.blocks)), ellp):
        total = sum(tg.blocks[b] for b in blocks)
        if total not in cache:
            if total >= ell and L:
                cache[total] = sorted(_covering(L, ell, g, total))
            else:
                cache[total] = cliques_in_mask(g.adj, (1 << g.n) - 1, total)
        for Q in cache[total]:
            for split in _splits(Q, [tg.blocks[b] for b in blocks]):
                ids = []
                for b, part in zip(blocks, split):
                    i = index.get((b, part))
                    if i is None:
                        break
                    ids.append(i)
                else:
                    if tg.graph.is_clique(ids):
                        out.add(canonical(ids))
    return sorted(out)


def _splits(Q: Clique, sizes: List[int]):
    if len(sizes) == 1:
        yield [Q]
        return
    for first in combinations(Q, sizes[0]):
        rest = tuple(v for v in Q if v not in first)
        for tail in _splits(rest, sizes[1:]):
            yield [first] + tail


def list_via_tuple_reduction(g: Graph, k: int, ell: int, s: int,
                             budget: Optional[ListingBudget] = None, ell_cliques=None,
                             parts: Optional[Sequence[Sequence[int]]] = None,
                             partition: str = "order", seed: int = 0, omega=2) -> ListingReport:
    """List k-cliques of g as ceil(k/s)-cliques of a graph on s-tuples.

    ``partition`` picks how g is made k-partite when ``parts`` is not given:
    "order" splits each sorted clique into consecutive blocks, "copy" runs on
    the k-fold partite copy and projects back (each clique then shows up k!
    times before deduplication).
    """
    if not reduction_valid(k, ell, s):
        raise ValueError(f"invalid tuple width s={s} for k={k}, ell={ell}")
    if ell_cliques is None:
        ell_cliques = cliques_in_mask(g.adj, (1 << g.n) - 1, ell)
    source, source_parts, back = g, parts, None
    if parts is None and partition == "copy":
        source = kpartite_copy(g, k)
        source_parts = [list(range(i * g.n, (i + 1) * g.n)) for i in range(k)]
        back = lambda v: v % g.n  # noqa: E731
        ell_cliques = _copy_cliques(g, k, ell_cliques)
    elif parts is None and partition != "order":
        raise ValueError(f"unknown partition mode {partition!r}")
    kk, ellp = -(-k // s), -(-ell // s)
    tg = build_tuple_graph(source, k, s, source_parts, ell, ell_cliques)
    plan = make_plan(k, ell, g.n, g.m, max(1, len(ell_cliques)), budget.t if budget and budget.t else g.n,
                     omega, tag="tuple-reduction", s=s)
    inner = budget
    if back is not None and budget is not None and budget.mode == "capped":
        # every clique of g appears k! times in the partite copy
        inner = ListingBudget.capped(budget.t * math.factorial(k))
    if ellp == 1:
        rep = list_k1(tg.graph, kk, inner, seed=seed, omega=omega)
    else:
        rep = list_kl(tg.graph, kk, ellp, CliqueList(ellp, tg.ell_cliques), inner,
                      seed=seed, omega=omega)
    found = set()
    for c in rep.cliques:
        q = tg.project(c)
        if back is not None:
            q = canonical(back(v) for v in q)
        found.add(q)
    phases = dict(rep.phases)
    phases["tuple_nodes"] = tg.graph.n
    phases["tuple_cliques"] = len(rep.cliques)
    return _report(k, found, phases, plan, _cap(budget))


def _copy_cliques(g: Graph, k: int, ell_cliques) -> List[Clique]:
    """ell-cliques of the k-partite copy: every injective assignment of parts."""
    n = g.n
    out = []
    for c in ell_cliques:
        for assign in _injections(len(c), k):
            out.append(canonical(p * n + v for p, v in zip(assign, c)))
    return out


def _injections(r: int, k: int):
    return permutations(range(k), r)


# ---------------------------------------------------------------------------
# exactly min(Delta_k, t) cliques
# ---------------------------------------------------------------------------

def list_specified_t(g: Graph, k: int, ell: int, ell_cliques, t: int, seed: int = 0,
                     omega=2, lister: Optional[Callable] = None) -> ListingReport:
    """min(Delta_k, t) distinct k-cliques by bounded runs and part halving.

    A run aborted at 2^k t cliques proves the graph has many; the k-partite
    copy is then halved part by part and one of the 2^k subgraphs that still
    overflows (or returns at least k! t) is kept.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    lister = lister or _default_lister(ell, seed, omega)
    L = _check_list(g, ell_cliques, ell)
    tally = {"halvings": 0}
    limit = (1 << k) * t
    first = lister(g, k, L, ListingBudget.capped(limit + 1))
    if len(first.cliques) <= limit:
        return _report(k, set(first.cliques.items[:t]), first.phases, first.plan, None)
    n = g.n
    copy = kpartite_copy(g, k)
    parts = [list(range(i * n, (i + 1) * n)) for i in range(k)]
    copyL = _copy_cliques(g, k, L)
    fact = math.factorial(k)
    goal = fact * t
    limit = (1 << k) * goal
    while True:
        tally["halvings"] += 1
        halves = [(P[:len(P) // 2], P[len(P) // 2:]) for P in parts]
        overflow = None
        for choice in range(1 << k):
            chosen = [halves[i][choice >> i & 1] for i in range(k)]
            keep = sorted(v for P in chosen for v in P)
            sub = copy.induced(keep)
            pos = {v: i for i, v in enumerate(keep)}
            keepset = set(keep)
            subL = [tuple(pos[v] for v in c) for c in copyL if keepset.issuperset(c)]
            rep = lister(sub, k, subL, ListingBudget.capped(limit + 1))
            got = len(rep.cliques)
            if got <= limit and got >= goal:
                found = {canonical(keep[i] % n for i in c) for c in rep.cliques}
                return _report(k, set(sorted(found)[:t]), tally, rep.plan, None)
            if got > limit and overflow is None:
                overflow = chosen
        if overflow is None:
            raise AssertionError("no subgraph overflowed; counting argument violated")
        parts = overflow


def _default_lister(ell: int, seed: int, omega):
    def run(g: Graph, k: int, L, budget: ListingBudget) -> ListingReport:
        if ell == 1:
            return list_k1(g, k, budget, seed=seed, omega=omega)
        return list_kl(g, k, ell, CliqueList(ell, L), budget, seed=seed, omega=omega)
    return run


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

ALGOS = ("auto", "dense-sparse", "kl", "four-three", "six-a", "six-b", "tuple")


def run_algorithm(name: str, g: Graph, k: int, ell: int, ell_cliques,
                  budget: Optional[ListingBudget] = None, seed: int = 0, omega=2,
                  plan: Optional[ListingPlan] = None) -> ListingReport:
    """Run a lister by its command-line name ("tuple:s" selects the width)."""
    if name == "auto":
        return auto_list(g, k, ell, ell_cliques, budget, omega, seed)
    if name == "dense-sparse":
        return list_k1(g, k, budget, plan, seed, omega)
    if name == "kl":
        if ell == 1:
            return list_k1(g, k, budget, plan, seed, omega)
        return list_kl(g, k, ell, ell_cliques, budget, plan, seed, omega)
    if name == "four-three":
        if (k, ell) != (4, 3):
            raise ValueError("four-three lists 4-cliques from triangles (k=4, ell=3)")
        return list_43(g, ell_cliques, budget, plan, seed, omega)
    if name in ("six-a", "six-b"):
        if k != 6:
            raise ValueError(f"{name} lists 6-cliques only")
        fn = list_61_a if name == "six-a" else list_61_b
        return fn(g, budget, plan, seed, omega)
    if name.startswith("tuple:"):
        s = int(name.split(":", 1)[1])
        return list_via_tuple_reduction(g, k, ell, s, budget, ell_cliques, seed=seed, omega=omega)
    raise ValueError(f"unknown algorithm {name!r}")


_TAG_TO_ALGO = {"dense-sparse": "dense-sparse", "kl": "kl", "4-3": "four-three",
                "six-I": "six-a", "six-II": "six-b"}


def auto_list(g: Graph, k: int, ell: int, ell_cliques, budget: Optional[ListingBudget] = None,
              omega=2, seed: int = 0, t_hint: Optional[int] = None) -> ListingReport:
    """Run whichever algorithm the planner predicts is cheapest."""
    L = _check_list(g, ell_cliques, ell)
    t = t_hint or (budget.t if budget is not None and budget.t else max(1, g.n))
    plan = make_plan(k, ell, g.n, g.m, max(1, len(L)), t, omega)
    if plan.tag == "tuple-reduction":
        rep = list_via_tuple_reduction(g, k, ell, plan.s, budget, L, seed=seed, omega=omega)
    else:
        rep = run_algorithm(_TAG_TO_ALGO[plan.tag], g, k, ell, CliqueList(ell, L), budget, seed,
                            omega)
    rep.plan = plan
    return rep
