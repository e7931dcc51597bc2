"""Clique oracles, the covering-list lister, and clique-degree statistics."""
from __future__ import annotations

import math
from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .graph import Clique, CliqueList, Graph, bits_list, canonical, mask_of


def cliques_in_mask(adj: Sequence[int], mask: int, r: int) -> List[Clique]:
    """All r-cliques inside the vertex bitset, in lexicographic order."""
    out: List[Clique] = []
    if r == 0:
        return [()]

    def rec(cand: int, prefix: Tuple[int, ...], need: int) -> None:
        if need == 1:
            for v in bits_list(cand):
                out.append(prefix + (v,))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & adj[v]
            if nxt.bit_count() >= need - 1:
                rec(nxt, prefix + (v,), need - 1)

    rec(mask, (), r)
    return out


def count_in_mask(adj: Sequence[int], mask: int, r: int) -> int:
    """Number of r-cliques inside the vertex bitset."""
    if r == 0:
        return 1
    if r == 1:
        return mask.bit_count()
    total = 0
    cand = mask
    if r == 2:
        while cand:
            low = cand & -cand
            cand ^= low
            total += (cand & adj[low.bit_length() - 1]).bit_count()
        return total
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nxt = cand & adj[v]
        if nxt.bit_count() >= r - 1:
            total += count_in_mask(adj, nxt, r - 1)
    return total


def brute_force_cliques(g: Graph, k: int) -> CliqueList:
    """Every k-clique by ordered extension."""
    if k <= 0:
        return CliqueList(k, [()] if k == 0 else [])
    return CliqueList(k, cliques_in_mask(g.adj, (1 << g.n) - 1, k))


def count_cliques_oracle(g: Graph, k: int) -> int:
    if k < 0:
        return 0
    return count_in_mask(g.adj, (1 << g.n) - 1, k)


def _as_tuples(L) -> List[Clique]:
    return [canonical(c) for c in L]


def _validate(L: Sequence[Clique], g: Graph) -> None:
    for c in L:
        if not g.is_clique(c):
            raise ValueError(f"{c} is not a clique of the graph")


def covered(clique: Sequence[int], ell: int, members: Set[Clique]) -> bool:
    """True iff every ell-subset of the clique lies in members."""
    return all(sub in members for sub in combinations(sorted(clique), ell))


def list_cliques_simple(L, g: Graph, k: int) -> CliqueList:
    """k-cliques all of whose ell-subcliques appear in L (ell = size of L's items).

    Splits the (ell-1)-cliques inside L by how many items of L contain them:
    light ones (at most x = max(1, floor(|L|^(1/ell))) items) are extended by
    brute force over their apex vertices; the heavy ones form the list for a
    recursive call, whose output is then filtered back against L.
    """
    items = _as_tuples(L)
    ell = L.k if isinstance(L, CliqueList) else (len(items[0]) if items else None)
    if not items:
        return CliqueList(k)
    _validate(items, g)
    if k < ell:
        raise ValueError(f"cannot list {k}-cliques from {ell}-cliques")
    return CliqueList(k, _covering(items, ell, g, k))


def _covering(items: List[Clique], ell: int, g: Graph, k: int) -> Set[Clique]:
    members = set(items)
    if k == ell:
        return members
    if ell == 1:
        mask = mask_of(c[0] for c in items)
        return set(cliques_in_mask(g.adj, mask, k))
    x = max(1, int(math.floor(len(members) ** (1.0 / ell) + 1e-9)))
    apex: Dict[Clique, int] = defaultdict(int)
    for c in members:
        for i in range(ell):
            apex[c[:i] + c[i + 1:]] |= 1 << c[i]
    found: Set[Clique] = set()
    heavy: List[Clique] = []
    for sub, amask in apex.items():
        if amask.bit_count() > x:
            heavy.append(sub)
            continue
        # the remaining k-ell+1 vertices all come from this apex set
        for rest in cliques_in_mask(g.adj, amask, k - ell + 1):
            q = canonical(sub + rest)
            if q not in found and covered(q, ell, members):
                found.add(q)
    if heavy:
        for q in _covering(heavy, ell - 1, g, k):
            if q not in found and covered(q, ell, members):
                found.add(q)
    return found


class CliqueDegreeIndex(dict):
    """Map from each listed clique K to Delta_ell(K)."""

    def __init__(self, ell: int, data: Dict[Clique, int]) -> None:
        super().__init__(data)
        self.ell = ell


def clique_degrees(g: Graph, cliques, ell: int) -> CliqueDegreeIndex:
    """Delta_ell(K) for each K, counted inside K's common neighborhood."""
    out = {}
    for c in _as_tuples(cliques):
        r = ell - len(c)
        if r < 0:
            raise ValueError("clique larger than ell")
        out[c] = count_in_mask(g.adj, g.common_mask(c), r) if c else count_in_mask(g.adj, (1 << g.n) - 1, r)
    return CliqueDegreeIndex(ell, out)


def sub_index(ell_cliques: Iterable[Clique], d: int) -> Dict[Clique, List[Clique]]:
    """For each d-clique contained in some listed clique, the stripped remainders."""
    idx: Dict[Clique, List[Clique]] = defaultdict(list)
    for c in ell_cliques:
        for sub in combinations(c, d):
            s = set(sub)
            idx[sub].append(tuple(v for v in c if v not in s))
    return idx
