"""Graph representation, ingestion, generators and structural transforms.

Adjacency rows are Python ints used as bitsets: bit j of ``adj[i]`` is set
iff {i, j} is an edge.  Intersections are plain ``&``.
"""
from __future__ import annotations

import json
import math
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, Tuple

Clique = Tuple[int, ...]

MASK64 = (1 << 64) - 1


class GraphFormatError(ValueError):
    """Malformed edge-list input."""


class SplitMix64:
    """Portable 64-bit generator (Steele, Lea and Flood's splitmix64)."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), rejection sampled; works for big n."""
        if n <= 0:
            raise ValueError("randbelow needs n > 0")
        bits = n.bit_length()
        while True:
            r = 0
            got = 0
            while got < bits:
                r = (r << 64) | self.next_u64()
                got += 64
            r >>= got - bits
            if r < n:
                return r

    def shuffle(self, items: List) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: Sequence, r: int) -> List:
        pool = list(items)
        r = min(r, len(pool))
        for i in range(r):
            j = i + self.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:r]

    def spawn(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_list(x: int) -> List[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "m", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Optional[Sequence[int]] = None) -> None:
        self.n = n
        self.adj = tuple(adj)
        self.m = sum(a.bit_count() for a in self.adj) // 2
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValueError("vertex labels must be injective and cover every vertex")
        self.labels = labels

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[int]] = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << i) for i in range(n)])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> List[int]:
        return bits_list(self.adj[v])

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def is_clique(self, vertices: Sequence[int]) -> bool:
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            return False
        for i, u in enumerate(vs):
            if u < 0 or u >= self.n:
                return False
            need = mask_of(vs[i + 1:])
            if self.adj[u] & need != need:
                return False
        return True

    def common_mask(self, vertices: Iterable[int]) -> int:
        """Bitset of vertices adjacent to every given vertex."""
        m = (1 << self.n) - 1
        for v in vertices:
            m &= self.adj[v]
        return m

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new vertex i carries the label of vertices[i]."""
        order = list(vertices)
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            row = 0
            for u in iter_bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    row |= 1 << j
            adj.append(row)
        return Graph(len(order), adj, [self.label(v) for v in order])

    def induced_mask(self, mask: int) -> "Graph":
        return self.induced(bits_list(mask))

    def without_edges(self, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, adj, self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v becomes perm[v]."""
        adj = [0] * self.n
        for u in range(self.n):
            row = 0
            for v in iter_bits(self.adj[u]):
                row |= 1 << perm[v]
            adj[perm[u]] = row
        return Graph(self.n, adj)


def canonical(vertices: Iterable[int]) -> Clique:
    return tuple(sorted(vertices))


class CliqueList:
    """Duplicate-free, lexicographically sorted cliques of one size."""

    __slots__ = ("k", "items")

    def __init__(self, k: int, items: Iterable[Sequence[int]] = ()) -> None:
        self.k = k
        uniq = {canonical(c) for c in items}
        for c in uniq:
            if len(c) != k:
                raise ValueError(f"clique {c} does not have size {k}")
            if len(set(c)) != k:
                raise ValueError(f"clique {c} repeats a vertex")
        self.items: Tuple[Clique, ...] = tuple(sorted(uniq))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Clique]:
        return iter(self.items)

    def __contains__(self, c) -> bool:
        return canonical(c) in set(self.items)

    def __eq__(self, other) -> bool:
        if isinstance(other, CliqueList):
            return self.k == other.k and self.items == other.items
        return NotImplemented

    def __repr__(self) -> str:
        return f"CliqueList(k={self.k}, size={len(self.items)})"

    def as_set(self) -> set:
        return set(self.items)

    def to_lines(self, g: Optional[Graph] = None) -> str:
        rows = self.items if g is None else [canonical(g.label(v) for v in c) for c in self.items]
        return "".join(" ".join(map(str, c)) + "\n" for c in rows)

    def to_json(self, g: Optional[Graph] = None) -> str:
        rows = self.items if g is None else [canonical(g.label(v) for v in c) for c in self.items]
        return json.dumps([list(c) for c in rows])


# ---------------------------------------------------------------------------
# edge-list I/O
# ---------------------------------------------------------------------------

def _parse_lines(source: TextIO, weighted: bool):
    declared = None
    rows = []
    for lineno, raw in enumerate(source, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit() or declared is not None or rows:
                raise GraphFormatError(f"line {lineno}: bad header {raw.strip()!r}")
            declared = int(parts[1])
            continue
        want = 3 if weighted else 2
        if len(parts) != want:
            raise GraphFormatError(f"line {lineno}: expected {want} fields, got {raw.strip()!r}")
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field in {raw.strip()!r}") from None
        u, v = vals[0], vals[1]
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop on vertex {u} rejected")
        rows.append((lineno, vals))
    return declared, rows


def _densify(declared: Optional[int], ids: Iterable[int]):
    ids = sorted(set(ids))
    if declared is not None:
        if ids and ids[-1] >= declared:
            raise GraphFormatError(f"vertex id {ids[-1]} exceeds declared count {declared}")
        return declared, None
    if ids == list(range(len(ids))):
        return len(ids), None
    return len(ids), {v: i for i, v in enumerate(ids)}


def load_edge_list(source: TextIO) -> Graph:
    """Parse "u v" lines (optional "n <count>" header, '#' comments).

    With a header, ids are taken as-is in 0..count-1.  Without one, ids are
    compacted to 0..n-1 and the original ids kept as labels.
    """
    declared, rows = _parse_lines(source, weighted=False)
    n, remap = _densify(declared, (x for _, (u, v) in rows for x in (u, v)))
    edges = [(u, v) if remap is None else (remap[u], remap[v]) for _, (u, v) in rows]
    labels = None if remap is None else sorted(remap, key=remap.get)
    return Graph.from_edges(n, edges, labels)


def load_weighted_edge_list(source: TextIO) -> Tuple[Graph, Dict[Tuple[int, int], int]]:
    declared, rows = _parse_lines(source, weighted=True)
    n, remap = _densify(declared, (x for _, (u, v, _w) in rows for x in (u, v)))
    weights: Dict[Tuple[int, int], int] = {}
    for lineno, (u, v, w) in rows:
        if remap is not None:
            u, v = remap[u], remap[v]
        key = (min(u, v), max(u, v))
        if key in weights and weights[key] != w:
            raise GraphFormatError(f"line {lineno}: conflicting weight for edge {key}")
        weights[key] = w
    labels = None if remap is None else sorted(remap, key=remap.get)
    return Graph.from_edges(n, weights, labels), weights


def save_edge_list(g: Graph, sink: TextIO, weights: Optional[Dict[Tuple[int, int], int]] = None) -> None:
    sink.write(f"n {g.n}\n")
    for u, v in g.edges():
        if weights is None:
            sink.write(f"{u} {v}\n")
        else:
            sink.write(f"{u} {v} {weights[(u, v)]}\n")


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability {p} outside [0, 1]")


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawing pairs (i, j), i < j, in row-major order."""
    _check_p(p)
    rng = SplitMix64(seed)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


def gen_planted(n: int, p: float, k: int, seed: int) -> Graph:
    if k > n:
        raise ValueError(f"cannot plant a {k}-clique in {n} vertices")
    base = gen_random(n, p, seed)
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    chosen = rng.sample(range(n), k)
    adj = list(base.adj)
    for u in chosen:
        adj[u] |= mask_of(chosen) & ~(1 << u)
    return Graph(n, adj)


def planted_vertices(n: int, k: int, seed: int) -> Clique:
    """The k-subset gen_planted forces complete for this seed."""
    return canonical(SplitMix64(seed ^ 0x5DEECE66D).sample(range(n), k))


def gen_kpartite_random(parts: int, per_part: int, p: float, seed: int) -> Graph:
    """Part i holds vertices i*per_part .. (i+1)*per_part - 1."""
    if parts < 2:
        raise ValueError("need at least two parts")
    _check_p(p)
    rng = SplitMix64(seed)
    n = parts * per_part
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if u // per_part != v // per_part and rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    n = len(part)
    adj = [0] * n
    for u in range(n):
        for v in range(n):
            if part[u] != part[v]:
                adj[u] |= 1 << v
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def common_neighborhood(g: Graph, c: Sequence[int]) -> Graph:
    """Induced subgraph on vertices adjacent to all of c; labels map into g."""
    if not g.is_clique(c):
        raise ValueError(f"{tuple(c)} is not a clique")
    return g.induced_mask(g.common_mask(c))


def kpartite_copy(g: Graph, k: int) -> Graph:
    """Vertex v of part i becomes i*n + v; (u_i, v_j) is an edge iff i != j and uv in E.

    The original vertex of copy c is ``c % g.n``.
    """
    n = g.n
    adj = [0] * (k * n)
    for i in range(k):
        for v in range(n):
            row = 0
            for j in range(k):
                if j != i:
                    row |= g.adj[v] << (j * n)
            adj[i * n + v] = row
    return Graph(k * n, adj)


def pad_to_clique_count(g: Graph, k: int, extra: int) -> Graph:
    """Disjoint union with a complete k-partite graph with parts of ceil(extra^(1/k))."""
    if extra < 0:
        raise ValueError("target addition must be nonnegative")
    if extra == 0:
        return g
    s = int_root_ceil(extra, k)
    pad = complete_multipartite([s] * k)
    adj = list(g.adj) + [row << g.n for row in pad.adj]
    return Graph(g.n + pad.n, adj)


def int_root_ceil(x: int, k: int) -> int:
    """Smallest s with s**k >= x."""
    s = max(0, int(round(x ** (1.0 / k))))
    while s ** k < x:
        s += 1
    while s > 0 and (s - 1) ** k >= x:
        s -= 1
    return s
