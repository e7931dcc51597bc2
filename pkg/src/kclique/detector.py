"""Clique detection and counting from the list of all ell-cliques.

The (a, b, c) split and per-size thresholds come from the planner.  Small
subcliques with few ell-cliques around them are handled by recursing into
their common neighbourhood; everything else meets in one boolean product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .boolmat import BoolMatrix, count_multiply, witness_multiply
from .cliques import _covering, cliques_in_mask, sub_index
from .graph import Clique, CliqueList, Graph, bits_list, canonical, mask_of
from .planner import ExponentReport, detection_exponent


@dataclass
class DetectionOutcome:
    found: bool
    witness: Optional[Clique] = None
    count: Optional[int] = None


def _prepare(g: Graph, k: int, ell_cliques) -> Tuple[int, List[Clique]]:
    items = sorted({canonical(c) for c in ell_cliques})
    ell = ell_cliques.k if isinstance(ell_cliques, CliqueList) else (len(items[0]) if items else None)
    for c in items:
        if len(c) != ell or not g.is_clique(c):
            raise ValueError(f"{c} is not an {ell}-clique of the graph")
    if ell is None:
        raise ValueError("cannot infer ell from an empty plain list; pass a CliqueList")
    if not 1 <= ell <= k:
        raise ValueError(f"need 1 <= ell <= k, got ell={ell}, k={k}")
    return ell, items


def _report_for(k: int, ell: int, report: Optional[ExponentReport], omega) -> ExponentReport:
    if report is not None and (report.k, report.ell) == (k, ell):
        return report
    omega = report.omega if report is not None else omega
    return detection_exponent(k, ell, omega)


def _threshold(delta: int, x) -> int:
    return int(math.ceil(delta ** float(x) - 1e-9))


def _neighbourhood(g: Graph, K: Clique, stripped: List[Clique]):
    verts = bits_list(g.common_mask(K))
    pos = {v: i for i, v in enumerate(verts)}
    sub = g.induced(verts)
    return sub, verts, [tuple(pos[v] for v in r) for r in stripped]


def _edge_in(g: Graph, mask: int) -> Optional[Clique]:
    for v in bits_list(mask):
        hit = g.adj[v] & mask
        if hit:
            return canonical((v, (hit & -hit).bit_length() - 1))
    return None


def _split_lists(g, k, ell, L, report, omega, on_low):
    """Build L_a, L_b, L_c; call on_low(K, d, stripped) for low-degree cliques.

    on_low may return a value to stop early; it is passed through.
    """
    delta = len(L)
    lists: Dict[int, List[Clique]] = {}
    for d in sorted(set(report.choice), reverse=True):
        if d >= ell:
            lists[d] = sorted(_covering(L, ell, g, d))
            continue
        idx = sub_index(L, d)
        cap = _threshold(delta, report.thresholds[d])
        high = []
        for K in sorted(idx):
            if len(idx[K]) <= cap:
                res = on_low(K, d, idx[K])
                if res is not None:
                    return None, res
            else:
                high.append(K)
        lists[d] = high
    return lists, None


def _product_matrices(g: Graph, La, Lb, Lc):
    cm = {K: g.common_mask(K) for K in set(La) | set(Lb)}
    km = {K: mask_of(K) for K in set(Lb) | set(Lc)}

    def joined(rows, cols):
        bits = []
        for R in rows:
            c = cm[R]
            b = 0
            for j, C in enumerate(cols):
                if km[C] & c == km[C]:
                    b |= 1 << j
            bits.append(b)
        return BoolMatrix(len(rows), len(cols), bits, rows, cols)

    return joined(La, Lb), joined(Lb, Lc), cm, km


def _detect(g: Graph, k: int, ell: int, L: List[Clique], omega, report=None) -> Optional[Clique]:
    if not L:
        return None
    if k == ell:
        return L[0]
    if k == 2:
        return _edge_in(g, mask_of(c[0] for c in L))
    report = _report_for(k, ell, report, omega)

    def on_low(K, d, stripped):
        sub, verts, subL = _neighbourhood(g, K, stripped)
        w = _detect(sub, k - d, ell - d, subL, omega)
        if w is not None:
            return canonical(K + tuple(verts[i] for i in w))
        return None

    lists, hit = _split_lists(g, k, ell, L, report, omega, on_low)
    if hit is not None:
        return hit
    a, b, c = report.choice
    La, Lb, Lc = lists[a], lists[b], lists[c]
    if not (La and Lb and Lc):
        return None
    X, Y, cm, km = _product_matrices(g, La, Lb, Lc)
    Z = witness_multiply(X, Y)
    for i, Ka in enumerate(La):
        row = Z.exists.bits[i]
        for j in bits_list(row):
            Kc = Lc[j]
            if km[Kc] & cm[Ka] == km[Kc]:
                return canonical(Ka + Lb[Z.witness[i][j]] + Kc)
    return None


def detect(g: Graph, k: int, ell_cliques, report: Optional[ExponentReport] = None,
           omega=2) -> DetectionOutcome:
    """Decide whether g has a k-clique given all of its ell-cliques."""
    ell, L = _prepare(g, k, ell_cliques)
    w = _detect(g, k, ell, L, omega, report)
    return DetectionOutcome(w is not None, w)


def _decompositions(Q: Clique, parts, member) -> int:
    a, b, c = parts
    total = 0
    for A in combinations(Q, a):
        if A not in member[0]:
            continue
        rest = [v for v in Q if v not in A]
        for B in combinations(rest, b):
            if B not in member[1]:
                continue
            C = tuple(v for v in rest if v not in B)
            if C in member[2]:
                total += 1
    return total


def _count(g: Graph, k: int, ell: int, L: List[Clique], omega, stats: Optional[dict] = None) -> int:
    if not L:
        return 0
    if k == ell:
        return len(L)
    if k == 2:
        mask = mask_of(c[0] for c in L)
        return sum((g.adj[v] & mask).bit_count() for v in bits_list(mask)) // 2
    report = detection_exponent(k, ell, omega)
    low_found: Set[Clique] = set()

    def on_low(K, d, stripped):
        sub, verts, subL = _neighbourhood(g, K, stripped)
        for q in _covering(subL, ell - d, sub, k - d):
            low_found.add(canonical(K + tuple(verts[i] for i in q)))
        return None

    lists, _ = _split_lists(g, k, ell, L, report, omega, on_low)
    a, b, c = report.choice
    La, Lb, Lc = lists[a], lists[b], lists[c]
    product = 0
    if La and Lb and Lc:
        X, Y, cm, km = _product_matrices(g, La, Lb, Lc)
        C = count_multiply(X, Y)
        for i, Ka in enumerate(La):
            for j, Kc in enumerate(Lc):
                if C[i][j] and km[Kc] & cm[Ka] == km[Kc]:
                    product += C[i][j]
    member = (set(La), set(Lb), set(Lc))
    overlap = sum(_decompositions(Q, (a, b, c), member) for Q in low_found)
    mult = math.factorial(k) // (math.factorial(a) * math.factorial(b) * math.factorial(c))
    rest, rem = divmod(product - overlap, mult)
    if rem or rest < 0:
        raise AssertionError("product-phase count is not a whole number of cliques")
    if stats is not None:
        stats["low_phase"] = stats.get("low_phase", 0) + len(low_found)
        stats["product_phase"] = stats.get("product_phase", 0) + rest
    return len(low_found) + rest


def count(g: Graph, k: int, ell_cliques, report: Optional[ExponentReport] = None,
          omega=2, stats: Optional[dict] = None) -> int:
    """Exact number of k-cliques.

    Cliques through a low-degree subclique are collected once (a set, so
    each is credited to a single phase); the product phase counts ordered
    (a, b, c) decompositions, from which the decompositions of already
    collected cliques are removed before dividing by the multinomial.
    """
    ell, L = _prepare(g, k, ell_cliques)
    if report is not None:
        omega = report.omega
    return _count(g, k, ell, L, omega, stats)


def find_witness(g: Graph, k: int, ell_cliques, report: Optional[ExponentReport] = None,
                 omega=2) -> Optional[Clique]:
    """A k-clique found by repeatedly dropping one of k+1 vertex groups."""
    ell, L = _prepare(g, k, ell_cliques)
    if report is not None:
        omega = report.omega
    if _detect(g, k, ell, L, omega) is None:
        return None
    verts = sorted({v for c in L for v in c})
    while len(verts) > 2 * k:
        size = len(verts)
        bounds = [size * i // (k + 1) for i in range(k + 2)]
        for i in range(k + 1):
            drop = set(verts[bounds[i]:bounds[i + 1]])
            keep = [v for v in verts if v not in drop]
            subL = [c for c in L if not drop.intersection(c)]
            sub = g.induced(keep)
            pos = {v: j for j, v in enumerate(keep)}
            if _detect(sub, k, ell, [tuple(pos[v] for v in c) for c in subL], omega) is not None:
                verts, L = keep, subL
                break
        else:
            raise AssertionError("no group could be dropped")
    sub = g.induced(verts)
    found = cliques_in_mask(sub.adj, (1 << sub.n) - 1, k)
    return canonical(verts[i] for i in found[0])
