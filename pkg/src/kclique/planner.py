"""Exact-rational exponent planner.

Everything here works on ``fractions.Fraction``.  Floats appear only in
``make_plan``, where concrete parameters are evaluated at actual sizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

Rational = Fraction
OmegaABC = Callable[[Fraction, Fraction, Fraction], Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**9)
    return Fraction(value)


def square_split_omega(omega: Fraction) -> OmegaABC:
    """MM(A,B,C) <= A^(omega-2) B C with A the smallest side."""
    def cost(a: Fraction, b: Fraction, c: Fraction) -> Fraction:
        lo = min(a, b, c)
        return (omega - 2) * lo + (a + b + c - lo)
    return cost


# ---------------------------------------------------------------------------
# detection DP
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentReport:
    k: int
    ell: int
    omega: Fraction
    g: Fraction
    choice: Tuple[int, int, int]
    thresholds: Dict[int, Fraction]
    trace: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "ell": self.ell,
            "omega": str(self.omega),
            "g": str(self.g),
            "choice": list(self.choice),
            "thresholds": {str(d): str(x) for d, x in sorted(self.thresholds.items())},
            "trace": {f"{a},{b}": str(v) for (a, b), v in sorted(self.trace.items())},
        }


def partitions3(k: int) -> List[Tuple[int, int, int]]:
    """All a >= b >= c >= 1 with a + b + c = k, lexicographically ascending."""
    out = []
    for a in range(1, k - 1):
        for b in range(1, a + 1):
            c = k - a - b
            if 1 <= c <= b:
                out.append((a, b, c))
    return sorted(out)


def _balance(sub_g: Dict[int, Fraction], ell: int, parts: Tuple[int, int, int],
             mm: OmegaABC) -> Tuple[Fraction, Dict[int, Fraction]]:
    """Smallest z with z >= product exponent given thresholds that keep every
    recursion cost 1 + x_d (g_d - 1) at most z.

    Each size exponent is piecewise linear and non-increasing in z, and the
    product exponent is monotone in the sizes, so h(z) = z - mm(sizes(z)) is
    increasing and piecewise linear.  We locate its root between consecutive
    breakpoints and interpolate exactly.
    """
    floor = max([Fraction(1)] + [Fraction(d, ell) for d in parts if d >= ell])

    def x_of(d: int, z: Fraction) -> Fraction:
        gd = sub_g[d]
        if gd <= 1:
            return Fraction(1)
        return min(Fraction(1), max(Fraction(0), (z - 1) / (gd - 1)))

    def size(d: int, z: Fraction) -> Fraction:
        if d >= ell:
            return Fraction(d, ell)
        return 1 - x_of(d, z)

    def h(z: Fraction) -> Fraction:
        a, b, c = (size(d, z) for d in parts)
        return z - mm(a, b, c)

    # breakpoints: thresholds saturating, and pairwise crossings of sizes
    points = {floor}
    low = [d for d in set(parts) if d < ell]
    for d in low:
        points.add(max(floor, sub_g[d]))
    lines = {}
    for d in set(parts):
        if d >= ell:
            lines[d] = (Fraction(0), Fraction(d, ell))
        elif sub_g[d] > 1:
            slope = -1 / (sub_g[d] - 1)
            lines[d] = (slope, 1 - slope)  # 1 - (z-1)/(g-1)
        else:
            lines[d] = (Fraction(0), Fraction(0))
    keys = sorted(lines)
    for i, d1 in enumerate(keys):
        for d2 in keys[i + 1:]:
            s1, c1 = lines[d1]
            s2, c2 = lines[d2]
            if s1 != s2:
                z = (c2 - c1) / (s1 - s2)
                if z > floor:
                    points.add(z)
            for d, (s, c) in ((d1, lines[d1]), (d2, lines[d2])):
                if s != 0:
                    z = -c / s  # size hits zero
                    if z > floor:
                        points.add(z)
    pts = sorted(points)
    top = pts[-1]
    # beyond the last breakpoint every size is constant, so h has slope 1
    pts.append(top + 1 + max(Fraction(0), -h(top)))
    if h(pts[0]) >= 0:
        z = pts[0]
    else:
        z = None
        for lo, hi in zip(pts, pts[1:]):
            hl, hh = h(lo), h(hi)
            if hl < 0 <= hh:
                z = lo - hl * (hi - lo) / (hh - hl)
                break
        assert z is not None
    return z, {d: x_of(d, z) for d in low}


def detection_exponent(k: int, ell: int, omega=2,
                       omega_abc: Optional[OmegaABC] = None) -> ExponentReport:
    """Exponent g(k, ell) of the low/high clique-degree detection scheme."""
    if k < 2 or ell < 1 or ell >= k:
        raise ValueError(f"need k >= 2 and 1 <= ell < k, got k={k}, ell={ell}")
    omega = as_rational(omega)
    if omega_abc is None:
        return _detection_cached(k, ell, omega)
    return _detection(k, ell, omega, omega_abc, {})


@lru_cache(maxsize=None)
def _detection_cached(k: int, ell: int, omega: Fraction) -> ExponentReport:
    return _detection(k, ell, omega, square_split_omega(omega), None)


def _detection(k: int, ell: int, omega: Fraction, mm: OmegaABC,
               memo: Optional[dict]) -> ExponentReport:
    if k == 2:
        return ExponentReport(2, 1, omega, Fraction(2), (1, 1, 0), {}, {})

    def sub(kk: int, ll: int) -> Fraction:
        if memo is None:
            return _detection_cached(kk, ll, omega).g
        if (kk, ll) not in memo:
            memo[(kk, ll)] = _detection(kk, ll, omega, mm, memo).g
        return memo[(kk, ll)]

    best = None
    for parts in partitions3(k):
        sub_g = {}
        for d in set(parts):
            if d < ell:
                sub_g[d] = sub(k - d, ell - d)
        z, xs = _balance(sub_g, ell, parts, mm)
        if best is None or z < best[0]:
            trace = {(k - d, ell - d): g for d, g in sub_g.items()}
            best = (z, parts, xs, trace)
    z, parts, xs, trace = best
    return ExponentReport(k, ell, omega, z, parts, xs, trace)


def detection_table(kmax: int = 12, ellmax: int = 5, omega=2) -> Dict[Tuple[int, int], Fraction]:
    """g(k, ell) for 3 <= k <= kmax, 1 <= ell <= min(ellmax, k-1)."""
    return {(k, l): detection_exponent(k, l, omega).g
            for l in range(1, ellmax + 1) for k in range(3, kmax + 1) if l < k}


# ---------------------------------------------------------------------------
# limit curves f_i(C)
# ---------------------------------------------------------------------------

def f_index(C) -> int:
    """The i with 1/C in (1 - (2/3)^i, 1 - (2/3)^(i+1)]."""
    C = as_rational(C)
    if C <= 1:
        raise ValueError("C must exceed 1")
    inv = 1 / C
    i = 0
    while not (1 - Fraction(2, 3) ** i < inv <= 1 - Fraction(2, 3) ** (i + 1)):
        i += 1
    return i


def f_i_bound(C, i: int, omega=2) -> Fraction:
    """Closed form of the limit curve f_i(C)."""
    C, w = as_rational(C), as_rational(omega)
    if C <= 1 or i < 0:
        raise ValueError("need C > 1 and i >= 0")
    two, three = Fraction(2) ** i, Fraction(3) ** i
    wm = (w - 1) ** i
    num = two * w ** (i + 1) * C
    den = 3 * three * wm + (3 * (two - three) * wm - two * wm * w + two * w ** (i + 1)) * C
    if den == 0:
        raise ValueError("C outside the domain of f_i")
    return num / den


def f_i_recurrence(C, i: int, omega=2) -> Fraction:
    """f_0 = omega C / 3, f_i(C) = omega / (1 + (omega-1)/f_{i-1}(2C/(3-C)))."""
    C, w = as_rational(C), as_rational(omega)
    if C <= 1 or i < 0:
        raise ValueError("need C > 1 and i >= 0")
    if i == 0:
        return w * C / 3
    if C >= 3:
        raise ValueError("recurrence undefined for C >= 3")
    inner = f_i_recurrence(2 * C / (3 - C), i - 1, w)
    return w / (1 + (w - 1) / inner)


# ---------------------------------------------------------------------------
# listing exponents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ListingExponents:
    k: int
    ell: int
    omega: Fraction
    x_k: Fraction
    y_k: Fraction
    z_kl: Fraction
    alpha: Fraction
    gamma: Fraction
    gamma_exact: bool  # False when gamma is only a valid (not optimal) threshold

    def as_dict(self) -> dict:
        return {k: (str(v) if isinstance(v, Fraction) else v)
                for k, v in self.__dict__.items()}


def x_seq(k: int, omega) -> Fraction:
    w = as_rational(omega)
    prod = Fraction(1)
    for j in range(2, k + 1):
        prod *= (5 - 2 * j) + (j - 2) * w
    return k * prod


def y_seq(k: int, omega) -> Fraction:
    w = as_rational(omega)
    total = (3 - w) ** (k - 2)
    for j in range(2, k):
        total += (3 - w) ** (k - 1 - j) * x_seq(j, w)
    return total


def z_seq(k: int, ell: int, omega) -> Fraction:
    w = as_rational(omega)
    total = Fraction(0)
    for i in range(ell):
        total += Fraction(k - ell, k - i - 1) * y_seq(k - i, w) / x_seq(k - i, w)
    return x_seq(k, w) * total


def z_recurrence(k: int, ell: int, omega) -> Fraction:
    """z_{k,l} = (x_k/x_{k-1}) z_{k-1,l-1} + (k-l)/(k-1) y_k, z_{k,1} = y_k."""
    w = as_rational(omega)
    if ell == 1:
        return y_seq(k, w)
    return (x_seq(k, w) / x_seq(k - 1, w) * z_recurrence(k - 1, ell - 1, w)
            + Fraction(k - ell, k - 1) * y_seq(k, w))


def alpha_k(k: int, omega) -> Fraction:
    return x_seq(k, omega) / y_seq(k, omega)


def alpha_recurrence(k: int, omega) -> Fraction:
    """alpha_2 = 2 and alpha_k = k a((5-2k)+(k-2)w) / ((k-1)(3+a-w))."""
    w = as_rational(omega)
    if k == 2:
        return Fraction(2)
    a = alpha_recurrence(k - 1, w)
    return k * a * ((5 - 2 * k) + (k - 2) * w) / ((k - 1) * (3 + a - w))


def gamma_k(k: int, omega) -> Fraction:
    w = as_rational(omega)
    if k == 2:
        return Fraction(0)
    return k * (1 - (3 - w) / (k - alpha_k(k, w)))


def alpha_kl(k: int, ell: int, omega) -> Fraction:
    return x_seq(k, omega) / z_seq(k, ell, omega)


def epsilon_kl(k: int, ell: int, omega) -> Fraction:
    """Slack with gamma_{k,l} = (1 - eps) k / l, valid for any omega (ell >= 2)."""
    w = as_rational(omega)
    gk = gamma_k(k, w)
    q = alpha_kl(k, ell, w) / alpha_k(k, w)
    eps1 = (k - gk) / (ell * q * gk + k - gk)
    if ell - 1 == 1:
        prev = gamma_k(k - 1, w)
    else:
        prev = gamma_kl(k - 1, ell - 1, w)
    eps_prev = 1 - prev * (ell - 1) / (k - 1)
    num = (k - 1) * (ell - 1) * eps_prev
    den = (q * ell - 1) * (k - 1) * eps_prev + ell * ((k - 1) - q * (k - ell))
    return min(eps1, num / den)


def gamma_kl(k: int, ell: int, omega) -> Fraction:
    w = as_rational(omega)
    if ell == 1:
        return gamma_k(k, w)
    if w == 2:
        return Fraction(k * (k * k - 2 * k - 1), ell * (k * k - k - ell - 1))
    return (1 - epsilon_kl(k, ell, w)) * Fraction(k, ell)


def listing_exponents(k: int, ell: int, omega=2) -> ListingExponents:
    if k < 2 or not 1 <= ell < k:
        raise ValueError(f"need k >= 2 and 1 <= ell < k, got k={k}, ell={ell}")
    w = as_rational(omega)
    return ListingExponents(
        k, ell, w, x_seq(k, w), y_seq(k, w), z_seq(k, ell, w),
        alpha_kl(k, ell, w), gamma_kl(k, ell, w), gamma_exact=(ell == 1 or w == 2))


# ---------------------------------------------------------------------------
# tuple reduction
# ---------------------------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def reduction_valid(k: int, ell: int, s: int) -> bool:
    return 1 <= s < k and _ceil_div(k, s) != _ceil_div(ell, s)


def reduction_exponent(k: int, ell: int, s: int, omega=2) -> Tuple[Fraction, Fraction, Fraction]:
    """(Delta exponent, t exponent, t threshold exponent) after grouping s-tuples."""
    if not reduction_valid(k, ell, s):
        raise ValueError(f"invalid tuple width s={s} for k={k}, ell={ell}")
    w = as_rational(omega)
    kk, ll = _ceil_div(k, s), _ceil_div(ell, s)
    base = Fraction(s * ll, ell)
    if kk == 2:
        a, gam = Fraction(2), Fraction(0)
    else:
        a, gam = alpha_kl(kk, ll, w), gamma_kl(kk, ll, w)
    return base * a, 1 - ll * a / kk, base * gam


def reduction_cost(k: int, ell: int, s: int, tau, omega=2) -> Fraction:
    """Exponent of the runtime (in Delta_ell units) when t = Delta_ell^tau."""
    dexp, texp, thr = reduction_exponent(k, ell, s, omega)
    return dexp + max(as_rational(tau), thr) * texp


def reduction_regimes(k: int, ell: int, omega=2) -> List[dict]:
    """Lower envelope of the reduced algorithms over all valid s.

    Each regime is {'s', 'from', 'delta_exp', 't_exp'}: for t at or above
    Delta^from the best runtime is Delta^delta_exp t^t_exp.  The last regime
    (t below every threshold) has t_exp = 0.
    """
    cands = [(s,) + reduction_exponent(k, ell, s, omega)
             for s in range(1, k) if reduction_valid(k, ell, s)]
    regimes = []
    for s, dexp, texp, thr in cands:
        # a regime starts where its own formula kicks in and beats every rival there
        here = dexp + thr * texp
        rivals = [reduction_cost(k, ell, s2, thr, omega) for s2, *_ in cands if s2 != s]
        if not rivals or here < min(rivals):
            regimes.append({"s": s, "from": thr, "delta_exp": dexp, "t_exp": texp})
    regimes.sort(key=lambda r: -r["from"])
    flat = min((d + thr * t2, s) for s, d, t2, thr in cands)
    regimes.append({"s": flat[1], "from": Fraction(0), "delta_exp": flat[0], "t_exp": Fraction(0)})
    return regimes


def best_reduction_width(k: int, ell: int, tau, omega=2, include_one: bool = True) -> int:
    best = None
    for s in range(1 if include_one else 2, k):
        if reduction_valid(k, ell, s):
            c = reduction_cost(k, ell, s, tau, omega)
            if best is None or c < best[0]:
                best = (c, s)
    return best[1]


# ---------------------------------------------------------------------------
# concrete parameters
# ---------------------------------------------------------------------------

TAGS = ("dense-sparse", "kl", "4-3", "six-I", "six-II", "tuple-reduction")


@dataclass
class ListingPlan:
    tag: str
    k: int
    ell: int
    n: int
    m: int
    delta: int
    t: int
    lam: int = 1
    x: int = 1
    y: int = 1
    rho: int = 1
    s: int = 1
    predicted: Optional[float] = None
    notes: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _up(v: float) -> int:
    return max(1, int(math.ceil(v - 1e-9)))


def _pw(base: float, e) -> float:
    return float(base) ** float(e)


def dense_sparse_params(k: int, n: int, t: int, omega=2) -> Tuple[int, int]:
    """(lambda, x) for the Dense/Sparse k-clique lister at n nodes."""
    n = max(n, 1)
    t = max(t, 1)
    w = as_rational(omega)
    if w == 2 and k == 4:
        if t <= _pw(n, 2.5):
            x = n
        elif t <= _pw(n, 2.8):
            x = _pw(n, 8 / 3) / _pw(t, 2 / 3)
        else:
            x = _pw(n, 1 / 3) * _pw(t, 1 / 6)
        x = _up(min(x, n))
        return _up(max(1.0, 24 * t / (n * x))), x
    if w == 2 and k == 5:
        if t <= _pw(n, 3.8):
            x = n
        elif t <= _pw(n, 35 / 9):
            x = _pw(n, 23 / 4) / _pw(t, 5 / 4)
        else:
            x = _pw(n, 1 / 2) * _pw(t, 1 / 10)
        x = _up(min(x, n))
        return _up(max(5.0, 40 * t / (n * x))), x
    if k <= 2:
        return 1, n
    a = alpha_k(k - 1, w)
    te = a - (w - 2) * (k - 1)
    ne = (k - 1) ** 2 * w - (a + 2 * k * k - 5 * k + 3)
    root = (k - 1) * (3 + a - w)
    x = _pw(t, te / root) * _pw(n, ne / root)
    x = _up(min(max(x, 1.0), n))
    return _up(max(1.0, 4 * math.comb(k, 2) * t / (n * x))), x


def sparse42_params(k: int, m: int, t: int) -> Tuple[int, int]:
    """(lambda, x) for the edge-parameterized Sparse entry (k in {4, 5})."""
    m = max(m, 1)
    t = max(t, 1)
    if k == 4:
        if t <= _pw(m, 5 / 4):
            x = _pw(m, 1 / 2)
        elif t <= _pw(m, 10 / 7):
            x = m / _pw(t, 2 / 5)
        else:
            x = _pw(m, 1 / 4) * _pw(t, 1 / 8)
    else:
        if t <= _pw(m, 19 / 10):
            x = _pw(m, 1 / 2)
        elif t <= _pw(m, 55 / 28):
            x = _pw(m, 14 / 9) / _pw(t, 5 / 9)
        else:
            x = _pw(m, 1 / 3) * _pw(t, 1 / 15)
    x = _up(x)
    return _up(max(1.0, 2 * math.comb(k, 2) * t / m)), x


def kl_node_threshold(k: int, ell: int, delta: int, t: int, omega=2) -> int:
    """Light-node threshold x on Delta_ell(v) for the (k, ell) lister."""
    w = as_rational(omega)
    delta, t = max(delta, 1), max(t, 1)
    ak = alpha_k(k, w)
    ap = alpha_k(k - 1, w) if ell == 2 else alpha_kl(k - 1, ell - 1, w)
    den = (k - 1) * ak + (k - ell) * ap
    de = ((k - 1) * ak - (ell - 1) * ap) / den
    te = (k * (ell - 1) * ap - (k - 1) * ak) / (k * den)
    return _up(_pw(delta, de) * _pw(t, te))


def four_three_threshold(delta: int, t: int) -> int:
    delta, t = max(delta, 1), max(t, 1)
    return _up(max(_pw(delta, 0.2), _pw(t, 0.2), _pw(t, 0.5) / _pw(delta, 1 / 3)))


def six_a_params(n: int, t: int) -> Tuple[int, int, int]:
    """(rho, lambda, x) for the first 6-clique lister."""
    n, t = max(n, 1), max(t, 1)
    if t <= n ** 3:
        rho = x = 1.0
    elif t <= _pw(n, 63 / 13):
        rho = x = _pw(n, -1.5) * _pw(t, 0.5)
    else:
        x = _pw(n, 3 / 5) * _pw(t, 1 / 15)
        rho = _pw(n, -18 / 5) * _pw(t, 14 / 15)
    x, rho = _up(x), _up(rho)
    return rho, _up(max(1.0, 15 * t / (x * n))), x


def six_b_params(n: int, t: int) -> Tuple[int, int, int, bool]:
    """(rho, x, y, clamped) for the second 6-clique lister."""
    n, t = max(n, 1), max(t, 1)
    if t <= _pw(n, 13 / 4):
        x, y = _pw(n, 1.5), _pw(n, 0.75)
    elif t <= n ** 4:
        x, y = _pw(n, 4 / 7) * _pw(t, 2 / 7), _pw(n, 2 / 7) * _pw(t, 1 / 7)
    elif t <= _pw(n, 158 / 35):
        x, y = _pw(n, 22 / 21) * _pw(t, 1 / 6), _pw(n, 4 / 21) * _pw(t, 1 / 6)
    elif t <= _pw(n, 26 / 5):
        x, y = _pw(n, 9 / 5), _pw(n, 1 / 25) * _pw(t, 1 / 5)
    else:
        x, y = _pw(n, 0.5) * _pw(t, 0.25), _pw(n, 8 / 5) * _pw(t, -0.1)
    clamped = y > n
    x, y = _up(x), _up(min(y, n))
    return _up(max(1.0, 90 * t / (x * y * n))), x, y, clamped


def six_runtime_exponents(tau: float) -> Tuple[float, float]:
    """Runtime exponents (in n) of the two 6-clique listers at t = n^tau."""
    a = max(4.0, 2.5 + tau / 2, 0.4 + tau * 14 / 15)
    b = max(4.0, 15 / 7 + tau * 4 / 7, 37 / 21 + tau * 2 / 3, 29 / 25 + tau * 4 / 5,
            0.9 + tau * 17 / 20)
    return a, b


def _tau(base: int, t: int) -> float:
    if base <= 1:
        return 0.0
    return math.log(max(t, 1)) / math.log(base)


def make_plan(k: int, ell: int, n: int, m: int, delta: int, t: int, omega=2,
              tag: Optional[str] = None, s: Optional[int] = None) -> ListingPlan:
    """Concrete parameters for listing; picks the cheapest tag when none given.

    ``delta`` is Delta_ell (so equals n when ell = 1).  Exponents are compared
    in units of Delta_ell; six-clique candidates use their n-exponents.
    """
    w = as_rational(omega)
    if ell == 1:
        delta = n
    plan = ListingPlan(tag or "", k, ell, n, m, delta, t)
    tau = _tau(delta, t)
    if tag is None:
        cands = []
        if ell == 1 and k >= 3:
            cands.append((float(reduction_cost(k, 1, 1, tau, w)), 0, "dense-sparse", 1))
        elif ell >= 2 and k >= 3:
            cands.append((float(reduction_cost(k, ell, 1, tau, w)), 0, "kl", 1))
        if k == 4 and ell == 3:
            c = max(1.2, 1 + tau / 5, 2 / 3 + tau / 2)
            cands.append((c, 1, "4-3", 1))
        if k == 6 and ell == 1 and w == 2:
            a, b = six_runtime_exponents(tau)
            cands.append((a, 2, "six-I", 1))
            cands.append((b, 3, "six-II", 1))
        for ss in range(2, k):
            if reduction_valid(k, ell, ss):
                cands.append((float(reduction_cost(k, ell, ss, tau, w)), 4, "tuple-reduction", ss))
        if not cands:
            cands.append((float(Fraction(2 * (k - 1), ell)), 0, "dense-sparse" if ell == 1 else "kl", 1))
        cands.sort(key=lambda c: (round(c[0], 9), c[1], c[3]))
        plan.predicted, _, plan.tag, chosen_s = cands[0]
        if s is None:
            s = chosen_s
    plan.s = s or 1
    tg = plan.tag
    if tg == "dense-sparse":
        plan.lam, plan.x = dense_sparse_params(k, n, t, w)
    elif tg == "kl":
        plan.x = kl_node_threshold(k, ell, delta, t, w)
        plan.lam, _ = dense_sparse_params(k, max(1, ell * delta // plan.x), t, w)
    elif tg == "4-3":
        plan.x = four_three_threshold(delta, t)
        plan.lam, plan.y = sparse42_params(4, max(1, 3 * delta // plan.x), t)
    elif tg == "six-I":
        plan.rho, plan.lam, plan.x = six_a_params(n, t)
    elif tg == "six-II":
        plan.rho, plan.x, plan.y, clamped = six_b_params(n, t)
        if clamped:
            plan.notes.append("y clamped to n")
    elif tg == "tuple-reduction":
        if not reduction_valid(k, ell, plan.s):
            raise ValueError(f"invalid tuple width s={plan.s}")
    else:
        raise ValueError(f"unknown algorithm tag {tg!r}")
    return plan
