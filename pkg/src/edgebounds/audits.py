"""Machine checks for every inequality, extremum, and identity the bound
derivation leans on, plus the two-sided window for log|L(1,f)|.

Each check returns AuditRecord(s) with one of three verdicts:

* PASS  - the asserted inequality/identity holds within the record window.
* FAIL  - it does not (some model variants fail by design at small x).
* REPORT - a measured discrepancy is documented without adjudication.

Margin-style records PASS when residual >= -window; window-style records
PASS when |residual| <= window. Every grid is a fixed lattice, so reruns
are bit-identical.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .constants import B_ZERO_SUM, EULER_GAMMA, LOG_2, LOG_PI, TWO_PI
from .errors import DomainError
from .lfunc import LFunctionInstance
from .primes import (
    PrimeTable,
    build_table,
    prime_power_grid,
    smoothed_sum_linear,
    smoothed_sum_log,
)
from .special import (
    chandee_margin,
    digamma,
    kappa_series_closed,
    kappa_series_direct,
    techlem2_bound_ratio,
    trivial_zero_tail,
)

Number = Union[float, complex]

AUDIT_IDS = (
    "trig",
    "p2",
    "hmax",
    "logratio",
    "techlem1",
    "techlem2",
    "chandee",
    "bconst",
    "lemma24",
    "lemma26",
    "aterms",
    "window",
)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise DomainError("empty interval [%r, %r]" % (self.lo, self.hi))

    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi


@dataclass(frozen=True)
class AuditRecord:
    id: str
    params: Dict[str, object]
    lhs: float
    rhs: float
    window: float
    residual: float
    verdict: str

    def __post_init__(self) -> None:
        if self.verdict not in ("PASS", "FAIL", "REPORT"):
            raise DomainError("bad verdict %r" % (self.verdict,))

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "window": self.window,
            "residual": self.residual,
            "verdict": self.verdict,
        }


def _margin_verdict(margin: float, tol: float) -> str:
    return "PASS" if margin >= -tol else "FAIL"


# ---------------------------------------------------------------------------
# grid inequalities


def verify_trig_inequality(
    k_max: int = 20, r_steps: int = 200, theta_steps: int = 512
) -> AuditRecord:
    """min over k <= k_max, r in (0,1], theta of k^2(1-r cos t) - (1-r^k cos kt)."""
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    r = np.linspace(1.0 / r_steps, 1.0, r_steps)[:, None]
    th = np.linspace(0.0, TWO_PI, theta_steps, endpoint=False)[None, :]
    cos_th = np.cos(th)
    min_margin = math.inf
    argk = 1
    min_slack = math.inf
    for k in range(1, k_max + 1):
        margin = k * k * (1.0 - r * cos_th) - (1.0 - r ** k * np.cos(k * th))
        m = float(margin.min())
        if m < min_margin:
            min_margin, argk = m, k
        if k >= 2:
            slack = k * k - 1.0 - (r ** k + r)
            min_slack = min(min_slack, float(slack.min()))
    return AuditRecord(
        id="trig",
        params={
            "k_max": k_max,
            "r_steps": r_steps,
            "theta_steps": theta_steps,
            "worst_k": argk,
            "min_slack_k_ge_2": min_slack,
        },
        lhs=min_margin,
        rhs=0.0,
        window=1e-12,
        residual=min_margin,
        verdict=_margin_verdict(min_margin, 1e-12),
    )


def _is_prime_power_int(n: int) -> bool:
    if n < 2:
        return False
    p = None
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            p = d
            while m % d == 0:
                m //= d
            return m == 1
        d += 1
    return True  # m prime


def verify_p2_positivity(
    x: float, r_steps: int = 200, theta_steps: int = 512
) -> AuditRecord:
    """Nonnegativity of the alternating p=2 block after the k>=6 swap.

    Exact terms for k <= 5; even k >= 6 replaced by their worst case
    -k^2(1-r cos t) w_k, odd k >= 7 dropped (their terms are nonnegative).
    The scanned quantity is a lower bound for the true block, so PASS
    certifies the block itself.
    """
    xf = float(x)
    if xf < 100.0:
        raise DomainError("need x >= 100, got %r" % (x,))
    if xf == math.floor(xf) and _is_prime_power_int(int(xf)):
        raise DomainError("x=%r is a prime power" % (x,))
    kk = int(math.floor(math.log2(xf)))
    while 2.0 ** (kk + 1) <= xf:
        kk += 1
    while 2.0 ** kk > xf:
        kk -= 1
    w = [1.0 / (2.0 ** k * k * LOG_2) - 1.0 / (xf * math.log(xf)) for k in range(1, kk + 1)]
    if min(w) <= 0.0:
        raise DomainError("weights not positive at x=%r" % (x,))
    r = np.linspace(1.0 / r_steps, 1.0, r_steps)[:, None]
    th = np.linspace(0.0, TWO_PI, theta_steps, endpoint=False)[None, :]
    cos_th = np.cos(th)
    obj = np.zeros((r_steps, theta_steps))
    for k in range(1, min(5, kk) + 1):
        sgn = 1.0 if k % 2 == 1 else -1.0
        obj += sgn * (1.0 - r ** k * np.cos(k * th)) * w[k - 1]
    for k in range(6, kk + 1):
        if k % 2 == 0:
            obj -= k * k * (1.0 - r * cos_th) * w[k - 1]
    obj *= LOG_2
    i, j = np.unravel_index(np.argmin(obj), obj.shape)
    mn = float(obj[i, j])
    return AuditRecord(
        id="p2",
        params={
            "x": xf,
            "k_cut": kk,
            "r_steps": r_steps,
            "theta_steps": theta_steps,
            "argmin_r": float(r[i, 0]),
            "argmin_theta": float(th[0, j]),
        },
        lhs=mn,
        rhs=0.0,
        window=1e-12,
        residual=mn,
        verdict=_margin_verdict(mn, 1e-12),
    )


def verify_techlem2_grid(
    re_steps: int = 25, im_steps: int = 20, x_steps: int = 20
) -> AuditRecord:
    """ratio |(x^-k - 1)/(k(k+1))| log3/(2 log x) <= 1 on a fixed lattice."""
    res = np.linspace(0.0, 10.0, re_steps)
    ims = np.linspace(-10.0, 10.0, im_steps)
    xs = np.geomspace(1.01, 1e6, x_steps)
    worst = -math.inf
    arg: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    for a in res:
        for b in ims:
            kap = complex(a, b)
            for xx in xs:
                v = techlem2_bound_ratio(kap, float(xx))
                if v > worst:
                    worst, arg = v, (float(a), float(b), float(xx))
    margin = 1.0 - worst
    return AuditRecord(
        id="techlem2",
        params={
            "re_steps": re_steps,
            "im_steps": im_steps,
            "x_steps": x_steps,
            "worst_kappa_re": arg[0],
            "worst_kappa_im": arg[1],
            "worst_x": arg[2],
        },
        lhs=worst,
        rhs=1.0,
        window=1e-12,
        residual=margin,
        verdict=_margin_verdict(margin, 1e-12),
    )


def verify_chandee_grid(
    re_steps: int = 200, im_steps: int = 200
) -> AuditRecord:
    """log|z| - Re psi(z) >= 0 on Re z in [1/4, 20], |Im z| <= 50."""
    res = np.linspace(0.25, 20.0, re_steps)
    ims = np.linspace(-50.0, 50.0, im_steps)
    worst = math.inf
    arg = (0.0, 0.0)
    for a in res:
        for b in ims:
            m = chandee_margin(complex(a, b))
            if m < worst:
                worst, arg = m, (float(a), float(b))
    return AuditRecord(
        id="chandee",
        params={
            "re_steps": re_steps,
            "im_steps": im_steps,
            "argmin_re": arg[0],
            "argmin_im": arg[1],
        },
        lhs=worst,
        rhs=0.0,
        window=1e-12,
        residual=worst,
        verdict=_margin_verdict(worst, 1e-12),
    )


# ---------------------------------------------------------------------------
# extremum searches


def _h_surface(s, t):
    t2 = t * t
    return (s * s + 3.0 * s + 2.0 + t2) / ((s + 2.0) ** 2 + t2) - (
        s * s + 4.0 * s + 3.0 + t2
    ) / ((s + 3.0) ** 2 + t2)


def _logratio_surface(s, t):
    t2 = t * t
    return 0.5 * np.log(((s + 2.0) ** 2 + t2) / ((s + 3.0) ** 2 + t2))


def _pattern_search(
    fn: Callable[[float, float], float],
    s0: float,
    t0: float,
    step: float,
    steps: int,
    maximize: bool,
) -> Tuple[float, float, float]:
    sign = 1.0 if maximize else -1.0
    best = sign * fn(s0, t0)
    for _ in range(steps):
        cands = []
        for ds, dt in ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)):
            s1 = s0 + ds
            if s1 < 0.0:
                s1 = 0.0
            t1 = t0 + dt
            cands.append((sign * fn(s1, t1), s1, t1))
        v1, s1, t1 = max(cands)
        if v1 > best:
            best, s0, t0 = v1, s1, t1
        else:
            step *= 0.5
    return s0, t0, sign * best


def _compact_grid(sigma_max: float, t_max: float, n: int):
    u = np.linspace(0.0, math.atan(sigma_max), n)
    v = np.linspace(-math.atan(t_max), math.atan(t_max), n)
    return np.tan(u)[:, None], np.tan(v)[None, :]


def extremum_h(
    sigma_max: float = 1e6,
    t_max: float = 1e6,
    grid_steps: int = 512,
    refine_steps: int = 200,
) -> AuditRecord:
    """Global max of the two-fraction surface over sigma >= 0.

    Asserts the direction the derivation uses (max <= 0.2143594 + 1e-9)
    and REPORTs the computed maximum and its location.
    """
    s, t = _compact_grid(sigma_max, t_max, grid_steps)
    vals = _h_surface(s, t)
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    boundary = max(
        float(np.abs(vals[-1, :]).max()),
        float(np.abs(vals[:, 0]).max()),
        float(np.abs(vals[:, -1]).max()),
    )
    s_star, t_star, vmax = _pattern_search(
        lambda a, b: float(_h_surface(a, b)),
        float(s[i, 0]),
        float(t[0, j]),
        step=0.1,
        steps=refine_steps,
        maximize=True,
    )
    claimed = 0.2143594
    verdict = "REPORT" if vmax <= claimed + 1e-9 else "FAIL"
    return AuditRecord(
        id="hmax",
        params={
            "sigma_star": s_star,
            "t_star": t_star,
            "grid_steps": grid_steps,
            "refine_steps": refine_steps,
            "boundary_abs_max": boundary,
            "grid_max": float(vals[i, j]),
        },
        lhs=vmax,
        rhs=claimed,
        window=1e-9,
        residual=vmax - claimed,
        verdict=verdict,
    )


def extremum_logratio(
    sigma_max: float = 1e6,
    t_max: float = 1e6,
    grid_steps: int = 512,
    refine_steps: int = 200,
) -> AuditRecord:
    """Global min of the half-log ratio surface: log(2/3) at the origin."""
    s, t = _compact_grid(sigma_max, t_max, grid_steps)
    vals = _logratio_surface(s, t)
    i, j = np.unravel_index(np.argmin(vals), vals.shape)
    s_star, t_star, vmin = _pattern_search(
        lambda a, b: float(_logratio_surface(a, b)),
        float(s[i, 0]),
        float(t[0, j]),
        step=0.1,
        steps=refine_steps,
        maximize=False,
    )
    target = math.log(2.0 / 3.0)
    at_origin = abs(s_star) + abs(t_star) <= 1e-6
    ok = abs(vmin - target) <= 1e-9 and at_origin
    return AuditRecord(
        id="logratio",
        params={
            "sigma_star": s_star,
            "t_star": t_star,
            "grid_steps": grid_steps,
            "refine_steps": refine_steps,
            "argmin_at_origin": at_origin,
        },
        lhs=vmin,
        rhs=target,
        window=1e-9,
        residual=vmin - target,
        verdict="PASS" if ok else "FAIL",
    )


# ---------------------------------------------------------------------------
# identities and constants


_DEFAULT_KAPPA_GRID: Tuple[complex, ...] = (
    0j,
    0.5 + 0j,
    1 + 0j,
    2 + 0j,
    5 + 0j,
    10 + 0j,
    1j,
    5j,
    50j,
    0.5 + 1j,
    3 + 4j,
    10 + 10j,
)


def identity_residual_techlem1(
    kappa_grid: Optional[Sequence[Number]] = None,
    tail_tol: float = 1e-10,
) -> AuditRecord:
    """Closed form minus direct series for the local-parameter sum.

    The two sides measurably disagree (0.068 at the origin), so the
    verdict is always REPORT: the record documents the discrepancy per
    grid point and its maximum, never adjudicating either side.
    """
    grid = tuple(kappa_grid) if kappa_grid is not None else _DEFAULT_KAPPA_GRID
    points = []
    worst = 0.0
    for kap in grid:
        direct = kappa_series_direct(kap, tail_tol=tail_tol)
        closed = kappa_series_closed(kap)
        resid = closed - direct.value
        worst = max(worst, abs(resid))
        points.append(
            {
                "kappa": complex(kap),
                "direct": direct.value,
                "closed": closed,
                "residual": resid,
            }
        )
    return AuditRecord(
        id="techlem1",
        params={"points": points, "tail_tol": tail_tol},
        lhs=worst,
        rhs=0.0,
        window=0.0,
        residual=worst,
        verdict="REPORT",
    )


def b_constant() -> float:
    """Zero-sum constant (1/2) log(4 pi) - 1 - gamma/2."""
    return B_ZERO_SUM


def verify_b_constant() -> AuditRecord:
    fresh = 0.5 * math.log(4.0 * math.pi) - 1.0 - 0.5 * EULER_GAMMA
    resid = b_constant() - fresh
    return AuditRecord(
        id="bconst",
        params={"two_abs_B": 2.0 * abs(b_constant()), "negative": b_constant() < 0.0},
        lhs=b_constant(),
        rhs=fresh,
        window=1e-12,
        residual=resid,
        verdict="PASS" if abs(resid) <= 1e-12 and b_constant() < 0.0 else "FAIL",
    )


# ---------------------------------------------------------------------------
# explicit-formula windows


@lru_cache(maxsize=256)
def _kappa_direct_cached(kap: complex) -> float:
    return kappa_series_direct(kap).value


def _instance_prime_sums(
    inst: LFunctionInstance, tbl: PrimeTable, x: float
) -> Tuple[float, float]:
    """One pass over p^k <= x: (log-weight sum, linear-weight sum).

    log-weight: Re a(p^k) / (k p^k) * (1 - k log p / log x)
    linear-weight: Re a(p^k) * log p * (1/p^k - 1/x)
    """
    if inst.coeff_oracle is None:
        raise DomainError("instance has no coefficient oracle")
    if x > inst.oracle_support:
        raise DomainError("oracle support ends below x")
    logx = math.log(x)
    log_parts = []
    lin_parts = []
    for p_arr, pk_arr, k in prime_power_grid(tbl, x):
        re_a = np.array(
            [inst.coefficient(int(p), k).real for p in p_arr], dtype=np.float64
        )
        lp = np.log(p_arr.astype(np.float64))
        pk = pk_arr.astype(np.float64)
        log_parts.append(re_a * (1.0 - k * lp / logx) / (k * pk))
        lin_parts.append(re_a * lp * (1.0 / pk - 1.0 / x))
    s_log = math.fsum(np.concatenate(log_parts)) if log_parts else 0.0
    s_lin = math.fsum(np.concatenate(lin_parts)) if lin_parts else 0.0
    return s_log, s_lin


def _gamma_block(inst: LFunctionInstance) -> float:
    """log(q / pi^d) + sum_j Re psi((1 + kappa_j)/2)."""
    acc = [math.log(inst.q) - inst.d * LOG_PI]
    for kap in inst.local_params:
        acc.append(complex(digamma((1.0 + kap) / 2.0).value).real)
    return math.fsum(acc)


def _windows(
    inst: LFunctionInstance, tbl: PrimeTable, x: float
) -> Tuple[Interval, Interval]:
    xf = float(x)
    if xf < 132.0:
        raise DomainError("windows need x >= 132")
    d = inst.d
    l = inst.zero_param_count()
    logx = math.log(xf)
    sqx = math.sqrt(xf)
    s_log, s_lin = _instance_prime_sums(inst, tbl, xf)
    gblock = _gamma_block(inst)
    tx = trivial_zero_tail(xf).value

    kap_sum = 0.0
    for kap in inst.nonzero_params():
        series = _kappa_direct_cached(complex(kap))
        ramp = ((cmath.exp(-kap * logx) - 1.0) / (kap * (kap + 1.0))).real
        kap_sum += series + ramp

    rhs0 = (
        0.5 * (1.0 - 1.0 / xf) * gblock
        - s_lin
        + l * (logx + 1.0) / xf
        + (d - 2 * l) * LOG_2 / xf
        - kap_sum / xf
    )
    # theta-range of the tail coefficient, both printed variants pooled
    rhs_lo = rhs0 - d * tx
    rhs_hi = rhs0 + (d + 2 * l) * tx
    den_lo = 1.0 + 1.0 / xf - 2.0 / sqx
    den_hi = 1.0 + 1.0 / xf + 2.0 / sqx
    quots = (
        rhs_lo / den_lo,
        rhs_lo / den_hi,
        rhs_hi / den_lo,
        rhs_hi / den_hi,
    )
    b_lo = max(0.0, min(quots))
    b_hi = max(0.0, max(quots))
    b_iv = Interval(b_lo, b_hi)

    c1_lo = 1.0 / logx - 2.0 / (sqx * logx * logx)
    c1_hi = 1.0 / logx + 2.0 / (sqx * logx * logx)
    err = 2.0 * d / (xf * logx * logx)
    mid = s_log + gblock / (2.0 * logx)
    log_iv = Interval(mid - c1_hi * b_hi - err, mid - c1_lo * b_lo + err)
    return b_iv, log_iv


def reB_window(inst: LFunctionInstance, tbl: PrimeTable, x: float) -> Interval:
    """Interval for the zero-sum magnitude |Re B| from the finite display."""
    return _windows(inst, tbl, x)[0]


def explicit_formula_window(
    inst: LFunctionInstance, tbl: PrimeTable, x: float
) -> Interval:
    """Interval for log|L(1,f)| with every |theta| <= 1 ranged worst-case."""
    return _windows(inst, tbl, x)[1]


# ---------------------------------------------------------------------------
# grouped-term audit


def a_terms_audit(
    side: str,
    d: int,
    l: int,
    kappas: Sequence[Number],
    x: float,
) -> AuditRecord:
    """Cumulative size of the five grouped terms against the claimed cap.

    upper side: combined <= 2d/(1+sqrt(x))^2
    lower side: combined >= -2.05 d/(sqrt(x)-1)^2
    """
    if side not in ("upper", "lower"):
        raise DomainError("side must be 'upper' or 'lower'")
    if not 0 <= l <= d:
        raise DomainError("need 0 <= l <= d")
    kaps = tuple(complex(k) for k in kappas)
    if len(kaps) != d - l:
        raise DomainError("expected %d nonzero local parameters" % (d - l,))
    if any(k == 0 for k in kaps):
        raise DomainError("zero local parameter passed in nonzero list")
    if any(k.real < 0 for k in kaps):
        raise DomainError("local parameters need nonnegative real part")
    xf = float(x)
    if xf < 132.0:
        raise DomainError("need x >= 132")
    logx = math.log(xf)
    sqx = math.sqrt(xf)
    tx = trivial_zero_tail(xf).value

    a1 = l * (logx + 1.0) / xf
    a2 = (d - 2 * l) * LOG_2 / xf
    a3 = ((d - 2 * l) if side == "upper" else d) * tx
    a4 = math.fsum(_kappa_direct_cached(k) for k in kaps) / xf if kaps else 0.0
    a5 = (
        math.fsum(
            ((cmath.exp(-k * logx) - 1.0) / (k * (k + 1.0))).real for k in kaps
        )
        / xf
        if kaps
        else 0.0
    )
    core = a1 + a2 - a3 - a4 - a5
    if side == "upper":
        pref = (1.0 / logx - 2.0 / (sqx * logx * logx)) / (1.0 + 1.0 / sqx) ** 2
        combined = -pref * core + 2.0 * d / (xf * logx * logx)
        cap = 2.0 * d / (1.0 + sqx) ** 2
        margin = cap - combined
    else:
        pref = (1.0 / logx + 2.0 / (sqx * logx * logx)) / (1.0 - 1.0 / sqx) ** 2
        combined = -pref * core - 2.0 * d / (xf * logx * logx)
        cap = -2.05 * d / (sqx - 1.0) ** 2
        margin = combined - cap
    return AuditRecord(
        id="aterms",
        params={
            "side": side,
            "d": d,
            "l": l,
            "kappas": list(kaps),
            "x": xf,
            "A1": a1,
            "A2": a2,
            "A3": a3,
            "A4": a4,
            "A5": a5,
        },
        lhs=combined,
        rhs=cap,
        window=1e-12,
        residual=margin,
        verdict=_margin_verdict(margin, 1e-12),
    )


# ---------------------------------------------------------------------------
# runner


def _lemma24_records(tbl: PrimeTable) -> List[AuditRecord]:
    out = []
    for x in (100.0, 1000.0, 10000.0, 1000000.0):
        res = smoothed_sum_linear(tbl, x)
        for name in ("two_pi", "log_two_pi"):
            r = res[name]
            out.append(
                AuditRecord(
                    id="lemma24",
                    params={"x": r.x, "variant": name},
                    lhs=r.lhs,
                    rhs=r.main,
                    window=r.window,
                    residual=r.residual,
                    verdict="PASS" if r.within_window() else "FAIL",
                )
            )
    return out


def _lemma26_records(tbl: PrimeTable) -> List[AuditRecord]:
    out = []
    for x in (10000.0, 1000000.0):
        res = smoothed_sum_log(tbl, x)
        for name in ("minus_gamma", "plus_gamma"):
            r = res[name]
            out.append(
                AuditRecord(
                    id="lemma26",
                    params={"x": r.x, "variant": name},
                    lhs=r.lhs,
                    rhs=r.main,
                    window=r.window,
                    residual=r.residual,
                    verdict="PASS" if r.within_window() else "FAIL",
                )
            )
    return out


def _window_records(tbl: PrimeTable, q_max: int, x: float) -> List[AuditRecord]:
    from .dirichlet import enumerate_characters, l1_value
    from .lfunc import dirichlet_instance

    out = []
    for q in range(3, q_max + 1):
        for chi in enumerate_characters(q, primitive_only=True):
            if chi.is_principal:
                continue
            inst = dirichlet_instance(chi)
            iv = explicit_formula_window(inst, tbl, x)
            truth = math.log(abs(l1_value(chi)))
            mid = 0.5 * (iv.lo + iv.hi)
            half = 0.5 * iv.width()
            out.append(
                AuditRecord(
                    id="window",
                    params={
                        "q": q,
                        "char_index": chi.index,
                        "x": float(x),
                        "lo": iv.lo,
                        "hi": iv.hi,
                    },
                    lhs=truth,
                    rhs=mid,
                    window=half,
                    residual=truth - mid,
                    verdict="PASS" if iv.contains(truth) else "FAIL",
                )
            )
    return out


def run_audit(
    audit_id: str,
    tbl: Optional[PrimeTable] = None,
    grid_steps: int = 512,
    q_max: int = 50,
    x: float = 1e5,
) -> List[AuditRecord]:
    """Dispatch one audit id to its records (see AUDIT_IDS)."""
    if audit_id == "trig":
        return [verify_trig_inequality(theta_steps=grid_steps)]
    if audit_id == "p2":
        return [
            verify_p2_positivity(xx, theta_steps=grid_steps)
            for xx in (100.5, 132.25, 1009.3)
        ]
    if audit_id == "hmax":
        return [extremum_h(grid_steps=grid_steps)]
    if audit_id == "logratio":
        return [extremum_logratio(grid_steps=grid_steps)]
    if audit_id == "techlem1":
        return [identity_residual_techlem1()]
    if audit_id == "techlem2":
        return [verify_techlem2_grid()]
    if audit_id == "chandee":
        return [verify_chandee_grid()]
    if audit_id == "bconst":
        return [verify_b_constant()]
    if audit_id == "lemma24":
        if tbl is None:
            tbl = build_table(10 ** 6)
        return _lemma24_records(tbl)
    if audit_id == "lemma26":
        if tbl is None:
            tbl = build_table(10 ** 6)
        return _lemma26_records(tbl)
    if audit_id == "aterms":
        return [
            a_terms_audit("upper", 1, 1, (), 132.25),
            a_terms_audit("lower", 2, 0, (0.5, 1.5), 1e4),
        ]
    if audit_id == "window":
        if tbl is None:
            tbl = build_table(int(x))
        return _window_records(tbl, q_max, x)
    raise DomainError("unknown audit id %r" % (audit_id,))
