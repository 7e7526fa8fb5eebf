"""Prime-power tables and the three weighted prime sums used by the audits.

A smallest-prime-factor table drives everything: prime powers up to x are
enumerated per exponent, term arrays are built vectorized, and every final
reduction is an exactly-rounded compensated sum over a fixed term order, so
results are identical across sieve backends and run counts.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .constants import B_ZERO_SUM, EULER_GAMMA, LOG_2PI, TWO_PI
from .errors import DomainError, ResourceBudgetError
from .special import trivial_zero_tail

MAX_SIEVE_LIMIT = 200_000_000


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Immutable sieve products for 2..limit."""

    limit: int
    spf: np.ndarray
    _primes: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class WeightedSumResult:
    """Sieve value of a weighted prime sum next to one model main term."""

    x: float
    lhs: float
    main: float
    window: float
    residual: float

    def __post_init__(self) -> None:
        if self.window < 0.0 or not math.isfinite(self.residual):
            raise DomainError("window must be >= 0 and residual finite")

    def within_window(self) -> bool:
        return abs(self.residual) <= self.window


def build_table(limit: int) -> PrimeTable:
    """Sieve smallest prime factors up to limit (deterministic output)."""
    limit = int(limit)
    if limit < 2:
        raise DomainError("need limit >= 2, got %r" % (limit,))
    if limit > MAX_SIEVE_LIMIT:
        raise ResourceBudgetError(
            "sieve limit %d exceeds the %d budget" % (limit, MAX_SIEVE_LIMIT)
        )
    spf = _kernel.spf_array(limit)
    primes = (np.nonzero(spf[2:] == np.arange(2, limit + 1, dtype=np.int32))[0] + 2).astype(
        np.int64
    )
    return PrimeTable(limit=limit, spf=spf, _primes=primes)


def mangoldt(tbl: PrimeTable, n: int) -> float:
    """log p when n = p^k, else 0."""
    n = int(n)
    if n < 2 or n > tbl.limit:
        return 0.0
    p = int(tbl.spf[n])
    m = n
    while m % p == 0:
        m //= p
    return math.log(p) if m == 1 else 0.0


def is_prime_power(tbl: PrimeTable, n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    if n > tbl.limit:
        raise DomainError("n=%d beyond table limit %d" % (n, tbl.limit))
    p = int(tbl.spf[n])
    m = n
    while m % p == 0:
        m //= p
    return m == 1


def prime_power_grid(tbl: PrimeTable, x: float):
    """Arrays (primes p, values p^k, exponent k) for every p^k <= x."""
    xf = float(x)
    if xf > tbl.limit:
        raise DomainError("x=%r beyond table limit %d" % (x, tbl.limit))
    out = []
    k = 1
    while 2.0 ** k <= xf:
        approx = xf ** (1.0 / k)
        cand = tbl._primes[tbl._primes <= approx + 2.0]
        if cand.size:
            pk = cand ** k
            keep = pk <= xf
            if np.any(keep):
                out.append((cand[keep], pk[keep], k))
        k += 1
    return out


def psi_total(tbl: PrimeTable, x: float) -> float:
    """Sum of log p over prime powers p^k <= x."""
    terms = []
    for p_arr, _pk, _k in prime_power_grid(tbl, x):
        terms.append(np.log(p_arr.astype(np.float64)))
    if not terms:
        return 0.0
    return math.fsum(np.concatenate(terms))


def smoothed_sum_linear(tbl: PrimeTable, x: float) -> dict:
    """Sum of log(p)/p^k * (1 - p^k/x), with both model main terms.

    Returns {"two_pi": ..., "log_two_pi": ...}: the same sieve value against
    the main term with a 2*pi/x correction and against the residue-derived
    log(2*pi)/x correction. The window is the proven 2|B|/sqrt(x) allowance;
    exactly one variant is expected to sit inside it at small x.
    """
    xf = float(x)
    if not xf > 1.0:
        raise DomainError("need x > 1, got %r" % (x,))
    if xf > tbl.limit:
        raise DomainError("x=%r beyond table limit %d" % (x, tbl.limit))

    terms = []
    for p_arr, pk_arr, _k in prime_power_grid(tbl, xf):
        lp = np.log(p_arr.astype(np.float64))
        terms.append(lp * (1.0 / pk_arr.astype(np.float64) - 1.0 / xf))
    lhs = math.fsum(np.concatenate(terms)) if terms else 0.0

    base = math.log(xf) - (1.0 + EULER_GAMMA) - trivial_zero_tail(xf).value
    window = 2.0 * abs(B_ZERO_SUM) / math.sqrt(xf)
    out = {}
    for label, corr in (("two_pi", TWO_PI), ("log_two_pi", LOG_2PI)):
        main = base + corr / xf
        out[label] = WeightedSumResult(
            x=xf, lhs=lhs, main=main, window=window, residual=lhs - main
        )
    return out


def smoothed_sum_log(tbl: PrimeTable, x: float) -> dict:
    """Sum of 1/(k p^k) * (1 - log(p^k)/log x), with both sign variants.

    Returns {"minus_gamma": ..., "plus_gamma": ...} for the main terms
    loglog x -/+ gamma - 1 + gamma/log x. The window is
    2|B|/(sqrt(x) log^2 x) + 1/(3 x^3 log^2 x).
    """
    xf = float(x)
    if xf < math.e:
        raise DomainError("need x >= e, got %r" % (x,))
    if xf > tbl.limit:
        raise DomainError("x=%r beyond table limit %d" % (x, tbl.limit))
    logx = math.log(xf)

    terms = []
    for p_arr, pk_arr, k in prime_power_grid(tbl, xf):
        lp = np.log(p_arr.astype(np.float64))
        terms.append((1.0 - k * lp / logx) / (k * pk_arr.astype(np.float64)))
    lhs = math.fsum(np.concatenate(terms)) if terms else 0.0

    window = 2.0 * abs(B_ZERO_SUM) / (math.sqrt(xf) * logx * logx) + 1.0 / (
        3.0 * xf ** 3 * logx * logx
    )
    out = {}
    for label, sign in (("minus_gamma", -1.0), ("plus_gamma", 1.0)):
        main = math.log(logx) + sign * EULER_GAMMA - 1.0 + EULER_GAMMA / logx
        out[label] = WeightedSumResult(
            x=xf, lhs=lhs, main=main, window=window, residual=lhs - main
        )
    return out


def alternating_prime_power_sum(tbl: PrimeTable, x: float) -> float:
    """Sum over p^k <= x of (-1)^k (1/(k p^k) - log(p) / (x log x)).

    x itself must not be a prime power (integral x is checked exactly;
    non-integral x always passes).
    """
    xf = float(x)
    if xf < 2.0:
        raise DomainError("need x >= 2, got %r" % (x,))
    if xf > tbl.limit:
        raise DomainError("x=%r beyond table limit %d" % (x, tbl.limit))
    if xf == math.floor(xf) and is_prime_power(tbl, int(xf)):
        raise DomainError("x=%r is a prime power" % (x,))

    c = 1.0 / (xf * math.log(xf))
    terms = []
    for p_arr, pk_arr, k in prime_power_grid(tbl, xf):
        lp = np.log(p_arr.astype(np.float64))
        sign = -1.0 if k % 2 else 1.0
        terms.append(sign * (1.0 / (k * pk_arr.astype(np.float64)) - lp * c))
    return math.fsum(np.concatenate(terms)) if terms else 0.0
