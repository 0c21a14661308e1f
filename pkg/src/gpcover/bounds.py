"""Exact evaluation of the leading-order coefficients c_r.

c_r is the constant in f_r(n) <= c_r (1 + o(1)) C(n, floor(r/2)). Every
coefficient is a :class:`fractions.Fraction`; expressions with fractional
powers of 14/15 are :class:`PowerBound` objects compared by raising both
sides to a common integer power. Floating point only appears in display
values and the two real-valued formulas.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import mpmath

from .constructions import baseline_count, lemma1_count
from .errors import DomainError, MissingDependency, NotFound

C4 = Fraction(14, 15)
WORKING_PREC = 96  # bits; display values only


# -- exact power expressions ------------------------------------------------


@functools.total_ordering
@dataclass(frozen=True)
class PowerBound:
    """The positive real ``factor * base ** exponent``."""

    factor: Fraction
    base: Fraction
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factor", Fraction(self.factor))
        object.__setattr__(self, "base", Fraction(self.base))
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        if self.factor <= 0 or self.base <= 0:
            raise ValueError("PowerBound needs a positive factor and base")

    @classmethod
    def of(cls, x) -> "PowerBound":
        if isinstance(x, PowerBound):
            return x
        return cls(Fraction(x), Fraction(1), Fraction(0))

    def raised(self, k: int) -> Fraction:
        """Exact value of self**k; k must clear the exponent's denominator."""
        e = self.exponent * k
        if e.denominator != 1:
            raise ValueError(f"power {k} does not clear exponent {self.exponent}")
        return self.factor**k * self.base ** int(e)

    def _cmp(self, other) -> int:
        other = PowerBound.of(other)
        k = math.lcm(self.exponent.denominator, other.exponent.denominator)
        lhs, rhs = self.raised(k), other.raised(k)
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __hash__(self):
        return hash((self.factor, self.base, self.exponent))

    def __mul__(self, other):
        other = PowerBound.of(other)
        if other.exponent == 0:
            return PowerBound(self.factor * other.factor, self.base, self.exponent)
        if self.exponent == 0:
            return PowerBound(self.factor * other.factor, other.base, other.exponent)
        if self.base != other.base:
            raise ValueError("can only multiply powers of a common base")
        return PowerBound(self.factor * other.factor, self.base, self.exponent + other.exponent)

    __rmul__ = __mul__

    def value(self, prec: int = WORKING_PREC) -> mpmath.mpf:
        with mpmath.workprec(prec):
            return mpmath.mpf(self.factor.numerator) / self.factor.denominator * mpmath.power(
                mpmath.mpf(self.base.numerator) / self.base.denominator,
                mpmath.mpf(self.exponent.numerator) / self.exponent.denominator,
            )

    def __str__(self) -> str:
        head = "" if self.factor == 1 else f"{self.factor}*"
        if self.exponent == 0:
            return str(self.factor)
        return f"{head}({self.base})^({self.exponent})"


def closed_form_coefficient(r: int) -> PowerBound:
    """(14/15)^(floor(r/2)/3); equals (14/15)^(r/6) for even r."""
    return PowerBound(1, C4, Fraction(r // 2, 3))


def prior_coefficient(r: int) -> PowerBound:
    """Earlier general bound (r/2)(14/15)^(r/4)."""
    if r < 4:
        raise DomainError("prior coefficient is stated for r >= 4")
    return PowerBound(Fraction(r, 2), C4, Fraction(r, 4))


def lower_bound_coefficient(r: int) -> Fraction:
    if r < 2:
        raise DomainError("lower bound coefficient needs r >= 2")
    h = r // 2
    return Fraction(2, comb(2 * h, h))


# -- coefficient recurrences ------------------------------------------------


@dataclass(frozen=True)
class PairChoice:
    """Outcome of one profile pair t of an odd coefficient."""

    t: int
    weight: Fraction  # C(k, t) / 2^k
    option: str  # "lemma1" or "product"
    product_value: Fraction | None
    cost: Fraction  # min(1, product_value) or 1


@dataclass(frozen=True)
class Coefficient:
    r: int
    value: Fraction
    kind: str  # "even-recurrence", "odd-pairing", "baseline", "cited"
    pair_choices: tuple[PairChoice, ...] = field(default=())

    def __float__(self) -> float:
        return float(self.value)


def even_coefficients(max_m: int) -> dict[int, Coefficient]:
    """Leading coefficients of the halving recurrence for even m <= max_m.

    Comparing n^(m/2) terms after splitting n into halves gives
    c_m (2^(m/2) - 2) = sum_{j=1}^{m/2-1} C(m/2, j) c_{2j} c_{m-2j};
    odd profiles only contribute lower order terms.
    """
    if max_m < 4 or max_m % 2:
        raise DomainError("max_m must be even and >= 4")
    out = {
        0: Coefficient(0, Fraction(1), "baseline"),
        2: Coefficient(2, Fraction(1), "baseline"),
        4: Coefficient(4, C4, "cited"),
    }
    for m in range(6, max_m + 1, 2):
        h = m // 2
        rhs = sum(comb(h, j) * out[2 * j].value * out[m - 2 * j].value for j in range(1, h))
        out[m] = Coefficient(m, rhs / (2**h - 2), "even-recurrence")
    return out


def even_residual(m: int, evens: dict[int, Coefficient]) -> Fraction:
    """Residual of the fixed-point equation; exactly zero when solved."""
    h = m // 2
    rhs = sum(comb(h, j) * evens[2 * j].value * evens[m - 2 * j].value for j in range(1, h))
    return evens[m].value * (2**h - 2) - rhs


_ODD_BASE = {1: Coefficient(1, Fraction(1), "baseline"), 3: Coefficient(3, Fraction(1), "baseline")}


def _lookup(j: int, evens: dict[int, Coefficient], memo: dict[int, Coefficient]) -> Fraction:
    if j % 2 == 0:
        table = evens
    elif j in _ODD_BASE:
        return _ODD_BASE[j].value
    else:
        table = memo
    if j not in table:
        raise MissingDependency(f"coefficient c_{j} has not been computed")
    return table[j].value


def odd_coefficient(
    r: int,
    evens: dict[int, Coefficient],
    memo: dict[int, Coefficient] | None = None,
    allow_products: bool = True,
) -> Coefficient:
    """Coefficient of the odd pairing after one halving step.

    With k = (r-1)/2, pair t carries weight C(k, t)/2^k, the limit of
    C(n/2, t) C(n/2, k-t) / C(n, k). Interval blocks cost 1 per unit of
    weight; the product option costs c_{2t} c_{r-2t} + c_{2t+1} c_{r-2t-1}.
    The outer pairs t = 0, k always take interval blocks.
    """
    if r % 2 == 0 or r < 5:
        raise DomainError(f"odd_coefficient needs odd r >= 5, got {r}")
    memo = {} if memo is None else memo
    k = (r - 1) // 2
    total = Fraction(0)
    choices = []
    for t in range(k + 1):
        w = Fraction(comb(k, t), 2**k)
        prod_val = None
        cost = Fraction(1)
        option = "lemma1"
        if allow_products and 0 < t < k:
            prod_val = _lookup(2 * t, evens, memo) * _lookup(r - 2 * t, evens, memo) + _lookup(
                2 * t + 1, evens, memo
            ) * _lookup(r - 2 * t - 1, evens, memo)
            if prod_val < 1:
                cost, option = prod_val, "product"
        total += w * cost
        choices.append(PairChoice(t, w, option, prod_val, cost))
    return Coefficient(r, total, "odd-pairing", tuple(choices))


def odd_coefficients(r_max: int, evens: dict[int, Coefficient] | None = None) -> dict[int, Coefficient]:
    """All odd coefficients 1 <= r <= r_max, ascending."""
    evens = evens or even_coefficients(max(4, r_max - 1 + (r_max - 1) % 2))
    memo: dict[int, Coefficient] = dict(_ODD_BASE)
    for r in range(5, r_max + 1, 2):
        memo[r] = odd_coefficient(r, evens, memo)
    return {r: c for r, c in memo.items() if r <= r_max}


def coefficient_table(r_max: int) -> dict[int, Coefficient]:
    """c_r for every 2 <= r <= r_max."""
    evens = even_coefficients(max(4, r_max - r_max % 2))
    odds = odd_coefficients(r_max, evens) if r_max >= 5 else {r: c for r, c in _ODD_BASE.items() if r <= r_max}
    table = {**{m: c for m, c in evens.items() if 2 <= m <= r_max}, **odds}
    table.pop(1, None)
    return dict(sorted(table.items()))


def smallest_odd_below_one(r_max: int) -> tuple[int, list[tuple[int, Fraction]]]:
    """Smallest odd r <= r_max with c_r < 1, plus c_r for every odd 5 <= r <= r_max."""
    if r_max < 5:
        raise DomainError("r_max must be >= 5")
    odds = odd_coefficients(r_max)
    table = [(r, c.value) for r, c in sorted(odds.items()) if r >= 5]
    for r, v in table:
        if v < 1:
            return r, table
    raise NotFound(f"no odd r <= {r_max} has c_r < 1")


def middle_pair_closed_form(r: int) -> PowerBound:
    """Product option of the middle pair for r = 4d+1 with closed-form even
    coefficients and baseline odd ones: 2 (14/15)^(2d/6)."""
    if r % 4 != 1:
        raise DomainError("the middle pair exists for r = 1 (mod 4)")
    d = (r - 1) // 4
    return PowerBound(2, C4, Fraction(2 * d, 6))


def pairing_gain_bound(r: int, alpha) -> Fraction | PowerBound:
    """1 - (1 - alpha) C(2d, d) / 4^d for r = 4d+1: the coefficient when only
    the middle pair improves. ``alpha`` must be a Fraction."""
    d = (r - 1) // 4
    return 1 - (1 - Fraction(alpha)) * Fraction(comb(2 * d, d), 4**d)


# -- real-valued formulas ---------------------------------------------------


def decimal_str(x, digits: int = 15) -> str:
    """``digits`` significant digits of a Fraction, PowerBound or mpf."""
    with mpmath.workprec(WORKING_PREC):
        if isinstance(x, PowerBound):
            x = x.value()
        elif isinstance(x, (Fraction, int)):
            x = mpmath.mpf(Fraction(x).numerator) / Fraction(x).denominator
        return mpmath.nstr(x, digits)


def theorem1_closed_form(m: int, n: int, prec: int = WORKING_PREC) -> mpmath.mpf:
    """(14/15)^(m/6) n^(m/2) / (m/2)! + n^(m/2 - 1) ln n."""
    if m < 6 or m % 2:
        raise DomainError("m must be even and >= 6")
    if n < m:
        raise DomainError(f"need n >= m, got n={n}, m={m}")
    h = m // 2
    with mpmath.workprec(prec):
        lead = mpmath.power(mpmath.mpf(14) / 15, mpmath.mpf(m) / 6) * mpmath.mpf(n) ** h / factorial(h)
        return lead + mpmath.mpf(n) ** (h - 1) * mpmath.log(n)


def lemma3_bound(r: int, alpha, prec: int = WORKING_PREC) -> mpmath.mpf:
    """1 - (1 - alpha) / e^(r/2).

    The deficit is about 2^(-0.72 r), so r extra bits are added to keep
    ``prec`` significant bits in it.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise DomainError("alpha must lie in (0, 1]")
    with mpmath.workprec(prec + max(r, 0)):
        a = mpmath.mpf(alpha.numerator) / alpha.denominator
        return 1 - (1 - a) / mpmath.exp(mpmath.mpf(r) / 2)


def e_lower_bound(terms: int = 30) -> Fraction:
    """Partial sum of sum 1/k!, a rational strictly below e."""
    return sum((Fraction(1, factorial(k)) for k in range(terms)), Fraction(0))


def central_weight_exceeds_exp(d: int) -> bool:
    """Decide C(2d, d)/4^d >= e^(-(4d+1)/2) exactly.

    Squared: C(2d,d)^2 e^(4d+1) >= 16^d. Using a rational lower bound for e
    makes a True answer rigorous.
    """
    lhs = Fraction(comb(2 * d, d)) ** 2 * e_lower_bound() ** (4 * d + 1)
    return lhs >= 16**d


def crossover_even(r_limit: int) -> int:
    """Largest even r <= r_limit where (14/15)^(r/6) < (r/2)(14/15)^(r/4).

    Both sides raised to the 12th power: 1 < (r/2)^12 (14/15)^r.
    """
    if r_limit % 2:
        raise DomainError("r_limit must be even")
    for r in range(r_limit, 3, -2):
        if Fraction(r, 2) ** 12 * C4**r > 1:
            return r
    raise NotFound(f"no even r <= {r_limit} where the new bound beats the prior one")


# -- finite oracle ----------------------------------------------------------


def _cited_f4(n: int) -> int:
    with mpmath.workprec(WORKING_PREC):
        return int(mpmath.ceil(mpmath.mpf(14) / 15 * n * n / 2 + n * mpmath.log(n)))


@functools.lru_cache(maxsize=None)
def finite_bound(r: int, n: int) -> int:
    """Best block count from baseline, one halving step (with per-pair
    choice for odd r), and for r = 4 the cited bound. n must be a power of
    two so halves are exact."""
    if r == 0:
        return 1
    if r > n:
        return 0
    if r == 1:
        return 1
    best = baseline_count(n, r)
    if n % 2 == 0:
        h = n // 2
        if r % 2 == 0:
            split = sum(finite_bound(i, h) * finite_bound(r - i, h) for i in range(r + 1))
        else:
            split = 0
            for t in range((r - 1) // 2 + 1):
                interval = lemma1_count(h, h, 2 * t, r - 1 - 2 * t)
                prods = finite_bound(2 * t, h) * finite_bound(r - 2 * t, h) + finite_bound(
                    2 * t + 1, h
                ) * finite_bound(r - 2 * t - 1, h)
                split += min(interval, prods)
        best = min(best, split)
    if r == 4:
        best = min(best, _cited_f4(n))
    return best


def finite_bound_trace(r: int, k_max: int) -> list[tuple[int, int, Fraction]]:
    """(n, B(r, n), B(r, n)/C(n, floor(r/2))) for n = 2^k <= 2^k_max, n >= r."""
    if r < 2 or k_max < 1:
        raise DomainError("need r >= 2 and k_max >= 1")
    out = []
    for k in range(1, k_max + 1):
        n = 2**k
        if n < r:
            continue
        b = finite_bound(r, n)
        out.append((n, b, Fraction(b, comb(n, r // 2))))
    return out
