"""Exact rational evaluation of every closed-form coefficient in play.

Everything here is a Fraction; there is no floating point.  The headline
operation is verify_identity, which tests whether the moment coefficient
c~(n1,n2) and the symplectic random-matrix coefficient b_sp(n1,n2) agree up
to one global sign across a whole grid of orders.  b_sp is evaluated exactly
as its combinatorial sum is printed, and any sign reconciliation happens only
in the grid report, never inside the evaluator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_plus(m: int) -> Fraction:
    """Second-convention Bernoulli number B_m (B_1 = +1/2).

    Recurrence: sum_{k=0}^{m} C(m+1,k) B_k = m+1.
    """
    if m < 0:
        raise ValueError("index must be >= 0")
    while len(_BERNOULLI) <= m:
        n = len(_BERNOULLI)
        s = sum(comb(n + 1, k) * _BERNOULLI[k] for k in range(n))
        _BERNOULLI.append(Fraction(n + 1 - s, n + 1))
    return _BERNOULLI[m]


def faulhaber(k: int, n: int) -> Fraction:
    """J_k(n) = 1^k + 2^k + ... + n^k via the Bernoulli polynomial form."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be >= 0")
    total = sum(
        comb(k + 1, m) * bernoulli_plus(m) * Fraction(n) ** (k + 1 - m)
        for m in range(k + 1)
    )
    return total / (k + 1)


def power_sum_direct(k: int, n: int) -> int:
    """Brute-force oracle for faulhaber."""
    return sum(m**k for m in range(1, n + 1))


@lru_cache(maxsize=None)
def integral_x_two_minus_x(a: int, b: int) -> Fraction:
    """int_0^1 x^a (2-x)^b dx, exactly, by binomial expansion."""
    return sum(
        (-1) ** i * comb(b, i) * Fraction(2 ** (b - i), a + i + 1) for i in range(b + 1)
    )


@lru_cache(maxsize=None)
def a_coeff(m: int, n: int) -> Fraction:
    """A(m,n) = (1/(2(m+n+3))) * int_0^1 (x^(m+1)(2-x)^n + x^(n+1)(2-x)^m) dx."""
    if m < 0 or n < 0:
        raise ValueError("orders must be >= 0")
    val = integral_x_two_minus_x(m + 1, n) + integral_x_two_minus_x(n + 1, m)
    return val / (2 * (m + n + 3))


@lru_cache(maxsize=None)
def c_tilde(mu: int, nu: int) -> Fraction:
    """The q-independent part of the mixed-moment coefficient.

    c~(mu,nu) = 2^-(mu+nu+3) * ( (-1)^(mu+nu) A(mu,nu)
                + sum_{m<=mu} sum_{n<=nu} C(mu,m) C(nu,n) (-2)^(mu+nu-m-n) A(m,n) ).
    The full coefficient is c~(mu,nu) * (1 - 1/q).
    """
    if mu < 0 or nu < 0:
        raise ValueError("orders must be >= 0")
    total = Fraction((-1) ** (mu + nu)) * a_coeff(mu, nu)
    for m in range(mu + 1):
        for n in range(nu + 1):
            total += comb(mu, m) * comb(nu, n) * (-2) ** (mu + nu - m - n) * a_coeff(m, n)
    return total / 2 ** (mu + nu + 3)


def zeta_q(q: int, s: int) -> Fraction:
    """zeta of F_q[t] at an integer s >= 2: 1/(1 - q^(1-s))."""
    if s < 2:
        raise ValueError("zeta_q is exposed only at integer s >= 2")
    return 1 / (1 - Fraction(q) ** (1 - s))


def c_coeff(mu: int, nu: int, q: int) -> Fraction:
    """The mixed-moment leading coefficient at a concrete q: c~(mu,nu)/zeta_q(2)."""
    return c_tilde(mu, nu) * (1 - Fraction(1, q))


@lru_cache(maxsize=None)
def b_sp(n1: int, n2: int) -> Fraction:
    """The symplectic characteristic-polynomial coefficient, exactly as printed:

        (-1)^(n1+n2)/2^(n1+n2+3) * n1! n2! *
        sum over l1,l2,m1,m2 >= 0 with 2l1+2l2 <= n1, 2m1+2m2 <= n2 of
            (2l2+2m2-2l1-2m1-2)
            / ( (n1-2l1-2l2)! (n2-2m1-2m2)! (2l1+2m1+3)! (2l2+2m2+1)! ).

    No sign is adjusted here; verify_identity resolves the global sign.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError("orders must be >= 0")
    total = Fraction(0)
    for l1 in range(n1 // 2 + 1):
        for l2 in range((n1 - 2 * l1) // 2 + 1):
            for m1 in range(n2 // 2 + 1):
                for m2 in range((n2 - 2 * m1) // 2 + 1):
                    num = 2 * l2 + 2 * m2 - 2 * l1 - 2 * m1 - 2
                    den = (
                        factorial(n1 - 2 * l1 - 2 * l2)
                        * factorial(n2 - 2 * m1 - 2 * m2)
                        * factorial(2 * l1 + 2 * m1 + 3)
                        * factorial(2 * l2 + 2 * m2 + 1)
                    )
                    total += Fraction(num, den)
    prefactor = Fraction((-1) ** (n1 + n2) * factorial(n1) * factorial(n2), 2 ** (n1 + n2 + 3))
    return prefactor * total


@dataclass(frozen=True)
class PairRecord:
    n1: int
    n2: int
    c_tilde: Fraction
    b_sp: Fraction
    match: bool


@dataclass(frozen=True)
class CoeffGridReport:
    """Outcome of matching c~ against b_sp on the full square grid.

    epsilon is "+1" or "-1" when one global sign makes every pair match,
    "inconsistent" otherwise (match flags then reflect the better of the two
    candidate signs, ties resolved toward +1).
    """

    max_order: int
    epsilon: str
    pairs: tuple[PairRecord, ...]

    @property
    def all_match(self) -> bool:
        return all(p.match for p in self.pairs)

    def to_json_dict(self) -> dict:
        return {
            "max_order": self.max_order,
            "epsilon": self.epsilon,
            "pairs": [
                {
                    "n1": p.n1,
                    "n2": p.n2,
                    "c_tilde": str(p.c_tilde),
                    "b_sp": str(p.b_sp),
                    "match": p.match,
                }
                for p in self.pairs
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def verify_identity(max_order: int) -> CoeffGridReport:
    """Test c~(n1,n2) = eps * b_sp(n1,n2) for a single global eps over the grid
    0 <= n1, n2 <= max_order.  Exact rational comparison, zero tolerance."""
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    values = [
        (n1, n2, c_tilde(n1, n2), b_sp(n1, n2))
        for n1 in range(max_order + 1)
        for n2 in range(max_order + 1)
    ]
    matches = {
        eps: [ct == eps * b for (_, _, ct, b) in values] for eps in (1, -1)
    }
    if all(matches[1]):
        eps, label = 1, "+1"
    elif all(matches[-1]):
        eps, label = -1, "-1"
    else:
        eps = 1 if sum(matches[1]) >= sum(matches[-1]) else -1
        label = "inconsistent"
    pairs = tuple(
        PairRecord(n1, n2, ct, b, ct == eps * b)
        for (n1, n2, ct, b), _ in zip(values, matches[eps])
    )
    return CoeffGridReport(max_order, label, pairs)


# -- Riemann-sum cross-checks for the integral coefficients ------------------


def riemann_sum_gap(m: int, n: int, j: int) -> Fraction:
    """| (1/j^(m+n+1)) sum_{k<j} k^m (2j-k)^n  -  int_0^1 x^m (2-x)^n dx |."""
    if j < 1:
        raise ValueError("j must be >= 1")
    s = sum(k**m * (2 * j - k) ** n for k in range(j))
    return abs(Fraction(s, j ** (m + n + 1)) - integral_x_two_minus_x(m, n))


def power_sum_poly_in_j(m: int, n: int) -> list[Fraction]:
    """Coefficients (in j) of sum_{k=0}^{j-1} k^m (2j-k)^n as a polynomial of
    degree m+n+1, via binomial expansion and Faulhaber polynomials.

    Expand (2j-k)^n = sum_i C(n,i) (2j)^(n-i) (-k)^i; then sum_{k<j} k^(m+i)
    = J_{m+i}(j-1), itself a polynomial in j.
    """
    deg = m + n + 1
    out = [Fraction(0)] * (deg + 1)
    for i in range(n + 1):
        pref = comb(n, i) * Fraction(2) ** (n - i) * (-1) ** i
        # sum_{k=0}^{j-1} k^p = J_p(j-1), plus the k=0 term (0^0 = 1) when p = 0
        p = m + i
        inner = [Fraction(0)] * (p + 2)
        if p == 0:
            inner[0] += 1
        for mm in range(p + 1):
            b = comb(p + 1, mm) * bernoulli_plus(mm) / (p + 1)
            # (j-1)^(p+1-mm) expanded
            e = p + 1 - mm
            for t in range(e + 1):
                inner[t] += b * comb(e, t) * (-1) ** (e - t)
        for t, cf in enumerate(inner):
            if cf:
                out[t + n - i] += pref * cf
    return out
