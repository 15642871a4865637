"""L-polynomials of the quadratic characters and their central derivatives.

For an irreducible p of degree 2g+1 the generating polynomial of the
character sums has integer coefficients (c_0, ..., c_2g) with c_0 = 1 and the
reflection symmetry c_{2g-n} = q^(g-n) c_n.  Central derivative values
L^(k)(1/2)/(log q)^k live in Q(sqrt(q)) and are kept exact: QSqrtValue stores
a + b * q^(-1/2) with rational a, b, which is a faithful representation since
sqrt(q) is irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ffmoment.fields import Poly
from ffmoment.quad_char import char_sum_vector, char_sum

_RatLike = (int, Fraction)


class QSqrtValue:
    """An exact element rat + surd * q^(-1/2) of Q(sqrt(q))."""

    __slots__ = ("q", "rat", "surd")

    def __init__(self, q: int, rat=0, surd=0) -> None:
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rat", Fraction(rat))
        object.__setattr__(self, "surd", Fraction(surd))

    def __setattr__(self, *a) -> None:  # pragma: no cover
        raise AttributeError("QSqrtValue is immutable")

    @classmethod
    def half_power(cls, q: int, n: int) -> "QSqrtValue":
        """q^(n/2) for any integer n (negative allowed)."""
        if n % 2 == 0:
            return cls(q, Fraction(q) ** (n // 2), 0)
        return cls(q, 0, Fraction(q) ** ((n + 1) // 2))

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "QSqrtValue":
        if isinstance(other, QSqrtValue):
            if other.q != self.q:
                raise ValueError(f"mismatched surd bases: {self.q} vs {other.q}")
            return other
        if isinstance(other, _RatLike):
            return QSqrtValue(self.q, other, 0)
        raise TypeError(f"cannot combine QSqrtValue with {type(other).__name__}")

    def __add__(self, other) -> "QSqrtValue":
        o = self._coerce(other)
        return QSqrtValue(self.q, self.rat + o.rat, self.surd + o.surd)

    __radd__ = __add__

    def __sub__(self, other) -> "QSqrtValue":
        o = self._coerce(other)
        return QSqrtValue(self.q, self.rat - o.rat, self.surd - o.surd)

    def __rsub__(self, other) -> "QSqrtValue":
        return self._coerce(other) - self

    def __neg__(self) -> "QSqrtValue":
        return QSqrtValue(self.q, -self.rat, -self.surd)

    def __mul__(self, other) -> "QSqrtValue":
        o = self._coerce(other)
        # (a + b s)(c + d s) with s^2 = 1/q
        return QSqrtValue(
            self.q,
            self.rat * o.rat + Fraction(self.surd * o.surd, self.q),
            self.rat * o.surd + self.surd * o.rat,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QSqrtValue":
        o = self._coerce(other)
        denom = o.rat * o.rat - Fraction(o.surd * o.surd, self.q)
        if denom == 0:
            if o.rat == 0 and o.surd == 0:
                raise ZeroDivisionError("division by zero QSqrtValue")
            raise ZeroDivisionError("norm vanished; base q not prime?")
        conj = QSqrtValue(self.q, o.rat, -o.surd)
        num = self * conj
        return QSqrtValue(self.q, num.rat / denom, num.surd / denom)

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.rat == 0 and self.surd == 0

    @property
    def is_rational(self) -> bool:
        return self.surd == 0

    def sign(self) -> int:
        """Exact sign of the real number rat + surd/sqrt(q)."""
        if self.surd == 0:
            return (self.rat > 0) - (self.rat < 0)
        if self.rat == 0:
            return 1 if self.surd > 0 else -1
        if self.rat > 0 and self.surd > 0:
            return 1
        if self.rat < 0 and self.surd < 0:
            return -1
        # opposite signs: compare q*rat^2 against surd^2
        big_rat = self.q * self.rat * self.rat > self.surd * self.surd
        dominant_positive = self.rat > 0 if big_rat else self.surd > 0
        if self.q * self.rat * self.rat == self.surd * self.surd:
            return 0  # impossible for prime q unless both zero, kept for safety
        return 1 if dominant_positive else -1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _RatLike):
            other = QSqrtValue(self.q, other, 0)
        return (
            isinstance(other, QSqrtValue)
            and other.q == self.q
            and other.rat == self.rat
            and other.surd == self.surd
        )

    def __hash__(self) -> int:
        return hash((self.q, self.rat, self.surd))

    def __float__(self) -> float:
        return float(self.rat) + float(self.surd) / self.q**0.5

    def __repr__(self) -> str:
        return f"QSqrtValue({self.q}, {self.rat}, {self.surd})"

    def render(self) -> str:
        """Human-auditable exact form plus a 15-significant-digit decimal."""
        return f"{self.rat} + {self.surd}·√{self.q}⁻¹ ≈ {float(self):.15g}"


def qsqrt_sum(q: int, weighted_halves) -> QSqrtValue:
    """sum of w * q^(-n/2) over (n, w) pairs, w int or Fraction, exact."""
    rat = Fraction(0)
    surd = Fraction(0)
    for n, w in weighted_halves:
        if n % 2 == 0:
            rat += Fraction(w, q ** (n // 2))
        else:
            surd += Fraction(w, q ** ((n - 1) // 2))
    return QSqrtValue(q, rat, surd)


@dataclass(frozen=True)
class LPolynomial:
    """Coefficient vector (c_0, ..., c_2g) of the character-sum polynomial."""

    q: int
    g: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 2 * self.g + 1:
            raise ValueError("coefficient vector must have length 2g+1")
        if self.coeffs[0] != 1:
            raise ValueError("c_0 must be 1")


def l_polynomial(p: Poly, strategy: str = "newton", cache_dir: str | None = None) -> LPolynomial:
    """The full coefficient vector for an irreducible p of odd degree >= 3.

    Both strategies honestly compute every c_n = char_sum(p, n); neither uses
    the reflection symmetry, so checking it afterwards is not circular.
    """
    d = p.degree
    if d < 3 or d % 2 == 0:
        raise ValueError("modulus must have odd degree >= 3")
    g = (d - 1) // 2
    if strategy == "direct":
        coeffs = [char_sum(p, n, "direct") for n in range(2 * g + 1)]
    elif strategy == "newton":
        coeffs = char_sum_vector(p, 2 * g, "newton", cache_dir)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return LPolynomial(p.q, g, tuple(coeffs))


def check_functional_equation(lp: LPolynomial) -> bool:
    """c_{2g-n} == q^(g-n) * c_n for 0 <= n <= g (the other half is mirrored)."""
    q, g, c = lp.q, lp.g, lp.coeffs
    return all(c[2 * g - n] == q ** (g - n) * c[n] for n in range(g + 1))


def central_derivative(lp: LPolynomial, k: int, method: str = "direct") -> QSqrtValue:
    """L^(k)(1/2)/(log q)^k as an exact QSqrtValue.

    direct: sum over all 2g+1 coefficients of (-n)^k q^(-n/2) c_n.
    folded: the half-length form obtained from the reflection symmetry,
        (-1)^k sum_{n<=g} n^k q^(-n/2) c_n
        + sum_{m<=k} C(k,m) (-2g)^(k-m) sum_{n<=g-1} n^m q^(-n/2) c_n.
    The two agree exactly iff the functional equation holds.
    """
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    q, g, c = lp.q, lp.g, lp.coeffs
    if method == "direct":
        return qsqrt_sum(q, ((n, (-n) ** k * c[n]) for n in range(2 * g + 1)))
    if method != "folded":
        raise ValueError(f"unknown method {method!r}")
    first = qsqrt_sum(q, ((n, n**k * c[n]) for n in range(g + 1)))
    total = QSqrtValue(q) + (-1) ** k * first
    for m in range(k + 1):
        inner = qsqrt_sum(q, ((n, n**m * c[n]) for n in range(g)))
        total = total + comb(k, m) * (-2 * g) ** (k - m) * inner
    return total


def serialize_lpolynomial(p: Poly, lp: LPolynomial) -> str:
    return f"P={p.to_string()} c={','.join(str(c) for c in lp.coeffs)}"


def parse_lpolynomial(q: int, line: str) -> tuple[Poly, LPolynomial]:
    try:
        p_part, c_part = line.strip().split()
        p = Poly.from_string(q, p_part.removeprefix("P="))
        coeffs = tuple(int(c) for c in c_part.removeprefix("c=").split(","))
    except ValueError:
        raise ValueError(f"bad L-polynomial line {line!r}") from None
    if len(coeffs) % 2 == 0:
        raise ValueError(f"even-length coefficient vector in {line!r}")
    return p, LPolynomial(q, (len(coeffs) - 1) // 2, coeffs)
