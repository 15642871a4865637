"""Monic polynomial arithmetic over F_q[t] for odd prime q.

Polynomials are immutable coefficient tuples (low degree first) tagged with
the field modulus.  Everything here is desk-scale: degrees stay small enough
that schoolbook arithmetic and trial division are the honest choices, and the
fast irreducibility test is cross-checked against them in the test suite.

Canonical text format: for q < 10 a polynomial is a digit string, most
significant coefficient first ("1021" is t^3 + 2t + 1 over F_3); for q >= 10
the coefficients are comma separated in the same order.  The zero polynomial
is "0".  Enumeration order is lexicographic on that string.
"""

from __future__ import annotations

import os
from itertools import product
from typing import Iterator, Sequence

from ffmoment import kernels

CACHE_ENV = "FFMOMENT_CACHE"
DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "ffmoment")


class CacheStats:
    """Hit/miss counters for the on-disk irreducible cache."""

    def __init__(self) -> None:
        self.hits = 0
        self.misses = 0

    def reset(self) -> None:
        self.hits = 0
        self.misses = 0

    def __repr__(self) -> str:
        return f"CacheStats(hits={self.hits}, misses={self.misses})"


CACHE_STATS = CacheStats()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The scalar field F_q, q an odd prime.  Elements are ints in [0, q)."""

    __slots__ = ("q",)

    def __init__(self, q: int) -> None:
        if not _is_prime(q):
            raise ValueError(f"q={q} is not prime")
        if q % 2 == 0:
            raise ValueError("q must be odd")
        self.q = q

    def inv(self, c: int) -> int:
        if c % self.q == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(c, self.q - 2, self.q)

    def legendre(self, c: int) -> int:
        """Legendre symbol of the scalar c: 0, +1 or -1."""
        r = pow(c % self.q, (self.q - 1) // 2, self.q)
        return -1 if r == self.q - 1 else r

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


class Poly:
    """A polynomial over F_q, stored low degree first with no trailing zeros.

    The zero polynomial has coeffs == () and degree -1.  Instances are
    immutable and hashable, so they can be shared freely between workers.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Sequence[int]) -> None:
        cs = [c % q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a) -> None:  # pragma: no cover
        raise AttributeError("Poly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> "Poly":
        return cls(q, ())

    @classmethod
    def one(cls, q: int) -> "Poly":
        return cls(q, (1,))

    @classmethod
    def x(cls, q: int) -> "Poly":
        return cls(q, (0, 1))

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def norm(self) -> int:
        """|f| = q^deg(f); 0 for the zero polynomial."""
        return 0 if self.is_zero else self.q ** self.degree

    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        """Scale to leading coefficient 1."""
        c = self.leading()
        if c == 1:
            return self
        inv = pow(c, self.q - 2, self.q)
        return Poly(self.q, [a * inv for a in self.coeffs])

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.q != self.q:
            raise ValueError(f"mismatched moduli: {self.q} vs {other.q}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(self.q, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return Poly(self.q, out)

    def __neg__(self) -> "Poly":
        return Poly(self.q, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.q)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.q, out)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        r = Poly.one(self.q)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        q, db = self.q, other.degree
        inv_lead = pow(other.coeffs[-1], q - 2, q)
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = (rem[i] * inv_lead) % q
            if c:
                quot[i - db] = c
                off = i - db
                for j, b in enumerate(other.coeffs):
                    rem[off + j] = (rem[off + j] - c * b) % q
        return Poly(q, quot), Poly(q, rem[:db])

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def derivative(self) -> "Poly":
        return Poly(self.q, [i * c for i, c in enumerate(self.coeffs)][1:])

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.q == self.q
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.q, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({self.q}, {self.to_string()!r})"

    # -- canonical text format --------------------------------------------

    def to_string(self) -> str:
        if self.is_zero:
            return "0"
        digits = [str(c) for c in reversed(self.coeffs)]
        return "".join(digits) if self.q < 10 else ",".join(digits)

    @classmethod
    def from_string(cls, q: int, s: str) -> "Poly":
        s = s.strip()
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return cls.zero(q)
        parts = list(s) if q < 10 else s.split(",")
        try:
            coeffs = [int(p) for p in reversed(parts)]
        except ValueError:
            raise ValueError(f"bad polynomial string {s!r}") from None
        if any(c < 0 or c >= q for c in coeffs):
            raise ValueError(f"coefficient out of range in {s!r} for q={q}")
        if coeffs[-1] == 0:
            raise ValueError(f"leading zero in polynomial string {s!r}")
        return cls(q, coeffs)


# -- module-level operation aliases ---------------------------------------


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_rem(a: Poly, b: Poly) -> Poly:
    return a % b


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; raises if both inputs are zero."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


# -- enumeration ------------------------------------------------------------


def enumerate_monic(q: int, n: int) -> Iterator[Poly]:
    """All q^n monic polynomials of degree n, lexicographic on the canonical
    string (leading 1, then high-to-low coefficients)."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    PrimeField(q)
    if n == 0:
        yield Poly.one(q)
        return
    for high_to_low in product(range(q), repeat=n):
        yield Poly(q, tuple(reversed(high_to_low)) + (1,))


def enumerate_monic_upto(q: int, n: int) -> Iterator[Poly]:
    for d in range(n + 1):
        yield from enumerate_monic(q, d)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius undefined for n < 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def irreducible_count(q: int, n: int) -> int:
    """|P_n| by the Moebius necklace formula: (1/n) * sum_{d|n} mu(d) q^(n/d)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum(mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


def is_irreducible(f: Poly, method: str = "ddf") -> bool:
    """Irreducibility of a monic polynomial of degree >= 1.

    method="ddf" is the fast distinct-degree gcd test (kernel-backed);
    method="trial" divides by every monic polynomial of degree <= deg(f)/2
    and is the independent oracle.
    """
    if not f.is_monic:
        raise ValueError("irreducibility test requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("constants are neither irreducible nor reducible here")
    if method == "ddf":
        return bool(kernels.poly_is_irreducible(f.coeffs, f.q))
    if method == "trial":
        for d in range(1, f.degree // 2 + 1):
            for g in enumerate_monic(f.q, d):
                if (f % g).is_zero:
                    return False
        return True
    raise ValueError(f"unknown method {method!r}")


# -- irreducible cache ------------------------------------------------------


def resolve_cache_dir(cache_dir: str | None = None) -> str:
    path = cache_dir or os.environ.get(CACHE_ENV) or DEFAULT_CACHE_DIR
    return os.path.expanduser(path)


def _cache_path(cache_dir: str, q: int, n: int) -> str:
    return os.path.join(cache_dir, f"irreducibles_q{q}_n{n}.txt")


def _read_cache(path: str, q: int, n: int) -> list[Poly] | None:
    try:
        with open(path, "r", encoding="ascii") as fh:
            header = fh.readline().strip()
            lines = fh.read().split()
    except OSError:
        return None
    expected = irreducible_count(q, n)
    if header != f"q={q} n={n} count={expected}" or len(lines) != expected:
        return None
    try:
        return [Poly.from_string(q, s) for s in lines]
    except ValueError:
        return None


def _write_cache(path: str, q: int, n: int, polys: list[Poly]) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(f"q={q} n={n} count={len(polys)}\n")
        for p in polys:
            fh.write(p.to_string() + "\n")
    os.replace(tmp, path)


def enumerate_irreducibles(q: int, n: int, cache_dir: str | None = None) -> list[Poly]:
    """All monic irreducibles of degree n, enumeration order, disk-cached.

    The freshly sieved list is checked against the Moebius count before it is
    trusted or written out.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    PrimeField(q)
    directory = resolve_cache_dir(cache_dir)
    path = _cache_path(directory, q, n)
    cached = _read_cache(path, q, n)
    if cached is not None:
        CACHE_STATS.hits += 1
        return cached
    CACHE_STATS.misses += 1
    polys = [f for f in enumerate_monic(q, n) if is_irreducible(f)]
    expected = irreducible_count(q, n)
    if len(polys) != expected:
        raise AssertionError(
            f"irreducible sieve found {len(polys)}, Moebius formula says {expected}"
        )
    _write_cache(path, q, n, polys)
    return polys


def irreducibles_upto(q: int, n: int, cache_dir: str | None = None) -> list[list[Poly]]:
    """Lists of irreducibles indexed by degree: [..][d] for 1 <= d <= n ([0] empty)."""
    return [[]] + [enumerate_irreducibles(q, d, cache_dir) for d in range(1, n + 1)]


# -- factorization-backed helpers (desk scale only) -------------------------


def factor_monic(f: Poly, cache_dir: str | None = None) -> dict[Poly, int]:
    """Factor a monic polynomial by trial division against cached irreducibles.

    Intended for small degrees; the moment sweeps never factor anything large.
    """
    if not f.is_monic:
        raise ValueError("factor_monic needs a monic polynomial")
    factors: dict[Poly, int] = {}
    rest = f
    d = 1
    while rest.degree >= 1:
        if d > rest.degree // 2:
            factors[rest] = factors.get(rest, 0) + 1
            break
        for p in enumerate_irreducibles(f.q, d, cache_dir):
            while True:
                quot, rem = divmod(rest, p)
                if rem.is_zero:
                    factors[p] = factors.get(p, 0) + 1
                    rest = quot
                else:
                    break
        d += 1
    return factors


def monic_divisors(f: Poly, cache_dir: str | None = None) -> list[Poly]:
    """All monic divisors of a monic polynomial."""
    divisors = [Poly.one(f.q)]
    for p, e in factor_monic(f, cache_dir).items():
        powers = [p**i for i in range(e + 1)]
        divisors = [d * pw for d in divisors for pw in powers]
    return divisors


def squarefree_decompose(l: Poly, cache_dir: str | None = None) -> tuple[Poly, Poly]:
    """Write a monic l as l1 * l2^2 with l1 monic square-free, l2 monic."""
    if l.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    if not l.is_monic:
        raise ValueError("squarefree_decompose needs a monic polynomial")
    l1 = Poly.one(l.q)
    l2 = Poly.one(l.q)
    for p, e in factor_monic(l, cache_dir).items():
        if e % 2:
            l1 = l1 * p
        l2 = l2 * p ** (e // 2)
    return l1, l2


def is_squarefree(f: Poly) -> bool:
    """gcd(f, f') == 1; valid in odd characteristic for monic f."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    d = f.derivative()
    if d.is_zero:
        return f.degree == 0
    return poly_gcd(f, d).is_one


def monic_sqrt(f: Poly) -> Poly | None:
    """The monic square root of f, or None if f is not a perfect square."""
    if f.is_zero:
        return None
    if not f.is_monic or f.degree % 2:
        return None
    if f.degree == 0:
        return Poly.one(f.q)
    q, k = f.q, f.degree // 2
    inv2 = pow(2, q - 2, q)
    s = [0] * (k + 1)
    s[k] = 1
    fc = f.coeffs
    for j in range(1, k + 1):
        acc = 0
        for i in range(1, j):
            hi, lo = k - i, k - j + i
            acc += s[hi] * s[lo]
        s[k - j] = ((fc[2 * k - j] - acc) * inv2) % q
    cand = Poly(q, s)
    return cand if cand * cand == f else None


def is_square(f: Poly) -> bool:
    return monic_sqrt(f) is not None
