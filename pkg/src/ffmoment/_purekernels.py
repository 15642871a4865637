"""Pure-Python implementations of the hot kernels.

Same surface as the compiled extension in ``_kernels.pyx``: polynomials cross
the boundary as coefficient sequences (low degree first), scalars as ints.
This module is the fallback backend and the reference the compiled kernels
are tested against.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

NAME = "pure"


def _rem(a: list[int], b: Sequence[int], q: int) -> list[int]:
    """a mod b in place, b monic.  Returns the trimmed remainder."""
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            off = i - db
            for j in range(db):
                a[off + j] = (a[off + j] - c * b[j]) % q
    del a[db:]
    while a and a[-1] == 0:
        a.pop()
    return a


def symbol(f: Sequence[int], m: Sequence[int], q: int) -> int:
    """Quadratic residue symbol (f/m) for monic nonconstant m over F_q, q odd.

    Evaluated by reciprocity-based Euclidean reduction: extract the leading
    coefficient c of each remainder via (c/m) = legendre(c)^deg(m), then swap
    (f/m) -> (m/f) at the cost of (-1)^(((q-1)/2) deg(f) deg(m)).
    Completely multiplicative in f; returns 0 iff gcd(f, m) != 1.
    """
    half_odd = ((q - 1) // 2) & 1
    half = (q - 1) // 2
    fl = _rem(list(f), m, q)
    ml = list(m)
    s = 1
    while True:
        if not fl:
            return 0
        dm = len(ml) - 1
        c = fl[-1]
        if c != 1:
            inv = pow(c, q - 2, q)
            fl = [(x * inv) % q for x in fl]
            if (dm & 1) and pow(c, half, q) == q - 1:
                s = -s
        df = len(fl) - 1
        if df == 0:
            return s
        if half_odd and (df & 1) and (dm & 1):
            s = -s
        fl, ml = _rem(ml, fl, q), fl


def symbol_many(fs: Sequence[Sequence[int]], m: Sequence[int], q: int) -> list[int]:
    return [symbol(f, m, q) for f in fs]


def char_sum_direct(m: Sequence[int], n: int, q: int) -> int:
    """Sum of (f/m) over all q^n monic f of degree n."""
    if n == 0:
        return symbol((1,), m, q)
    total = 0
    for low in product(range(q), repeat=n):
        total += symbol(low + (1,), m, q)
    return total


def _mulmod(a: list[int], b: list[int], mod: Sequence[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _rem(out, mod, q)


def _powmod(base: list[int], e: int, mod: Sequence[int], q: int) -> list[int]:
    result = [1]
    b = list(base)
    while e:
        if e & 1:
            result = _mulmod(result, b, mod, q)
        b = _mulmod(b, b, mod, q)
        e >>= 1
    return result


def _gcd_deg(a: list[int], b: list[int], q: int) -> int:
    """Degree of gcd(a, b); -1 if the gcd is zero (both inputs zero)."""
    while b:
        inv = pow(b[-1], q - 2, q)
        bm = [(x * inv) % q for x in b]
        a, b = b, _rem(a, bm, q)
    return len(a) - 1


def poly_is_irreducible(f: Sequence[int], q: int) -> bool:
    """Distinct-degree test: f (monic, deg >= 1) is irreducible iff
    gcd(f, t^(q^i) - t) = 1 for every 1 <= i <= deg(f)/2."""
    d = len(f) - 1
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d == 1:
        return True
    r = [0, 1]
    for _ in range(d // 2):
        r = _powmod(r, q, f, q)
        diff = list(r)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % q
        while diff and diff[-1] == 0:
            diff.pop()
        if _gcd_deg(list(f), diff, q) != 0:
            return False
    return True
