"""The quadratic character chi_P and bulk character sums.

Two evaluation routes everywhere, by design:

* the reciprocity-based Euclidean reduction (kernel-backed, the fast path);
* the Euler criterion f^((|P|-1)/2) mod P (plain Python, the oracle).

The fast path must agree with the oracle for every irreducible modulus; that
cross-check is the module's defining test.  Character sums likewise come in a
direct flavour (sum over all monic f of degree n) and a Newton-identity
flavour driven by the Euler product, and the two must match coefficient by
coefficient.
"""

from __future__ import annotations

from ffmoment import kernels
from ffmoment.fields import Poly, enumerate_monic, irreducibles_upto


def quadratic_symbol(f: Poly, m: Poly) -> int:
    """(f/m) for monic nonconstant m over F_q, q odd: 0, +1 or -1.

    For irreducible m this is the quadratic character chi_m(f).  For reducible
    m it is the Jacobi-style extension used internally by the reduction.
    """
    f._check(m)
    if m.degree < 1:
        raise ValueError("modulus must be nonconstant")
    if not m.is_monic:
        raise ValueError("modulus must be monic")
    return kernels.symbol(f.coeffs, m.coeffs, f.q)


def euler_symbol(f: Poly, p: Poly) -> int:
    """Oracle path: (f/p) by the Euler criterion, p monic irreducible.

    Computes f^((q^deg(p)-1)/2) mod p with plain Poly arithmetic; the result
    must be 0 or a constant +-1, anything else means p was not irreducible.
    """
    f._check(p)
    if p.degree < 1:
        raise ValueError("modulus must be nonconstant")
    q = f.q
    e = (q ** p.degree - 1) // 2
    r = Poly.one(q)
    b = f % p
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    if r.is_zero:
        return 0
    if r.coeffs == (1,):
        return 1
    if r.coeffs == (q - 1,):
        return -1
    raise ValueError("Euler criterion did not yield a constant; modulus reducible?")


def char_sum(p: Poly, n: int, strategy: str = "direct", cache_dir: str | None = None) -> int:
    """c_n = sum of chi_p(f) over monic f of degree n, as an exact integer."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if strategy == "direct":
        return kernels.char_sum_direct(p.coeffs, n, p.q)
    if strategy == "newton":
        return char_sum_vector(p, n, strategy="newton", cache_dir=cache_dir)[n]
    raise ValueError(f"unknown strategy {strategy!r}")


def prime_symbol_sums(p: Poly, dmax: int, cache_dir: str | None = None) -> list[int]:
    """sigma_d = sum of chi_p(Q) over irreducible Q of degree d, for d <= dmax.

    One batched symbol pass per degree; this is the precomputation that
    dominates a sweep's cost profile.
    """
    by_degree = irreducibles_upto(p.q, dmax, cache_dir)
    sigma = [0] * (dmax + 1)
    for d in range(1, dmax + 1):
        vals = kernels.symbol_many([qq.coeffs for qq in by_degree[d]], p.coeffs, p.q)
        sigma[d] = sum(vals)
    return sigma


def char_sum_vector(
    p: Poly,
    nmax: int,
    strategy: str = "newton",
    cache_dir: str | None = None,
) -> list[int]:
    """(c_0, ..., c_nmax) for the modulus p.

    strategy="direct" sums over every monic f of each degree.  strategy=
    "newton" uses the Euler-product recursion n*c_n = sum_j psi_j c_{n-j},
    where psi_j = sum_{d|j} d * (sigma_d if j/d odd else |P_d|); even powers
    of chi collapse to |P_d| because chi_p(Q)^2 = 1 for Q != p.
    """
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    if strategy == "direct":
        return [kernels.char_sum_direct(p.coeffs, n, p.q) for n in range(nmax + 1)]
    if strategy != "newton":
        raise ValueError(f"unknown strategy {strategy!r}")
    if nmax >= p.degree:
        # chi_p(p) = 0 would break the even-power collapse below
        raise ValueError("newton strategy requires nmax < deg(p)")
    by_degree = irreducibles_upto(p.q, nmax, cache_dir)
    sigma = prime_symbol_sums(p, nmax, cache_dir)
    counts = [0] + [len(by_degree[d]) for d in range(1, nmax + 1)]
    psi = [0] * (nmax + 1)
    for j in range(1, nmax + 1):
        for d in range(1, j + 1):
            if j % d == 0:
                psi[j] += d * (sigma[d] if (j // d) % 2 else counts[d])
    c = [0] * (nmax + 1)
    c[0] = 1
    for n in range(1, nmax + 1):
        s = sum(psi[j] * c[n - j] for j in range(1, n + 1))
        if s % n:
            raise AssertionError("Newton recursion produced a non-integer coefficient")
        c[n] = s // n
    return c


def char_sum_brute_euler(p: Poly, n: int) -> int:
    """Fully independent oracle for c_n: Euler-criterion symbols, term by term."""
    return sum(euler_symbol(f, p) for f in enumerate_monic(p.q, n))
