# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: quadratic residue symbols, brute character sums and
the distinct-degree irreducibility test.

Mirrors ffmoment._purekernels exactly; the parity tests enumerate both.
Coefficient buffers are fixed-size stack arrays, so degrees are capped at
MAXDEG (far beyond anything the desk-scale sweeps produce).
"""

from libc.string cimport memcpy

NAME = "cython"

DEF MAXDEG = 512
DEF BUFLEN = 2 * MAXDEG + 2


cdef long _ipow_mod(long base, long e, long m) noexcept nogil:
    cdef long r = 1 % m
    base %= m
    if base < 0:
        base += m
    while e:
        if e & 1:
            r = (r * base) % m
        base = (base * base) % m
        e >>= 1
    return r


cdef inline long _inv_mod(long c, long q) noexcept nogil:
    return _ipow_mod(c, q - 2, q)


cdef int _rem_c(long* a, int da, long* b, int db, long q) noexcept nogil:
    """a mod b in place, b monic of degree db >= 0.  Returns deg(a mod b)."""
    cdef int i, j, off
    cdef long c, v
    for i in range(da, db - 1, -1):
        c = a[i]
        if c != 0:
            a[i] = 0
            off = i - db
            for j in range(db):
                v = (a[off + j] - c * b[j]) % q
                if v < 0:
                    v += q
                a[off + j] = v
    i = db - 1
    if da < i:
        i = da
    while i >= 0 and a[i] == 0:
        i -= 1
    return i


cdef int _symbol_c(long* fb, int df, long* mb, int dm, long q) noexcept nogil:
    """(f/m) with m monic nonconstant; fb/mb are caller-owned scratch."""
    cdef int s = 1
    cdef int half_odd = ((q - 1) // 2) & 1
    cdef int j, nd, dm2
    cdef long c, inv
    cdef long* tswap
    df = _rem_c(fb, df, mb, dm, q)
    while True:
        if df < 0:
            return 0
        c = fb[df]
        if c != 1:
            inv = _inv_mod(c, q)
            for j in range(df + 1):
                fb[j] = (fb[j] * inv) % q
            if (dm & 1) and _ipow_mod(c, (q - 1) // 2, q) == q - 1:
                s = -s
        if df == 0:
            return s
        if half_odd and (df & 1) and (dm & 1):
            s = -s
        nd = _rem_c(mb, dm, fb, df, q)
        tswap = fb
        fb = mb
        mb = tswap
        dm2 = df
        df = nd
        dm = dm2


cdef int _load(object seq, long* buf, long q) except -2:
    """Copy a coefficient sequence into buf reduced mod q; returns the degree."""
    cdef int n = len(seq)
    cdef int i
    if n > MAXDEG + 1:
        raise ValueError("polynomial degree exceeds kernel buffer")
    for i in range(n):
        buf[i] = seq[i] % q
    i = n - 1
    while i >= 0 and buf[i] == 0:
        i -= 1
    return i


cdef void _check_modulus(long* mb, int dm) except *:
    if dm < 1:
        raise ValueError("modulus must be nonconstant")
    if mb[dm] != 1:
        raise ValueError("modulus must be monic")


def symbol(f, m, long q):
    """Quadratic residue symbol (f/m): 0, +1 or -1."""
    cdef long fb[BUFLEN]
    cdef long mb[BUFLEN]
    cdef int df = _load(f, fb, q)
    cdef int dm = _load(m, mb, q)
    _check_modulus(mb, dm)
    return _symbol_c(fb, df, mb, dm, q)


def symbol_many(fs, m, long q):
    """[(f/m) for f in fs], reusing one modulus copy."""
    cdef long m0[BUFLEN]
    cdef long fb[BUFLEN]
    cdef long mb[BUFLEN]
    cdef int dm = _load(m, m0, q)
    cdef int df
    _check_modulus(m0, dm)
    out = []
    for f in fs:
        df = _load(f, fb, q)
        memcpy(mb, m0, (dm + 1) * sizeof(long))
        out.append(_symbol_c(fb, df, mb, dm, q))
    return out


def char_sum_direct(m, int n, long q):
    """Sum of (f/m) over all monic f of degree n."""
    cdef long m0[BUFLEN]
    cdef long fb[BUFLEN]
    cdef long mb[BUFLEN]
    cdef long digits[MAXDEG]
    cdef int dm = _load(m, m0, q)
    cdef long total = 0
    cdef int i
    _check_modulus(m0, dm)
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n > MAXDEG:
        raise ValueError("degree exceeds kernel buffer")
    # guard the C accumulator: |sum| <= q^n must fit in a long
    if (<object>q) ** n >= 1 << 62:
        raise ValueError("q^n too large for the compiled accumulator")
    for i in range(n):
        digits[i] = 0
    with nogil:
        while True:
            for i in range(n):
                fb[i] = digits[i]
            fb[n] = 1
            memcpy(mb, m0, (dm + 1) * sizeof(long))
            total += _symbol_c(fb, n, mb, dm, q)
            i = 0
            while i < n and digits[i] == q - 1:
                digits[i] = 0
                i += 1
            if i == n:
                break
            digits[i] += 1
    return total


cdef int _mulmod_c(long* a, int da, long* b, int db, long* mod, int dmod,
                   long q, long* out) noexcept nogil:
    cdef int i, j
    if da < 0 or db < 0:
        return -1
    for i in range(da + db + 1):
        out[i] = 0
    for i in range(da + 1):
        if a[i]:
            for j in range(db + 1):
                out[i + j] = (out[i + j] + a[i] * b[j]) % q
    return _rem_c(out, da + db, mod, dmod, q)


cdef int _gcd_deg_c(long* a, int da, long* b, int db, long q) noexcept nogil:
    """deg gcd(a, b); mutates both buffers."""
    cdef long inv
    cdef int j, dt
    cdef long* t
    while db >= 0:
        if b[db] != 1:
            inv = _inv_mod(b[db], q)
            for j in range(db + 1):
                b[j] = (b[j] * inv) % q
        da = _rem_c(a, da, b, db, q)
        t = a
        a = b
        b = t
        dt = da
        da = db
        db = dt
    return da


def poly_is_irreducible(f, long q):
    """Distinct-degree test: gcd(f, t^(q^i) - t) = 1 for all i <= deg(f)/2."""
    cdef long fbuf[BUFLEN]
    cdef long r[BUFLEN]
    cdef long b[BUFLEN]
    cdef long tmp[BUFLEN]
    cdef long acopy[BUFLEN]
    cdef long diff[BUFLEN]
    cdef int d = _load(f, fbuf, q)
    cdef int dr, dbb, it, i, dd
    cdef long e
    if d < 1:
        raise ValueError("degree must be >= 1")
    if fbuf[d] != 1:
        raise ValueError("polynomial must be monic")
    if d == 1:
        return True
    if d > MAXDEG // 2:
        raise ValueError("degree exceeds kernel buffer")
    r[0] = 0
    r[1] = 1
    dr = 1
    with nogil:
        for it in range(d // 2):
            # r <- r^q mod f  (square and multiply over the exponent q)
            memcpy(b, r, (dr + 1) * sizeof(long))
            dbb = dr
            dr = 0
            r[0] = 1
            e = q
            while e:
                if e & 1:
                    dr = _mulmod_c(r, dr, b, dbb, fbuf, d, q, tmp)
                    if dr >= 0:
                        memcpy(r, tmp, (dr + 1) * sizeof(long))
                dbb = _mulmod_c(b, dbb, b, dbb, fbuf, d, q, tmp)
                if dbb >= 0:
                    memcpy(b, tmp, (dbb + 1) * sizeof(long))
                e >>= 1
            # diff <- r - t
            dd = dr if dr >= 1 else 1
            for i in range(dd + 1):
                diff[i] = r[i] if i <= dr else 0
            diff[1] = (diff[1] - 1) % q
            if diff[1] < 0:
                diff[1] += q
            while dd >= 0 and diff[dd] == 0:
                dd -= 1
            memcpy(acopy, fbuf, (d + 1) * sizeof(long))
            if _gcd_deg_c(acopy, d, diff, dd, q) != 0:
                return False
    return True
