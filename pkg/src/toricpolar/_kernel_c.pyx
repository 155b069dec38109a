# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term kernel: sparse polynomial arithmetic over F_p.

Behavioural twin of _kernel_py (see that module for the conventions).
Coefficient arithmetic uses 64-bit machine integers, so this kernel is
only selected for primes below 2^31; larger primes fall back to the
pure-Python kernel.
"""

cdef int GREVLEX = 0
cdef int LEX = 1
cdef int BLOCK = 2


cdef inline int _grevlex_cmp_range(tuple e1, tuple e2, Py_ssize_t lo, Py_ssize_t hi):
    cdef long long d1 = 0, d2 = 0
    cdef long long a, b
    cdef Py_ssize_t i
    for i in range(lo, hi):
        d1 += <long long> e1[i]
        d2 += <long long> e2[i]
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for i in range(hi - 1, lo - 1, -1):
        a = <long long> e1[i]
        b = <long long> e2[i]
        if a != b:
            return 1 if a < b else -1
    return 0


cdef int _exp_cmp(tuple e1, tuple e2, int kind, int block):
    cdef Py_ssize_t n = len(e1)
    cdef int c
    cdef Py_ssize_t i
    cdef long long a, b
    if kind == GREVLEX:
        return _grevlex_cmp_range(e1, e2, 0, n)
    if kind == LEX:
        for i in range(n):
            a = <long long> e1[i]
            b = <long long> e2[i]
            if a != b:
                return 1 if a > b else -1
        return 0
    c = _grevlex_cmp_range(e1, e2, 0, block)
    if c:
        return c
    return _grevlex_cmp_range(e1, e2, block, n)


def exp_cmp(tuple e1, tuple e2, int kind, int block):
    """Three-way comparison of exponent tuples: -1, 0 or 1."""
    return _exp_cmp(e1, e2, kind, block)


cdef inline tuple _exp_add(tuple e, tuple d):
    cdef Py_ssize_t n = len(e)
    cdef list r = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        r[i] = (<long long> e[i]) + (<long long> d[i])
    return tuple(r)


def exp_add(tuple e, tuple d):
    return _exp_add(e, d)


def exp_sub(tuple e, tuple d):
    cdef Py_ssize_t n = len(e)
    cdef list r = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        r[i] = (<long long> e[i]) - (<long long> d[i])
    return tuple(r)


def exp_lcm(tuple e1, tuple e2):
    cdef Py_ssize_t n = len(e1)
    cdef list r = [0] * n
    cdef long long a, b
    cdef Py_ssize_t i
    for i in range(n):
        a = <long long> e1[i]
        b = <long long> e2[i]
        r[i] = a if a > b else b
    return tuple(r)


cdef inline bint _exp_divides(tuple d, tuple e):
    cdef Py_ssize_t n = len(d)
    cdef Py_ssize_t i
    for i in range(n):
        if (<long long> d[i]) > (<long long> e[i]):
            return False
    return True


def exp_divides(tuple d, tuple e):
    """True when the monomial x^d divides x^e."""
    return _exp_divides(d, e)


cdef tuple _leading_exponent(dict terms, int kind, int block):
    cdef tuple best = None
    cdef tuple e
    for e in terms:
        if best is None or _exp_cmp(e, best, kind, block) > 0:
            best = e
    return best


def leading_exponent(dict terms, int kind, int block):
    """Largest exponent of `terms` in the order, or None when empty."""
    return _leading_exponent(terms, kind, block)


def add_terms(dict a, dict b, long long p):
    cdef dict r = dict(a)
    cdef tuple e
    cdef long long c, s
    for e, cobj in b.items():
        c = <long long> cobj
        s = ((<long long> r.get(e, 0)) + c) % p
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def sub_terms(dict a, dict b, long long p):
    cdef dict r = dict(a)
    cdef tuple e
    cdef long long c, s
    for e, cobj in b.items():
        c = <long long> cobj
        s = ((<long long> r.get(e, 0)) - c) % p
        if s < 0:
            s += p
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def neg_terms(dict a, long long p):
    cdef dict r = {}
    cdef tuple e
    for e, cobj in a.items():
        r[e] = p - (<long long> cobj)
    return r


def scale_terms(dict a, long long c, long long p):
    c %= p
    if c < 0:
        c += p
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    cdef dict r = {}
    cdef tuple e
    cdef long long w
    for e, vobj in a.items():
        w = (<long long> vobj) * c % p
        if w:
            r[e] = w
    return r


def term_mul(dict a, tuple d, long long c, long long p):
    """Multiply `a` by the single term c * x^d."""
    c %= p
    if c < 0:
        c += p
    if c == 0:
        return {}
    cdef dict r = {}
    cdef tuple e
    cdef long long w
    for e, vobj in a.items():
        w = (<long long> vobj) * c % p
        if w:
            r[_exp_add(e, d)] = w
    return r


def mul_terms(dict a, dict b, long long p):
    if len(a) > len(b):
        a, b = b, a
    cdef dict r = {}
    cdef tuple ea, eb, e
    cdef long long ca, cb, s
    for ea, caobj in a.items():
        ca = <long long> caobj
        for eb, cbobj in b.items():
            cb = <long long> cbobj
            e = _exp_add(ea, eb)
            s = ((<long long> r.get(e, 0)) + ca * cb) % p
            if s:
                r[e] = s
            elif e in r:
                del r[e]
    return r


def normal_form_terms(dict f, list lead_exps, list lead_invs, list tails,
                      long long p, int kind, int block):
    """Fully reduce `f` modulo a list of reducers (see _kernel_py)."""
    cdef dict h = dict(f)
    cdef dict r = {}
    cdef dict tail
    cdef Py_ssize_t m = len(lead_exps)
    cdef Py_ssize_t i, hit
    cdef tuple u, d, e, te
    cdef long long c, q, s, tc
    while h:
        u = _leading_exponent(h, kind, block)
        c = <long long> h.pop(u)
        hit = -1
        for i in range(m):
            if _exp_divides(<tuple> lead_exps[i], u):
                hit = i
                break
        if hit < 0:
            r[u] = c
            continue
        q = c * (<long long> lead_invs[hit]) % p
        d = exp_sub(u, <tuple> lead_exps[hit])
        tail = <dict> tails[hit]
        for te, tcobj in tail.items():
            tc = <long long> tcobj
            e = _exp_add(te, d)
            s = ((<long long> h.get(e, 0)) - q * tc) % p
            if s < 0:
                s += p
            if s:
                h[e] = s
            elif e in h:
                del h[e]
    return r
