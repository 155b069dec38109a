"""Pure-Python term kernel: sparse polynomial arithmetic over F_p.

A polynomial is a dict mapping exponent tuples to nonzero coefficients in
{1, ..., p-1}; the zero polynomial is the empty dict.  All functions here
return fresh dicts and never mutate their arguments, except where noted.

This module is the fallback twin of the compiled kernel in _kernel_c.pyx;
both expose the same functions and must stay behaviourally identical (see
tests/test_kernel_parity.py).

Monomial-order codes (`kind`):
  0  graded reverse lexicographic
  1  lexicographic
  2  block elimination: grevlex on the first `block` variables, ties broken
     by grevlex on the rest
"""

GREVLEX = 0
LEX = 1
BLOCK = 2


def _grevlex_cmp_range(e1, e2, lo, hi):
    d1 = 0
    d2 = 0
    for i in range(lo, hi):
        d1 += e1[i]
        d2 += e2[i]
    if d1 != d2:
        return 1 if d1 > d2 else -1
    for i in range(hi - 1, lo - 1, -1):
        a = e1[i]
        b = e2[i]
        if a != b:
            return 1 if a < b else -1
    return 0


def exp_cmp(e1, e2, kind, block):
    """Three-way comparison of exponent tuples: -1, 0 or 1."""
    n = len(e1)
    if kind == GREVLEX:
        return _grevlex_cmp_range(e1, e2, 0, n)
    if kind == LEX:
        for i in range(n):
            a = e1[i]
            b = e2[i]
            if a != b:
                return 1 if a > b else -1
        return 0
    c = _grevlex_cmp_range(e1, e2, 0, block)
    if c:
        return c
    return _grevlex_cmp_range(e1, e2, block, n)


def exp_add(e, d):
    return tuple(a + b for a, b in zip(e, d))


def exp_sub(e, d):
    return tuple(a - b for a, b in zip(e, d))


def exp_lcm(e1, e2):
    return tuple(a if a > b else b for a, b in zip(e1, e2))


def exp_divides(d, e):
    """True when the monomial x^d divides x^e."""
    for a, b in zip(d, e):
        if a > b:
            return False
    return True


def leading_exponent(terms, kind, block):
    """Largest exponent of `terms` in the order, or None when empty."""
    best = None
    for e in terms:
        if best is None or exp_cmp(e, best, kind, block) > 0:
            best = e
    return best


def add_terms(a, b, p):
    r = dict(a)
    for e, c in b.items():
        s = (r.get(e, 0) + c) % p
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def sub_terms(a, b, p):
    r = dict(a)
    for e, c in b.items():
        s = (r.get(e, 0) - c) % p
        if s:
            r[e] = s
        elif e in r:
            del r[e]
    return r


def neg_terms(a, p):
    return {e: p - c for e, c in a.items()}


def scale_terms(a, c, p):
    c %= p
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    r = {}
    for e, v in a.items():
        w = v * c % p
        if w:
            r[e] = w
    return r


def term_mul(a, d, c, p):
    """Multiply `a` by the single term c * x^d."""
    c %= p
    if c == 0:
        return {}
    r = {}
    for e, v in a.items():
        w = v * c % p
        if w:
            r[exp_add(e, d)] = w
    return r


def mul_terms(a, b, p):
    if len(a) > len(b):
        a, b = b, a
    r = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = exp_add(ea, eb)
            s = (r.get(e, 0) + ca * cb) % p
            if s:
                r[e] = s
            elif e in r:
                del r[e]
    return r


def normal_form_terms(f, lead_exps, lead_invs, tails, p, kind, block):
    """Fully reduce `f` modulo a list of reducers.

    Reducer i has leading exponent lead_exps[i], inverse leading coefficient
    lead_invs[i] and tail terms tails[i] (the reducer minus its leading
    term).  Returns the remainder, none of whose terms is divisible by any
    lead_exps[i].
    """
    h = dict(f)
    r = {}
    m = len(lead_exps)
    while h:
        u = leading_exponent(h, kind, block)
        c = h.pop(u)
        hit = -1
        for i in range(m):
            if exp_divides(lead_exps[i], u):
                hit = i
                break
        if hit < 0:
            r[u] = c
            continue
        q = c * lead_invs[hit] % p
        d = exp_sub(u, lead_exps[hit])
        for te, tc in tails[hit].items():
            e = exp_add(te, d)
            s = (h.get(e, 0) - q * tc) % p
            if s:
                h[e] = s
            elif e in h:
                del h[e]
    return r
