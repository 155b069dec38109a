"""Multivariate gcd, squarefree parts and distinct-root counts over F_p.

The gcd uses content/primitive-part recursion with a pseudo-remainder
sequence in a chosen main variable; squarefree parts divide by the gcd with
one generic directional derivative, which is valid in characteristic larger
than the degree.
"""

from __future__ import annotations

import random

from .errors import PreconditionError, SpecializationError
from .poly import GREVLEX, Polynomial

_MAX_DIRECTION_TRIES = 8


def _coefficients_in(f: Polynomial, v: int) -> dict[int, Polynomial]:
    """View f as univariate in x_v: degree -> coefficient polynomial."""
    rows: dict[int, dict] = {}
    for e, c in f.terms.items():
        d = e[:v] + (0,) + e[v + 1:]
        rows.setdefault(e[v], {})[d] = c
    return {k: Polynomial(f.field, f.arity, t, _clean=True)
            for k, t in rows.items()}


def _from_coefficients(coeffs: dict[int, Polynomial], v: int, field, arity):
    out = {}
    for k, g in coeffs.items():
        for e, c in g.terms.items():
            out[e[:v] + (k,) + e[v + 1:]] = c
    return Polynomial(field, arity, out, _clean=True)


def _univariate_gcd(f: Polynomial, g: Polynomial, v: int) -> Polynomial:
    """Monic Euclidean gcd of two polynomials involving only x_v."""
    field = f.field

    def as_coeffs(h):
        c = [0] * (h.degree_in(v) + 1)
        for e, coeff in h.terms.items():
            c[e[v]] = coeff
        return c

    p = field.p

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def poly_mod(a, b):
        inv = field.inv(b[-1])
        a = a[:]
        while len(a) >= len(b):
            if a[-1]:
                q = a[-1] * inv % p
                shift = len(a) - len(b)
                for i, bc in enumerate(b):
                    a[i + shift] = (a[i + shift] - q * bc) % p
            a.pop()
        return strip(a)

    a, b = strip(as_coeffs(f)), strip(as_coeffs(g))
    while b:
        a, b = b, poly_mod(a, b)
    lead_inv = field.inv(a[-1])
    out = {}
    for k, c in enumerate(a):
        if c:
            e = [0] * f.arity
            e[v] = k
            out[tuple(e)] = c * lead_inv % p
    return Polynomial(field, f.arity, out, _clean=True)


def _content_and_primitive(f: Polynomial, v: int):
    coeffs = _coefficients_in(f, v)
    content = None
    for g in coeffs.values():
        content = g if content is None else multivariate_gcd(content, g)
        if content.is_constant():
            break
    if content.is_constant():
        return Polynomial.constant(f.field, f.arity, 1), f
    primitive = f.exact_divide(content)
    assert primitive is not None
    return content, primitive


def _pseudo_remainder(a: Polynomial, b: Polynomial, v: int) -> Polynomial:
    """Pseudo-remainder of a by b in the variable x_v."""
    db = b.degree_in(v)
    lb = _coefficients_in(b, v)[db]
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lr = _coefficients_in(r, v)[dr]
        shift = Polynomial.monomial(r.field, r.arity,
                                    tuple(dr - db if i == v else 0
                                          for i in range(r.arity)))
        r = r * lb - b * (lr * shift)
    return r


def multivariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor; not both inputs may be zero."""
    if f.field != g.field or f.arity != g.arity:
        raise ValueError("polynomials from different rings")
    if f.is_zero() and g.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.scaled_to_monic(GREVLEX)
    if g.is_zero():
        return f.scaled_to_monic(GREVLEX)
    used = sorted(set(f.variables_used()) | set(g.variables_used()))
    if not used:
        return Polynomial.constant(f.field, f.arity, 1)
    if len(used) == 1:
        return _univariate_gcd(f, g, used[0])
    v = used[-1]
    if f.degree_in(v) == 0 or g.degree_in(v) == 0:
        # one input does not involve the main variable: gcd divides contents
        other = f if f.degree_in(v) == 0 else g
        rest = g if f.degree_in(v) == 0 else f
        content, _ = _content_and_primitive(rest, v)
        return multivariate_gcd(other, content)
    cf, pf = _content_and_primitive(f, v)
    cg, pg = _content_and_primitive(g, v)
    c = multivariate_gcd(cf, cg)
    a, b = pf, pg
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_remainder(a, b, v)
        if r.is_zero():
            a, b = b, r
            break
        _, r = _content_and_primitive(r, v)
        a, b = b, r
    _, a = _content_and_primitive(a, v)
    return (c * a).scaled_to_monic(GREVLEX)


def _random_direction(f: Polynomial, rng: random.Random):
    return [rng.randrange(f.field.p) for _ in range(f.arity)]


def _is_squarefree(f: Polynomial, rng: random.Random) -> bool:
    for _ in range(_MAX_DIRECTION_TRIES):
        df = f.directional_derivative(_random_direction(f, rng))
        if not df.is_zero():
            return multivariate_gcd(f, df).is_constant()
    raise SpecializationError("no usable direction for squarefree test")


def squarefree_part(f: Polynomial, seed: int = 0) -> Polynomial:
    """Monic product of the distinct irreducible factors of f.

    Computes f / gcd(f, directional derivative) for a random direction and
    verifies the result by recomputation with an independent direction;
    requires homogeneous nonzero input and characteristic above deg f.
    """
    if f.is_zero():
        raise PreconditionError("squarefree part of the zero polynomial")
    if not f.is_homogeneous():
        raise PreconditionError("squarefree part needs homogeneous input")
    if f.field.p <= f.total_degree():
        raise PreconditionError("prime must exceed the degree")
    if f.is_constant():
        return Polynomial.constant(f.field, f.arity, 1)
    rng = random.Random(seed ^ 0x5FA11E)

    def one_pass():
        for _ in range(_MAX_DIRECTION_TRIES):
            df = f.directional_derivative(_random_direction(f, rng))
            if df.is_zero():
                continue
            g = multivariate_gcd(f, df)
            cand = f.exact_divide(g)
            if cand is not None:
                return cand.scaled_to_monic(GREVLEX)
        raise SpecializationError("no generic direction found", (seed,))

    first = one_pass()
    second = one_pass()
    if first == second and _is_squarefree(first, rng):
        return first
    # one retry with fresh randomness before giving up
    third = one_pass()
    if third == second and _is_squarefree(third, rng):
        return third
    raise SpecializationError("squarefree part not reproducible", (seed,))


def binary_form_distinct_roots(f: Polynomial, kept: tuple[int, int]) -> int:
    """Number of distinct roots in P^1 of a binary form in the kept variables."""
    if f.is_zero():
        raise PreconditionError("zero binary form")
    a, b = kept
    for e in f.terms:
        for i, x in enumerate(e):
            if x and i not in (a, b):
                raise PreconditionError("form involves a non-kept variable")
    return squarefree_part(f).total_degree()
