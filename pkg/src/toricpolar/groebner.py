"""Buchberger engine with elimination, saturation, intersection and
Hilbert-series extraction of projective dimension and degree.

All operations are pure functions of their inputs; the only internal state
is a per-call memo table in the Hilbert-numerator recursion.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .field import PrimeField
from .poly import GREVLEX, MonomialOrder, Polynomial, block_order

# debug mode: re-verify the defining property of every computed basis
_DEBUG_CHECK_BASES = bool(os.environ.get("TORICPOLAR_DEBUG"))


@dataclass(frozen=True)
class Ideal:
    """Ideal given by generators; zero generators are dropped on creation.

    An empty generator tuple denotes the zero ideal.
    """

    field: PrimeField
    arity: int
    generators: tuple[Polynomial, ...]

    def __init__(self, generators: Sequence[Polynomial], field: PrimeField | None = None,
                 arity: int | None = None):
        gens = tuple(g for g in generators if not g.is_zero())
        if gens:
            field = gens[0].field
            arity = gens[0].arity
            for g in gens:
                if g.field != field or g.arity != arity:
                    raise ValueError("generators from different rings")
        elif field is None or arity is None:
            raise ValueError("zero ideal needs an explicit field and arity")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "generators", gens)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


class GroebnerBasis:
    """Reduced Gröbner basis: monic elements, no term of one divisible by
    the leading term of another."""

    __slots__ = ("field", "arity", "order", "elements",
                 "_lead_exps", "_lead_invs", "_tails")

    def __init__(self, field: PrimeField, arity: int, order: MonomialOrder,
                 elements: Sequence[Polynomial]):
        self.field = field
        self.arity = arity
        self.order = order
        self.elements = tuple(elements)
        self._lead_exps = []
        self._lead_invs = []
        self._tails = []
        for g in self.elements:
            e, c = g.leading_term(order)
            self._lead_exps.append(e)
            self._lead_invs.append(field.inv(c))
            tail = dict(g.terms)
            del tail[e]
            self._tails.append(tail)

    def leading_exponents(self) -> tuple[tuple, ...]:
        return tuple(self._lead_exps)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.field != self.field or f.arity != self.arity:
            raise ValueError("polynomial from a different ring")
        r = self.field.kernel.normal_form_terms(
            f.terms, self._lead_exps, self._lead_invs, self._tails,
            self.field.p, self.order.code, self.order.block)
        return Polynomial(self.field, self.arity, r, _clean=True)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def s_polynomials_reduce_to_zero(self) -> bool:
        """Debug check of the defining property."""
        k = self.field.kernel
        for i in range(len(self.elements)):
            for j in range(i + 1, len(self.elements)):
                s = _s_polynomial(self.elements[i], self.elements[j],
                                  k.exp_lcm(self._lead_exps[i], self._lead_exps[j]),
                                  self.order)
                if not self.normal_form(s).is_zero():
                    return False
        return True

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _s_polynomial(f: Polynomial, g: Polynomial, lcm_exp: tuple,
                  order: MonomialOrder) -> Polynomial:
    k = f.field.kernel
    p = f.field.p
    fe, fc = f.leading_term(order)
    ge, gc = g.leading_term(order)
    a = k.term_mul(f.terms, k.exp_sub(lcm_exp, fe), f.field.inv(fc), p)
    b = k.term_mul(g.terms, k.exp_sub(lcm_exp, ge), g.field.inv(gc), p)
    return Polynomial(f.field, f.arity, k.sub_terms(a, b, p), _clean=True)


def buchberger(I: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of I; deterministic given the generator order.

    Uses the normal selection strategy and the two classical pair
    criteria (coprime leading terms, chain criterion).
    """
    fld = I.field
    k = fld.kernel
    p = fld.p

    basis: list[Polynomial] = []
    lead: list[tuple] = []
    invs: list[int] = []
    tails: list[dict] = []
    pairs: dict[tuple[int, int], tuple] = {}

    def reduce_terms(terms: dict) -> dict:
        return k.normal_form_terms(terms, lead, invs, tails, p,
                                   order.code, order.block)

    def append(g: Polynomial):
        e, c = g.leading_term(order)
        if c != 1:
            g = g * fld.inv(c)
        j = len(basis)
        for i in range(j):
            pairs[(i, j)] = k.exp_lcm(lead[i], e)
        basis.append(g)
        lead.append(e)
        invs.append(1)
        tail = dict(g.terms)
        del tail[e]
        tails.append(tail)

    gens = sorted((g for g in I.generators),
                  key=lambda g: order.key(g.leading_term(order)[0]))
    for g in gens:
        r = reduce_terms(g.terms)
        if r:
            append(Polynomial(fld, I.arity, r, _clean=True))

    while pairs:
        (i, j) = min(pairs, key=lambda ij: (order.key(pairs[ij]), ij))
        lcm_exp = pairs.pop((i, j))
        if lcm_exp == k.exp_add(lead[i], lead[j]):
            continue  # coprime leading terms
        chain = False
        for m in range(len(basis)):
            if m in (i, j):
                continue
            if k.exp_divides(lead[m], lcm_exp):
                a = (i, m) if i < m else (m, i)
                b = (j, m) if j < m else (m, j)
                if a not in pairs and b not in pairs:
                    chain = True
                    break
        if chain:
            continue
        s = _s_polynomial(basis[i], basis[j], lcm_exp, order)
        r = reduce_terms(s.terms)
        if r:
            append(Polynomial(fld, I.arity, r, _clean=True))

    # minimalize: drop elements whose leading term another one divides
    # (two distinct basis elements never share a leading exponent here)
    minimal = [basis[i] for i in range(len(basis))
               if not any(j != i and k.exp_divides(lead[j], lead[i])
                          for j in range(len(basis)))]

    # interreduce tails until stable
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            others = minimal[:idx] + minimal[idx + 1:]
            if not others:
                continue
            gb = GroebnerBasis(fld, I.arity, order, others)
            r = gb.normal_form(minimal[idx])
            e, c = r.leading_term(order)
            if c != 1:
                r = r * fld.inv(c)
            if r != minimal[idx]:
                minimal[idx] = r
                changed = True

    minimal.sort(key=lambda g: order.key(g.leading_term(order)[0]))
    result = GroebnerBasis(fld, I.arity, order, minimal)
    if _DEBUG_CHECK_BASES:
        assert result.s_polynomials_reduce_to_zero()
    return result


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of f modulo G; no term divisible by a leading term of G."""
    return G.normal_form(f)


def _adjoin_variable_first(g: Polynomial) -> Polynomial:
    return g.extend_arity(g.arity + 1, 0)


def eliminate(I: Ideal, drop: Iterable[int]) -> Ideal:
    """Generators of the elimination ideal without the dropped variables.

    The returned ideal lives in the same ring; its generators do not
    involve the dropped variables and form a reduced Gröbner basis of the
    elimination ideal under the order induced on the kept variables.
    """
    drop = sorted(set(drop))
    m = I.arity
    if not drop:
        return I
    if any(not 0 <= v < m for v in drop) or len(drop) >= m:
        raise PreconditionError("dropped variables must be a proper subset")
    kept = [v for v in range(m) if v not in drop]
    perm = [0] * m  # old index -> new index
    for pos, v in enumerate(drop):
        perm[v] = pos
    for pos, v in enumerate(kept):
        perm[v] = len(drop) + pos
    permuted = [g.permute_variables(perm) for g in I.generators]
    G = buchberger(Ideal(permuted, field=I.field, arity=m), block_order(len(drop)))
    inv = [0] * m
    for old, new in enumerate(perm):
        inv[new] = old
    out = []
    for g in G.elements:
        if all(all(e[i] == 0 for i in range(len(drop))) for e in g.terms):
            out.append(g.permute_variables(inv))
    return Ideal(out, field=I.field, arity=m)


def saturate(I: Ideal, g: Polynomial) -> Ideal:
    """I : g^infinity, via an auxiliary variable t and the generator 1 - t*g."""
    if g.is_zero():
        raise PreconditionError("cannot saturate by the zero polynomial")
    if g.field != I.field or g.arity != I.arity:
        raise ValueError("polynomial from a different ring")
    m = I.arity
    lifted = [_adjoin_variable_first(h) for h in I.generators]
    t = Polynomial.variable(I.field, m + 1, 0)
    rab = Polynomial.constant(I.field, m + 1, 1) - t * _adjoin_variable_first(g)
    J = Ideal(lifted + [rab], field=I.field, arity=m + 1)
    E = eliminate(J, {0})
    return Ideal([h.drop_variable(0) for h in E.generators],
                 field=I.field, arity=m)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """Generators of the intersection, via t*I + (1-t)*J and elimination."""
    if I.field != J.field or I.arity != J.arity:
        raise ValueError("ideals from different rings")
    m = I.arity
    t = Polynomial.variable(I.field, m + 1, 0)
    one = Polynomial.constant(I.field, m + 1, 1)
    gens = [t * _adjoin_variable_first(h) for h in I.generators]
    gens += [(one - t) * _adjoin_variable_first(h) for h in J.generators]
    E = eliminate(Ideal(gens, field=I.field, arity=m + 1), {0})
    return Ideal([h.drop_variable(0) for h in E.generators],
                 field=I.field, arity=m)


# --------------------------------------------------------------------------
# Hilbert series of monomial quotients


def _minimalize_monomials(gens, divides):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for e in gens:
        if not any(divides(f, e) for f in out):
            out.append(e)
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)]


def _poly_shift(a, s):
    return [0] * s + list(a)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _hilbert_numerator(gens: list[tuple], divides, memo: dict) -> list[int]:
    """Numerator of the Hilbert series of S/monomial ideal over (1-t)^vars,
    by recursive splitting on a pivot variable."""
    gens = _minimalize_monomials(gens, divides)
    if not gens:
        return [1]
    if any(sum(e) == 0 for e in gens):
        return [0]
    key = frozenset(gens)
    hit = memo.get(key)
    if hit is not None:
        return hit
    # complete intersection base case: pairwise coprime generators
    coprime = True
    seen = set()
    for e in gens:
        sup = {i for i, x in enumerate(e) if x}
        if sup & seen:
            coprime = False
            break
        seen |= sup
    if coprime:
        out = [1]
        for e in gens:
            out = _poly_mul(out, _poly_add([1], _poly_shift([-1], sum(e))))
        memo[key] = out
        return out
    # pivot on the most frequent variable
    arity = len(gens[0])
    counts = [0] * arity
    for e in gens:
        for i, x in enumerate(e):
            if x:
                counts[i] += 1
    v = max(range(arity), key=lambda i: counts[i])
    unit = tuple(1 if i == v else 0 for i in range(arity))
    plus = [e for e in gens if e[v] == 0] + [unit]
    colon = [tuple(x - 1 if i == v and x else x for i, x in enumerate(e))
             for e in gens]
    n_plus = _hilbert_numerator(plus, divides, memo)
    n_colon = _hilbert_numerator(colon, divides, memo)
    out = _poly_add(n_plus, _poly_shift(n_colon, 1))
    memo[key] = out
    return out


def _divide_one_minus_t(n: list[int]) -> list[int] | None:
    """Quotient n / (1 - t) when exact, else None."""
    if len(n) == 1:
        return None if n[0] else [0]
    run = 0
    q = []
    for c in n[:-1]:
        run += c
        q.append(run)
    if run + n[-1] != 0:
        return None
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


@dataclass(frozen=True)
class HilbertData:
    """Projective dimension and degree read off the Hilbert series.

    `numerator` is the series numerator with all (1-t) factors removed, so
    numerator(1) is nonzero except for the empty scheme.  An empty scheme is
    encoded as projective_dimension -1 with undefined (None) degree.
    """

    numerator: tuple[int, ...]
    projective_dimension: int
    degree: int | None


def hilbert_dim_degree(I: Ideal) -> HilbertData:
    """Dimension and degree of Proj of the quotient by a homogeneous ideal."""
    if not I.is_homogeneous():
        raise PreconditionError("Hilbert data needs a homogeneous ideal")
    m = I.arity
    G = buchberger(I, GREVLEX)
    divides = I.field.kernel.exp_divides
    numerator = _hilbert_numerator(list(G.leading_exponents()), divides, {})
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    if numerator == [0]:
        return HilbertData((), -1, None)  # unit ideal
    s = 0
    while True:
        q = _divide_one_minus_t(numerator)
        if q is None:
            break
        numerator = q
        s += 1
    krull = m - s
    if krull <= 0:
        return HilbertData(tuple(numerator), -1, None)
    return HilbertData(tuple(numerator), krull - 1, sum(numerator))


def vector_space_dimension(I: Ideal) -> int:
    """Dimension of the quotient by a zero-dimensional affine ideal.

    Counts standard monomials; input with positive-dimensional quotient is
    rejected (criterion: some variable without a pure power among the
    leading terms).
    """
    G = buchberger(I, GREVLEX)
    lead = G.leading_exponents()
    if any(sum(e) == 0 for e in lead):
        return 0  # unit ideal
    m = I.arity
    bounds = [None] * m
    for e in lead:
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    if any(b is None for b in bounds):
        raise PreconditionError("ideal is not zero-dimensional")
    divides = I.field.kernel.exp_divides
    count = 0
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == m:
            if not any(divides(e, prefix) for e in lead):
                count += 1
            continue
        i = len(prefix)
        for x in range(bounds[i]):
            stack.append(prefix + (x,))
    return count
