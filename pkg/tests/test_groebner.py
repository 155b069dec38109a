import itertools
import random

import pytest

from toricpolar.errors import PreconditionError
from toricpolar.field import PrimeField
from toricpolar.groebner import (Ideal, buchberger, eliminate,
                                 hilbert_dim_degree, intersect, normal_form,
                                 saturate, vector_space_dimension)
from toricpolar.parse import parse_polynomial
from toricpolar.poly import LEX, Polynomial

from conftest import random_homogeneous

F = PrimeField()


def P(text, vars=("x0", "x1", "x2")):
    return parse_polynomial(text, vars, F)


def P2(text):
    return parse_polynomial(text, ("x0", "x1"), F)


def ideal_equal(I, J):
    """Compare ideals through their reduced Groebner bases."""
    return buchberger(I).elements == buchberger(J).elements


# --- buchberger ---------------------------------------------------------------

def test_already_reduced_basis():
    G = buchberger(Ideal([P("x0"), P("x1")]))
    assert [str(g) for g in G] == ["x1", "x0"]


def test_redundant_generator_removed():
    G = buchberger(Ideal([P("x0^2 - x1^2"), P("x0 - x1")]))
    assert [str(g) for g in G] == ["x0 - x1"]


def test_unit_ideal_detected():
    # 1 = x1*(x0*x1 - 1) - x1^2*x0 + ... : verified via the normal form
    I = Ideal([P2("x0*x1 - 1"), P2("x0^2")])
    G = buchberger(I)
    assert [str(g) for g in G] == ["1"]
    assert G.contains(Polynomial.constant(F, 2, 1))


def test_reduced_property_and_s_pairs():
    rng = random.Random(11)
    for _ in range(10):
        gens = [random_homogeneous(F, rng, 3, rng.randint(1, 3), max_terms=4)
                for _ in range(rng.randint(1, 3))]
        G = buchberger(Ideal(gens))
        assert G.s_polynomials_reduce_to_zero()
        # reduced: no term of one element divisible by another leading term
        leads = G.leading_exponents()
        for i, g in enumerate(G):
            for e in g.terms:
                assert not any(j != i and F.kernel.exp_divides(leads[j], e)
                               for j in range(len(leads)))
        # generators lie in the ideal
        for g in gens:
            assert G.contains(g)


def test_buchberger_deterministic():
    gens = [P("x0*x1 - x2^2"), P("x1^2 - x0*x2")]
    a = buchberger(Ideal(gens))
    b = buchberger(Ideal(gens))
    assert a.elements == b.elements


# --- normal form ----------------------------------------------------------------

def test_normal_form_examples():
    G = buchberger(Ideal([P("x0 - x1")]))
    assert normal_form(P("x0^2"), G) == P("x1^2")
    assert normal_form(P("1"), buchberger(Ideal([P("x0"), P("x1")]))) == P("1")
    member = P("(x0 - x1) * (x0 + 17*x2)")
    assert normal_form(member, G).is_zero()


def test_normal_form_idempotent_and_linear():
    rng = random.Random(7)
    G = buchberger(Ideal([P("x0*x1 - x2^2"), P("x1^3 - x0^2*x2")]))
    for _ in range(20):
        f = random_homogeneous(F, rng, 3, rng.randint(1, 4), max_terms=5)
        g = random_homogeneous(F, rng, 3, rng.randint(1, 4), max_terms=5)
        c = rng.randrange(F.p)
        nf = G.normal_form
        assert nf(nf(f)) == nf(f)
        assert nf(f + g) == nf(f) + nf(g)
        assert nf(f * c) == nf(f) * c
        assert nf(f - nf(f)).is_zero()


# --- eliminate -------------------------------------------------------------------

def T(text):
    return parse_polynomial(text, ("t", "x0", "x1"), F)


def test_eliminate_saturation_pattern():
    E = eliminate(Ideal([T("t*x0 - 1"), T("t*x1")]), {0})
    # x1 = -x1*(t*x0 - 1) + x0*(t*x1) lies in the ideal; membership both ways
    assert [g.to_text(("t", "x0", "x1")) for g in E.generators] == ["x1"]
    G = buchberger(Ideal([T("t*x0 - 1"), T("t*x1")]), LEX)
    assert G.contains(T("x1"))


def test_eliminate_parameter():
    E = eliminate(Ideal([T("x0 - t"), T("x1 - t")]), {0})
    assert [g.to_text(("t", "x0", "x1")) for g in E.generators] == ["x0 - x1"]


def test_eliminate_unused_variable_keeps_ideal():
    I = Ideal([T("x0^2 - x1"), T("x1^2")])
    E = eliminate(I, {0})
    assert ideal_equal(E, I)


def test_eliminate_rejects_everything():
    with pytest.raises(PreconditionError):
        eliminate(Ideal([P2("x0")]), {0, 1})


# --- saturate ---------------------------------------------------------------------

def test_saturate_strips_primary_component():
    S = saturate(Ideal([P("x0^2*x1")]), P("x0"))
    assert [str(g) for g in S.generators] == ["x1"]


def test_saturate_monomial_pair():
    S = saturate(Ideal([P("x0*x1"), P("x0*x2")]), P("x0"))
    assert sorted(str(g) for g in S.generators) == ["x1", "x2"]


def test_saturate_by_nonzerodivisor_fixes_ideal():
    S = saturate(Ideal([P("x1")]), P("x0"))
    assert [str(g) for g in S.generators] == ["x1"]


def test_saturate_idempotent_same_reduced_basis():
    I = Ideal([P("x0^2*x1 - x0*x2^2"), P("x0^3")])
    once = saturate(I, P("x0"))
    twice = saturate(once, P("x0"))
    assert once.generators == twice.generators


def test_saturation_is_homogeneous():
    S = saturate(Ideal([P("x0^2*x1"), P("x0*x2^2 - x0^2*x2")]), P("x0"))
    assert all(g.is_homogeneous() for g in S.generators)


# --- intersect ---------------------------------------------------------------------

def test_intersect_principal():
    X = intersect(Ideal([P("x0")]), Ideal([P("x1")]))
    assert [str(g) for g in X.generators] == ["x0*x1"]


def test_intersect_idempotent():
    I = Ideal([P("x0*x1 - x2^2"), P("x1^2")])
    assert ideal_equal(intersect(I, I), I)


def test_intersect_affine_points():
    I = Ideal([P2("x0"), P2("x1")])
    J = Ideal([P2("x0"), P2("x1 - 1")])
    X = intersect(I, J)
    expected = Ideal([P2("x0"), P2("x1^2 - x1")])
    # containment both ways via normal forms
    GX, GE = buchberger(X), buchberger(expected)
    assert all(GE.contains(g) for g in X.generators)
    assert all(GX.contains(g) for g in expected.generators)


# --- hilbert data ------------------------------------------------------------------

def test_hilbert_hyperplane():
    data = hilbert_dim_degree(Ideal([P("x0")]))
    assert (data.projective_dimension, data.degree) == (1, 1)


def test_hilbert_empty_scheme():
    data = hilbert_dim_degree(Ideal([P("x0"), P("x1"), P("x2")]))
    assert data.projective_dimension == -1 and data.degree is None


def test_hilbert_unit_ideal():
    data = hilbert_dim_degree(Ideal([P("7")]))
    assert data.projective_dimension == -1 and data.degree is None


def test_hilbert_line_with_embedded_structure():
    # oracle: count standard monomials of <x0^2, x0*x1> by degree; the count
    # is d + 2 for degree d >= 1, an affine Hilbert polynomial of a
    # dimension-1, degree-1 projective scheme
    lead = [(2, 0, 0), (1, 1, 0)]
    for d in range(1, 11):
        count = sum(1 for e in itertools.product(range(d + 1), repeat=3)
                    if sum(e) == d
                    and not any(all(e[i] >= le[i] for i in range(3))
                                for le in lead))
        assert count == d + 2
    data = hilbert_dim_degree(Ideal([P("x0^2"), P("x0*x1")]))
    assert (data.projective_dimension, data.degree) == (1, 1)


def test_hilbert_hypersurface_property():
    rng = random.Random(31)
    for arity in (2, 3, 4):
        f = random_homogeneous(F, rng, arity, rng.randint(1, 4), max_terms=4)
        data = hilbert_dim_degree(Ideal([f]))
        assert data.projective_dimension == arity - 2
        assert data.degree == f.homogeneous_degree()


def test_hilbert_rejects_inhomogeneous():
    with pytest.raises(PreconditionError):
        hilbert_dim_degree(Ideal([P("x0^2 + x1")]))


def test_hilbert_numerator_invariant():
    data = hilbert_dim_degree(Ideal([P("x0^2"), P("x0*x1")]))
    assert sum(data.numerator) == data.degree
    assert sum(data.numerator) != 0


# --- vector space dimension ---------------------------------------------------------

def _macaulay_dimension(gens, arity, cap):
    """Independent estimate of dim(R/I) via the rank of the multiplication
    matrix of all monomial multiples of the generators up to degree `cap`."""
    monomials = [e for e in itertools.product(range(cap + 1), repeat=arity)
                 if sum(e) <= cap]
    index = {e: i for i, e in enumerate(monomials)}
    rows = []
    for g in gens:
        gdeg = g.total_degree()
        for m in monomials:
            if sum(m) + gdeg > cap:
                continue
            row = [0] * len(monomials)
            for e, c in g.terms.items():
                shifted = tuple(a + b for a, b in zip(e, m))
                row[index[shifted]] = c
            rows.append(row)
    rank = 0
    p = F.p
    col = 0
    rows = [r[:] for r in rows]
    for col in range(len(monomials)):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] * inv % p
                rows[i] = [(a - factor * b) % p
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return len(monomials) - rank


def test_vsd_examples():
    assert vector_space_dimension(Ideal([P2("x0"), P2("x1")])) == 1
    assert vector_space_dimension(Ideal([P2("x0^2"), P2("x1^3")])) == 6
    # lex basis {x0^2 - x1, x1^2}: standard monomials 1, x0, x1, x0*x1
    assert vector_space_dimension(Ideal([P2("x0^2 - x1"), P2("x1^2")])) == 4


def test_vsd_unit_ideal():
    assert vector_space_dimension(Ideal([P2("x0"), P2("x0 - 1")])) == 0


def test_vsd_rejects_positive_dimension():
    with pytest.raises(PreconditionError):
        vector_space_dimension(Ideal([P2("x0*x1")]))


def test_vsd_against_macaulay_rank_oracle():
    rng = random.Random(13)
    for _ in range(12):
        arity = rng.randint(2, 3)
        vars_ = ("x0", "x1", "x2")[:arity]
        gens = []
        for i in range(arity):
            a = rng.randint(1, 2)
            lower = [Polynomial.constant(F, arity, rng.randrange(F.p))]
            for _ in range(2):
                e = tuple(rng.randint(0, 1) for _ in range(arity))
                if sum(e) < a + 1:
                    lower.append(Polynomial.monomial(F, arity, e,
                                                     rng.randrange(1, F.p)))
            g = Polynomial.variable(F, arity, i) ** (a + 1)
            for term in lower:
                g = g + term
            gens.append(g)
        I = Ideal(gens)
        dim = vector_space_dimension(I)
        assert dim <= 27
        cap = max(g.total_degree() for g in gens) + 6
        assert dim == _macaulay_dimension(gens, arity, cap)
