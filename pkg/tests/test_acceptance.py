"""Acceptance suite: one test per criterion, exact integer comparisons.

Each test prints a single pass/fail line (run pytest with -s or -rA to see
them).  Runtime limits are asserted where stated.
"""

import random
import time
from math import comb

from toricpolar.classes import (check_union_general_section,
                                csm_complement_of_hypersurface,
                                csm_standard_complement, gradient_from_toric,
                                toric_from_gradient)
from toricpolar.constructions import (birational_family, cremona_poly,
                                      default_corpus, dolgachev_quadric,
                                      monomial_sum_polynomial,
                                      random_monomial_matrix)
from toricpolar.curves import (plane_degree_formula,
                               reducible_composition_check)
from toricpolar.field import PrimeField
from toricpolar.gcdtools import multivariate_gcd, squarefree_part
from toricpolar.groebner import Ideal, buchberger
from toricpolar.maps import (RandomizationConfig, gradient_map,
                             monomial_pullback, multidegrees,
                             random_translate, topological_degree,
                             toric_polar_map)
from toricpolar.parse import parse_polynomial
from toricpolar.poly import euler_identity_check

from conftest import random_homogeneous

F = PrimeField()
CFG = RandomizationConfig(seed=2026)


def P(text, vars=("x0", "x1", "x2")):
    return parse_polynomial(text, vars, F)


CUSP_TEXT = "4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2"


def report(number: int, ok: bool, message: str):
    print(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {message}")
    assert ok, f"criterion {number}: {message}"


def test_criterion_01_cuspidal_cubic():
    start = time.perf_counter()
    cusp = P(CUSP_TEXT)
    md = multidegrees(toric_polar_map(cusp), CFG)
    rep = plane_degree_formula(cusp)
    elapsed = time.perf_counter() - start
    ok = (md.values == (1, 3, 2)
          and (rep.milnor_sum, rep.incidence, rep.tangency) == (2, 2, 3)
          and rep.degree_formula == md.topological_degree == 2
          and elapsed < 1.0)
    report(1, ok, f"cuspidal cubic: multidegrees {md.values}, report "
                  f"({rep.milnor_sum},{rep.incidence},{rep.tangency}), "
                  f"both degrees 2, {elapsed:.2f}s")


def test_criterion_02_quadro_quadric_quadrics():
    times = {}
    ok = True
    for n in (2, 3, 4):
        start = time.perf_counter()
        md = multidegrees(toric_polar_map(dolgachev_quadric(n, F)), CFG)
        times[n] = time.perf_counter() - start
        ok = ok and md.values == (1,) + (2,) * (n - 1) + (1,) and times[n] < 5.0
    report(2, ok, "quadrics q_n multidegrees (1,2,...,2,1) for n=2,3,4, "
                  + ", ".join(f"n={n}: {t:.2f}s" for n, t in times.items()))


def test_criterion_03_standard_cremona():
    times = {}
    ok = True
    for n in (2, 3):
        start = time.perf_counter()
        md = multidegrees(toric_polar_map(cremona_poly(n, F)), CFG)
        times[n] = time.perf_counter() - start
        ok = ok and md.values == tuple(comb(n, j) for j in range(n + 1))
    ok = ok and times[3] < 10.0
    report(3, ok, "cremona f_n multidegrees are binomial rows for n=2,3, "
                  + ", ".join(f"n={n}: {t:.2f}s" for n, t in times.items()))


def test_criterion_04_nondominant_conic():
    md = multidegrees(toric_polar_map(P("x0^2 - x1*x2")), CFG)
    ok = md.values == (1, 2, 0) and md.topological_degree == 0
    report(4, ok, f"conic x0^2 - x1*x2: multidegrees {md.values}, degree 0")


def test_criterion_05_reducedness():
    ok = True
    for text in (CUSP_TEXT, "x1^2 + x0*x1 + x0*x2"):
        f = P(text)
        base = multidegrees(toric_polar_map(f), CFG).values
        squared = multidegrees(toric_polar_map(f * f), CFG).values
        ok = ok and base == squared
    report(5, ok, "multidegrees of T_(f^2) match T_f for the cuspidal cubic "
                  "and the quadro-quadric quadric")


def test_criterion_06_birational_families():
    ok = True
    details = []
    for n in (2, 3):
        for which, ks in (("a", [None]), ("b", [2, 3]), ("c", [None])):
            for k in ks:
                f = birational_family(which, n, k, F)
                deg = topological_degree(toric_polar_map(f), CFG)
                details.append(f"({which},n={n}{',k=%d' % k if k else ''})={deg}")
                ok = ok and deg == 1
    report(6, ok, "birational families: " + " ".join(details))


def test_criterion_07_monomial_invariance():
    rng = random.Random(7)
    cusp = P(CUSP_TEXT)
    ok = True
    for _ in range(5):
        A = random_monomial_matrix(2, rng.choice((1, 2, 3)), rng)
        pulled = monomial_pullback(cusp, A)
        deg = topological_degree(toric_polar_map(pulled), CFG)
        deg_sum = topological_degree(toric_polar_map(
            monomial_sum_polynomial(A, F)), CFG)
        ok = ok and deg == 2 and deg_sum == 1
    report(7, ok, "5 random invertible monomial matrices preserve deg T_f = 2 "
                  "and give deg T_(g_A) = 1")


def test_criterion_08_general_position():
    ok = True
    details = []
    for tag, (text, milnor) in enumerate(
            (("x0^2 + x1^2 + x2^2", 0), ("x1^2*x2 - x0^3 - x0^2*x2", 1))):
        f = random_translate(P(text), 31 + tag)
        k = f.homogeneous_degree()
        d = multidegrees(toric_polar_map(f), CFG)
        g = multidegrees(gradient_map(f), CFG)
        expected = k ** 2 - milnor
        ok = (ok and d.topological_degree == expected
              and d.values == toric_from_gradient(g)
              and check_union_general_section(
                  csm_complement_of_hypersurface(g),
                  csm_standard_complement(d)))
        details.append(f"k={k}: degree {d.topological_degree}=={expected}")
    report(8, ok, "general translates: " + ", ".join(details)
                  + "; binomial transform and hyperplane-twist identity hold")


def test_criterion_09_reducible_curves():
    rng = random.Random(9)
    entries = {e.name: e.polynomial(F) for e in default_corpus()
               if len(e.variables) == 3}
    names = [n for n, f in entries.items() if f.homogeneous_degree() <= 3]
    pairs = set()
    checked = 0
    ok = True
    while checked < 10:
        a, b = rng.sample(names, 2)
        key = tuple(sorted((a, b)))
        if key in pairs:
            continue
        pairs.add(key)
        if not multivariate_gcd(entries[a], entries[b]).is_constant():
            continue
        ok = ok and reducible_composition_check(entries[a], entries[b], CFG)
        checked += 1
    report(9, ok, f"product rule deg T_(fg) = deg T_f + deg T_g + #crossings "
                  f"holds for {checked} random coprime corpus pairs")


def test_criterion_10_arrangements():
    line1 = P("x0 + 2*x1 + 3*x2")
    line2 = P("x0 + 5*x1 + 7*x2")
    ok = True
    degs = []
    for f, m in ((line1, 4), (line1 * line2, 5)):
        # chi of the complement of m generic lines by inclusion-exclusion
        chi = 3 - 2 * m + comb(m, 2)
        deg = topological_degree(toric_polar_map(f), CFG)
        degs.append(deg)
        ok = ok and deg == chi
    ok = ok and degs == [1, 3]
    report(10, ok, f"arrangements of 4 and 5 generic lines: degrees {degs} "
                   "match the signed Euler characteristics 1 and 3")


def test_criterion_11_property_suites():
    rng = random.Random(11)
    failures = []

    # Groebner: every S-polynomial of a computed basis reduces to zero
    for i in range(100):
        gens = [random_homogeneous(F, rng, 3, rng.randint(1, 3), max_terms=3)
                for _ in range(rng.randint(1, 3))]
        G = buchberger(Ideal(gens))
        if not G.s_polynomials_reduce_to_zero():
            failures.append(f"groebner case {i}")

    # binomial transform round trip
    for i in range(100):
        v = tuple(rng.randint(-99, 99) for _ in range(rng.randint(1, 8)))
        if gradient_from_toric(toric_from_gradient(v)) != v:
            failures.append(f"transform case {i}")

    # Euler identity on random homogeneous polynomials
    for i in range(100):
        f = random_homogeneous(F, rng, rng.randint(1, 5), rng.randint(0, 6))
        if not euler_identity_check(f):
            failures.append(f"euler case {i}")

    # squarefree idempotence on powers
    for i in range(100):
        f = random_homogeneous(F, rng, rng.randint(2, 3), rng.randint(1, 2),
                               max_terms=3)
        m = rng.randint(1, 4)
        if squarefree_part(f ** m) != squarefree_part(f):
            failures.append(f"squarefree case {i}")

    report(11, not failures,
           "property suites (100 cases each): S-pair reduction, transform "
           "round trip, Euler identity, squarefree idempotence"
           + (f"; failures: {failures[:3]}" if failures else ""))
