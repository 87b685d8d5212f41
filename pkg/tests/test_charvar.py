import random
from fractions import Fraction
from itertools import permutations
from pathlib import Path

import pytest

from sl2trace.charvar import (
    AffinePoint3,
    EPOLY_TABLE,
    dimension,
    discriminant_f3,
    eliminate_tcd_at_point,
    epoly,
    epoly_consistency,
    f3_equation,
    generator_counts,
    genus2_relations,
    hessian_classify,
    jacobian_rank,
    projective_checks,
    reducible_locus_f3,
    singular_points,
    torus_fiber,
    transcendental_basis,
)
from sl2trace.charvar.epoly import consistency_checks
from sl2trace.charvar.free import S_VAR, DegenerateEliminationError, tcd_relation
from sl2trace.charvar.torus import XV, YV, ZV, affine_singular_scan, gradient, is_singular
from sl2trace.engine import kappa, trace_assignment, triple_relation
from sl2trace.poly import EPoly, T, trace_var
from sl2trace.sl2 import SL2Mat, classify_conjugacy, enumerate_sl2, random_sl2, random_sl2_rational, sample_genus2_tuple

GOLDEN = Path(__file__).parent / "golden"
P = 10007


def golden(name):
    return (GOLDEN / f"{name}.txt").read_text().strip()


def all_two(poly):
    return poly.evaluate({v: 2 for v in poly.variables()})


def diag(lam, p):
    return SL2Mat(lam, 0, 0, pow(lam, -1, p), p)


# ---------------------------------------------------------------- F_3 hypersurface

def test_f3_golden_and_structure():
    F = f3_equation()
    assert str(F) == golden("f3_equation")
    X, Y = triple_relation(1, 2, 3)
    assert F == T(1, 2, 3) ** 2 - X * T(1, 2, 3) - Y
    assert all_two(F) == 0
    assert len(F.variables()) == 7


def test_f3_on_random_triples():
    rng = random.Random(5)
    F = f3_equation()
    for _ in range(300):
        mats = [random_sl2(P, rng) for _ in range(3)]
        assert F.evaluate(trace_assignment(mats, P), P) == 0
    for _ in range(100):
        mats = [random_sl2_rational(rng) for _ in range(3)]
        assert F.evaluate(trace_assignment(mats)) == 0


def test_f3_on_sampled_f3_triples():
    rng = random.Random(6)
    G = enumerate_sl2(3)
    F = f3_equation()
    for _ in range(10_000):
        mats = [rng.choice(G) for _ in range(3)]
        assert F.evaluate(trace_assignment(mats, 3), 3) == 0


def test_discriminant():
    D = discriminant_f3()
    assert str(D) == golden("discriminant_f3")
    assert D.degree() == 6
    assert all_two(D) == 0
    X, Y = triple_relation(1, 2, 3)
    rng = random.Random(7)
    nonzero = 0
    for _ in range(50):
        vals = trace_assignment([random_sl2(P, rng) for _ in range(3)], P)
        Pv = vals[trace_var(1, 2, 3)]
        d = D.evaluate(vals, P)
        assert d == (2 * Pv - X.evaluate(vals, P)) ** 2 % P
        nonzero += d != 0
    assert nonzero > 40


def test_reducible_locus():
    eqs = reducible_locus_f3()
    assert len(eqs) == 4
    assert all(all_two(e) == 0 for e in eqs)
    rng = random.Random(8)
    for p in (7, 11, 10007):
        for _ in range(30):
            mats = [diag(rng.randrange(1, p), p) for _ in range(3)]
            vals = trace_assignment(mats, p)
            assert all(e.evaluate(vals, p) == 0 for e in eqs)
    k = kappa(T(1), T(2), T(1, 2)) - 2
    assert k.evaluate({trace_var(1): 2, trace_var(2): 2, trace_var(1, 2): -2}) == 16


# ---------------------------------------------------------------- torus fibers

def test_torus_fiber_points_and_symmetry():
    at = lambda P, pt: P.evaluate(dict(zip((XV, YV, ZV), pt)))
    assert at(torus_fiber(2), (2, 2, 2)) == 0
    assert at(torus_fiber(-2), (0, 0, 0)) == 0
    F = torus_fiber(Fraction(1, 3))
    for perm in permutations((XV, YV, ZV)):
        assert F.subs(dict(zip((XV, YV, ZV), (T(*v.gens) for v in perm)))) == F


def test_singular_points():
    assert singular_points(2) == {(2, 2, 2), (2, -2, -2), (-2, 2, -2), (-2, -2, 2)}
    assert singular_points(-2) == {(0, 0, 0)}
    for t in (0, 1, -1, 3, Fraction(1, 2), Fraction(-7, 4), 7):
        assert singular_points(t) == set()
    for t in (2, -2):
        for pt in singular_points(t):
            assert is_singular(pt, t)


def test_hessian():
    for pt in singular_points(2):
        rep = hessian_classify(pt, 2)
        assert rep.hessian_det == -32 and rep.kind == "ODP"
    rep = hessian_classify((0, 0, 0), -2)
    assert rep.hessian_det == 8 and rep.kind == "ODP"
    assert rep.point == AffinePoint3(0, 0, 0)
    with pytest.raises(ValueError):
        hessian_classify((1, 1, 1), 2)


@pytest.mark.parametrize("p", [7, 11, 13])
def test_no_extra_singular_points_mod_p(p):
    for t in range(p):
        found = set(affine_singular_scan(t, p))
        want = set()
        for tq in (2, -2):
            if (tq - t) % p == 0:
                want |= {tuple(x % p for x in pt) for pt in singular_points(tq)}
        assert found == want


@pytest.mark.parametrize("t,p,inf,sing", [
    (0, 11, 33, []),
    (2, 7, 21, [[2, 2, 2], [2, 5, 5], [5, 2, 5], [5, 5, 2]]),
    (-2, 5, 15, [[0, 0, 0]]),
])
def test_projective(t, p, inf, sing):
    rep = projective_checks(t, p)
    assert rep.passed
    assert rep.infinity_count == inf
    assert sorted(list(x) for x in rep.affine_singular) == sing


def test_projective_bad_prime():
    with pytest.raises(ValueError):
        projective_checks(0, 9)
    with pytest.raises(ValueError):
        projective_checks(0, 2)


def test_gradient():
    gx, gy, gz = gradient()
    assert gx == 2 * T(1) - T(2) * T(1, 2)
    assert gy == 2 * T(2) - T(1) * T(1, 2)
    assert gz == 2 * T(1, 2) - T(1) * T(2)


# ---------------------------------------------------------------- free groups

def test_dimension_and_counts():
    assert (dimension(2), dimension(3), dimension(1, 4)) == (3, 6, 3)
    assert generator_counts(2) == (3, 3)
    assert generator_counts(3) == (7, 7)
    assert generator_counts(4) == (15, 14)
    for k in range(2, 7):
        assert len(transcendental_basis(k)) == dimension(k, 2)
    assert [str(v) for v in transcendental_basis(4)] == [
        "t[1]", "t[2]", "t[1,2]", "t[3]", "t[1,3]", "t[2,3]", "t[4]", "t[1,4]", "t[2,4]"]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_jacobian_rank(k):
    assert jacobian_rank(k, P, seed=1, samples=5) == 3 * (k - 1)


def test_jacobian_rank_bad_prime():
    with pytest.raises(ValueError):
        jacobian_rank(2, 10)


def test_eliminate_tcd_random_fp():
    rng = random.Random(9)
    basis = transcendental_basis(4)
    for _ in range(5):
        mats = [random_sl2(P, rng) for _ in range(4)]
        vals = trace_assignment(mats, P, 4)
        E = eliminate_tcd_at_point([vals[v] for v in basis], P)
        assert E.variables() == {S_VAR}
        assert E.evaluate({S_VAR: vals[trace_var(3, 4)]}, P) == 0


def test_eliminate_tcd_rational():
    rng = random.Random(10)
    mats = [random_sl2_rational(rng, height=2, steps=2) for _ in range(4)]
    vals = trace_assignment(mats, None, 4)
    E = eliminate_tcd_at_point({v: vals[v] for v in transcendental_basis(4)})
    assert E.evaluate({S_VAR: vals[trace_var(3, 4)]}) == 0


def test_tcd_relation_holds_on_matrices():
    R = tcd_relation()
    rng = random.Random(12)
    for _ in range(20):
        vals = trace_assignment([random_sl2(P, rng) for _ in range(4)], P, 4)
        assert R.evaluate(vals, P) == 0


def test_eliminate_tcd_degenerate_at_identity():
    # over the identity traces the fiber is positive-dimensional, so no nonzero eliminant exists
    with pytest.raises(DegenerateEliminationError):
        eliminate_tcd_at_point([2] * 9)


def test_identity_traces_do_not_determine_tcd():
    p = 10007
    I = SL2Mat(1, 0, 0, 1, p)
    C = SL2Mat(1, 1, 0, 1, p)
    basis = transcendental_basis(4)
    seen = set()
    for x in range(5):
        D = SL2Mat(1, 0, x, 1, p)
        vals = trace_assignment([I, I, C, D], p, 4)
        assert [vals[v] for v in basis] == [2] * 9
        seen.add(vals[trace_var(3, 4)])
    assert seen == {2, 3, 4, 5, 6}


def test_eliminate_tcd_degenerate_on_commuting_diagonals():
    rng = random.Random(13)
    p = 10007
    mats = [diag(rng.randrange(2, p - 1), p) for _ in range(4)]
    vals = trace_assignment(mats, p, 4)
    with pytest.raises(DegenerateEliminationError):
        eliminate_tcd_at_point([vals[v] for v in transcendental_basis(4)], p)


def test_eliminate_tcd_input_checks():
    with pytest.raises(ValueError):
        eliminate_tcd_at_point([1] * 8, P)
    with pytest.raises(ValueError):
        eliminate_tcd_at_point([1] * 9, 9)


# ---------------------------------------------------------------- genus 2

def test_genus2_golden():
    rels = genus2_relations()
    assert "\n".join(map(str, rels)) == golden("genus2_relations")
    assert all(all_two(R) == 0 for R in rels)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_genus2_relations_on_samples(p):
    rng = random.Random(p)
    rels = genus2_relations()
    for _ in range(50):
        vals = trace_assignment(sample_genus2_tuple(p, rng), p, 4)
        assert all(R.evaluate(vals, p) == 0 for R in rels)


def test_r1_generic():
    rng = random.Random(14)
    R1 = genus2_relations()[0]
    hits = sum(R1.evaluate(trace_assignment([random_sl2(P, rng) for _ in range(4)], P, 4), P) != 0
               for _ in range(50))
    assert hits >= 48


# ---------------------------------------------------------------- E-polynomials

def test_epoly_table():
    q = EPoly.q()
    assert epoly("M_J-") == q * q + 3 * q
    assert epoly("X_-2") == q * q + 3 * q + 1
    assert epoly("V_inf") == 3 * q
    assert len(EPOLY_TABLE) == 10
    with pytest.raises(ValueError):
        epoly("nope")


def test_epoly_by_class():
    q = EPoly.q()
    p = 7
    assert epoly(classify_conjugacy(SL2Mat(1, 0, 0, 1, p))) == q * q + 1
    assert epoly(classify_conjugacy(SL2Mat(-1, 1, 0, -1, p))) == q * q + 3 * q
    assert epoly(classify_conjugacy(diag(3, p))) == q * q + 4 * q + 1


def test_epoly_consistency():
    assert epoly_consistency()
    assert all(consistency_checks().values())
    q = EPoly.q()
    assert 1 + (q * q + 3 * q) == q * q + 3 * q + 1
    assert (q * q + 7 * q + 1) - 3 * q == q * q + 4 * q + 1
