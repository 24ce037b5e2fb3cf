"""Exact linear algebra over Gaussian rationals: cluster monomials, bases,
rotation equivariance, and the spanning conjecture audit."""

import random
from fractions import Fraction

import pytest

from sievelab.clusterlab import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussRat,
    VarSubstitution,
    XPoly,
    character_check_A,
    character_check_D,
    check_basis_A,
    check_basis_C,
    check_conjecture_D,
    cluster_monomial,
    d_degree,
    dependency_witness,
    equivariance_discrepancy,
    expected_dim_D,
    j_generator,
    j_member,
    j_reduce,
    lemma_basis_multidissections,
    minor,
    rank,
    rotation_substitution,
    row_degrees,
    var_index,
    verify_equivariance,
    z_A,
    z_C,
    z_D,
)
from sievelab.polygons import (
    DOTTED,
    SOLID,
    AEdge,
    CDiameter,
    CIntegrated,
    CSegregated,
    DDiameter,
    DPairInt,
    DPairSeg,
    Multidissection,
    enumerate_multidissections,
)
from sievelab.qseries import IntLaurentPoly
from sievelab.symfunc import ones_point, principal_point, schur_eval
from sievelab.tableaux import enumerate_ssyt


# --- Gaussian rationals -------------------------------------------------------

def test_gaussrat_field_ops_match_complex_floats():
    rng = random.Random(5)
    for _ in range(60):
        a = GaussRat(Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)),
                     Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)))
        b = GaussRat(Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)),
                     Fraction(rng.randrange(-9, 10), rng.randrange(1, 7)))
        ca = complex(a.re) + 1j * complex(a.im)
        cb = complex(b.re) + 1j * complex(b.im)
        assert abs(complex((a + b).re) + 1j * complex((a + b).im) - (ca + cb)) < 1e-9
        assert abs(complex((a * b).re) + 1j * complex((a * b).im) - (ca * cb)) < 1e-9
        if b != GR_ZERO:
            q = a / b
            assert abs(complex(q.re) + 1j * complex(q.im) - ca / cb) < 1e-9
            assert q * b == a


def test_gaussrat_exactness_and_identities():
    assert GR_I * GR_I == GaussRat(-1)
    assert GaussRat(1, 2) * GaussRat(1, -2) == GaussRat(5)
    assert GaussRat(0, 1) / GaussRat(0, 1) == GR_ONE
    third = GaussRat(Fraction(1, 3))
    assert third + third + third == GR_ONE
    assert -GaussRat(2, -3) == GaussRat(-2, 3)
    with pytest.raises(ZeroDivisionError):
        GR_ONE / GR_ZERO


def test_gaussrat_is_immutable_and_hashable():
    a = GaussRat(1, 2)
    with pytest.raises(AttributeError):
        a.re = Fraction(5)
    assert len({GaussRat(1, 2), GaussRat(1, 2), GaussRat(2, 1)}) == 2
    assert GaussRat(3) == GaussRat(Fraction(6, 2))


# --- polynomials ---------------------------------------------------------------

def test_var_index_layout():
    assert var_index(1, 1, 4) == 0
    assert var_index(1, 2, 4) == 1
    assert var_index(2, 1, 4) == 2
    assert var_index(4, 2, 4) == 7


def random_xpoly(rng, nrows, max_terms=4):
    p = XPoly.zero(nrows)
    for _ in range(rng.randrange(max_terms + 1)):
        term = XPoly.const(nrows, GaussRat(rng.randrange(-5, 6),
                                           rng.randrange(-2, 3)))
        for _ in range(rng.randrange(3)):
            term = term * XPoly.variable(nrows, rng.randrange(1, nrows + 1),
                                         rng.randrange(1, 3))
        p = p + term
    return p


def random_point(rng, nrows):
    return [GaussRat(rng.randrange(-4, 5), rng.randrange(-2, 3))
            for _ in range(2 * nrows)]


def test_xpoly_arithmetic_is_ring_homomorphism_under_eval():
    rng = random.Random(31)
    for _ in range(40):
        nrows = rng.randrange(2, 5)
        a = random_xpoly(rng, nrows)
        b = random_xpoly(rng, nrows)
        pt = random_point(rng, nrows)
        assert (a + b).eval_at(pt) == a.eval_at(pt) + b.eval_at(pt)
        assert (a - b).eval_at(pt) == a.eval_at(pt) - b.eval_at(pt)
        assert (a * b).eval_at(pt) == a.eval_at(pt) * b.eval_at(pt)
        assert (a ** 2).eval_at(pt) == a.eval_at(pt) * a.eval_at(pt)


def test_minor_is_two_by_two_determinant():
    rng = random.Random(77)
    for _ in range(20):
        pt = random_point(rng, 4)
        for i in range(1, 4):
            for j in range(i + 1, 5):
                det = (pt[var_index(i, 1, 4)] * pt[var_index(j, 2, 4)]
                       - pt[var_index(i, 2, 4)] * pt[var_index(j, 1, 4)])
                assert minor(i, j, 4).eval_at(pt) == det


def test_plucker_relation():
    # three-term quadratic relation among the six minors on four rows
    d = {(i, j): minor(i, j, 4) for i in range(1, 4) for j in range(i + 1, 5)}
    lhs = d[(1, 3)] * d[(2, 4)]
    rhs = d[(1, 2)] * d[(3, 4)] + d[(1, 4)] * d[(2, 3)]
    assert (lhs - rhs).is_zero()


# --- cluster monomials ----------------------------------------------------------

def test_z_A_is_minor_product():
    f = Multidissection("A", 4, {AEdge(1, 3): 2, AEdge(1, 4): 1})
    want = minor(1, 3, 4) * minor(1, 3, 4) * minor(1, 4, 4)
    assert z_A(f) == want


def test_cluster_monomial_dispatch():
    fa = Multidissection("A", 4, {AEdge(1, 3): 1})
    assert cluster_monomial("A", fa) == z_A(fa)
    fc = Multidissection("C", 2, {CDiameter(1): 1})
    assert cluster_monomial("C", fc) == z_C(fc)
    fd = Multidissection("D", 2, {DDiameter(1, SOLID): 1})
    assert cluster_monomial("D", fd) == z_D(fd)
    with pytest.raises(ValueError):
        cluster_monomial("A", fc)


def test_z_A_weight_vector():
    f = Multidissection("A", 4, {AEdge(2, 4): 3})
    assert row_degrees(z_A(f)) == (0, 3, 0, 3)


def test_z_C_edge_images():
    rng = random.Random(3)
    n = 3
    for _ in range(10):
        pt = random_point(rng, n)
        x = lambda r, c: pt[var_index(r, c, n)]
        half = GaussRat(Fraction(1, 2))
        minus_i_half = GaussRat(0, Fraction(-1, 2))
        cases = [
            (Multidissection("C", n, {CDiameter(2): 1}), x(2, 1) * x(2, 2)),
            (Multidissection("C", n, {CIntegrated(1, 3): 1}),
             (x(1, 1) * x(3, 2) + x(1, 2) * x(3, 1)) * half),
            (Multidissection("C", n, {CSegregated(1, 3): 1}),
             (x(1, 1) * x(3, 2) - x(1, 2) * x(3, 1)) * minus_i_half),
        ]
        for f, want in cases:
            assert z_C(f).eval_at(pt) == want


def test_z_D_matches_minor_product():
    n = 4
    f = Multidissection("D", n, {
        DPairSeg(2, 4): 1, DPairInt(1, 4): 2,
        DDiameter(2, SOLID): 1, DDiameter(2, DOTTED): 2})
    N = n + 2
    seg = minor(2, 5, N) * minor(4, 6, N) + minor(2, 4, N)
    integ = minor(1, 5, N) * minor(4, 6, N) - minor(1, 4, N)
    want = seg * integ * integ * minor(2, 5, N) * minor(2, 6, N) * minor(2, 6, N)
    assert z_D(f) == want


def test_d_degree():
    n = 4
    f = Multidissection("D", n, {
        DPairSeg(2, 4): 1, DPairInt(1, 4): 2,
        DDiameter(2, SOLID): 1, DDiameter(2, DOTTED): 2})
    # weighted edge count of the multidissection
    assert d_degree(z_D(f), n) == 9


def test_row_degrees_rejects_inhomogeneous():
    n = 3
    f = Multidissection("D", n, {DPairSeg(1, 3): 1})
    with pytest.raises(ValueError):
        row_degrees(z_D(f))


# --- ideal membership ------------------------------------------------------------

def test_j_reduce_and_membership():
    n = 3
    gen = j_generator(n)
    assert j_reduce(gen, n).is_zero()
    assert j_member(gen * minor(1, 2, n + 2), n)
    assert j_member(gen * gen + gen, n)
    assert not j_member(XPoly.const(n + 2, GR_ONE), n)
    assert not j_member(minor(1, 2, n + 2), n)
    assert not j_member(gen + XPoly.const(n + 2, GR_ONE), n)
    # reduction leaves nothing divisible by the leading product
    p = gen * minor(2, 4, n + 2) + minor(1, 3, n + 2)
    r = j_reduce(p, n)
    la, lb = var_index(n + 1, 1, n + 2), var_index(n + 2, 2, n + 2)
    for mono in r.monomials():
        assert not (mono[la] and mono[lb])


def test_j_member_zero():
    assert j_member(XPoly.zero(5), 3)


# --- rank and dependencies --------------------------------------------------------

def gf_div(a, b):
    na, nb = a[0] * b[0] + a[1] * b[1], a[1] * b[0] - a[0] * b[1]
    d = b[0] * b[0] + b[1] * b[1]
    return (na / d, nb / d)


def oracle_rank(polys):
    """Dense Gaussian elimination over Q(i) with Fraction pairs."""
    monos = sorted({m for p in polys for m in p.monomials()})
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for p in polys:
        row = [(Fraction(0), Fraction(0))] * len(monos)
        for m in p.monomials():
            c = p.coefficient(m)
            row[col[m]] = (c.re, c.im)
        rows.append(row)
    r = 0
    for c in range(len(monos)):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != (0, 0):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != (0, 0):
                f = gf_div(rows[i][c], rows[r][c])
                rows[i] = [(a[0] - f[0] * b[0] + f[1] * b[1],
                            a[1] - f[0] * b[1] - f[1] * b[0])
                           for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def test_rank_matches_oracle_on_z_polynomials():
    rng = random.Random(202)
    pools = [
        [z_C(f) for f in enumerate_multidissections("C", 2, 2)],
        [z_A(f) for f in enumerate_multidissections("A", 4, 2)],
        [z_D(f) for f in enumerate_multidissections("D", 2, 2)],
    ]
    for pool in pools:
        assert rank(pool) == oracle_rank(pool)
        for _ in range(5):
            sub = rng.sample(pool, rng.randrange(1, len(pool) + 1))
            assert rank(sub) == oracle_rank(sub)


def test_rank_detects_crafted_dependencies():
    a = minor(1, 2, 4)
    b = minor(1, 3, 4)
    two_a = a + a
    assert rank([a, b]) == 2
    assert rank([a, two_a]) == 1
    assert rank([a, b, a + b]) == 2
    assert rank([XPoly.zero(4)]) == 0
    assert rank([]) == 0
    # scaling by i keeps the span one dimensional
    assert rank([a, a.scale(GR_I)]) == 1


def test_dependency_witness_sums_to_zero():
    a = minor(1, 2, 4)
    b = minor(1, 3, 4)
    polys = [a, b, a.scale(GR_I) + b + b]
    w = dependency_witness(polys)
    assert w is not None
    total = XPoly.zero(4)
    for idx, coeff in w:
        total = total + polys[idx].scale(coeff)
    assert total.is_zero()
    assert any(c != GR_ZERO for _, c in w)
    assert dependency_witness([a, b]) is None


# --- bases -------------------------------------------------------------------------

@pytest.mark.parametrize("n,k,count", [
    (3, 1, 3), (4, 1, 6), (4, 2, 20), (5, 1, 10), (5, 2, 50),
])
def test_basis_A_frozen(n, k, count):
    rep = check_basis_A(n, k)
    assert rep.passed
    assert rep.count == count and rep.rank == count
    assert rep.expected_dim == len(enumerate_ssyt((k, k), n))


@pytest.mark.parametrize("n,k,count", [
    (2, 1, 4), (2, 2, 9), (3, 1, 9), (3, 2, 36),
])
def test_basis_C_frozen(n, k, count):
    rep = check_basis_C(n, k)
    assert rep.passed
    assert rep.count == count and rep.rank == count


def test_basis_report_json():
    d = check_basis_A(3, 1).to_json_dict()
    assert d["pass"] is True
    assert d["count"] == d["rank"] == d["expected_dim"] == 3


# --- type D conjecture ----------------------------------------------------------------

def test_expected_dim_D():
    for n in range(2, 5):
        for k in range(0, 5):
            want = sum(
                (k - 2 * l + 1) *
                schur_eval((k - l, l), ones_point(n)).evaluate(1)
                for l in range(0, k // 2 + 1))
            assert expected_dim_D(n, k) == want


def test_lemma_basis_multidissections():
    # weight-k type A multidissections of the two-larger polygon avoiding
    # the top edge
    for n, k in [(2, 1), (2, 2), (3, 2)]:
        got = lemma_basis_multidissections(n, k)
        for md in got:
            assert md.family == "A" and md.n == n + 2
            assert all(not (e.i == n + 1 and e.j == n + 2)
                       for e, _ in md.items())
        assert len({md.key() for md in got}) == len(got)
    assert len(lemma_basis_multidissections(2, 0)) == 1


@pytest.mark.parametrize("n,k,count,rnk", [
    (2, 0, 1, 1), (2, 1, 4, 4), (2, 2, 10, 11), (3, 1, 6, 6),
    (3, 2, 21, 24), (3, 3, 56, 72),
])
def test_conjecture_D_frozen(n, k, count, rnk):
    rep = check_conjecture_D(n, k)
    assert rep.passed
    assert rep.count == count
    assert rep.rank == rnk
    assert rep.expected_dim == count
    assert rep.independent_mod_J and rep.spans
    assert "evidence" in rep.note
    d = rep.to_json_dict()
    assert d["pass"] is True and d["note"] == rep.note


def test_conjecture_D_rejects_small_n():
    with pytest.raises(ValueError):
        check_conjecture_D(1, 2)


# --- rotation equivariance ---------------------------------------------------------------

def test_rotation_substitution_A():
    sub = rotation_substitution("A", 4)
    assert sub.apply(minor(1, 4, 4)) == minor(1, 2, 4)
    assert sub.apply(minor(1, 2, 4)) == minor(2, 3, 4)
    # applying n times scales a degree-d monomial by (-1)^d
    p = minor(1, 3, 4)
    assert sub.apply_times(p, 4) == p


def test_rotation_substitution_C():
    sub = rotation_substitution("C", 2)
    # wrapping the seam picks up -i on the first column, +i on the second
    assert sub.apply(XPoly.variable(2, 2, 1)) == \
        XPoly.variable(2, 1, 1).scale(GaussRat(0, -1))
    assert sub.apply(XPoly.variable(2, 2, 2)) == \
        XPoly.variable(2, 1, 2).scale(GaussRat(0, 1))
    assert sub.apply(XPoly.variable(2, 1, 1)) == XPoly.variable(2, 2, 1)


def test_rotation_substitution_D():
    sub = rotation_substitution("D", 2)
    assert sub.apply(minor(1, 3, 4)) == minor(2, 4, 4)
    # the two extra columns swap
    assert sub.apply(XPoly.variable(4, 3, 1)) == XPoly.variable(4, 4, 1)
    assert sub.apply(XPoly.variable(4, 4, 2)) == XPoly.variable(4, 3, 2)


def test_substitution_from_map_defaults_to_identity():
    sub = VarSubstitution.from_map(2, {(1, 1): XPoly.variable(2, 2, 2)})
    assert sub.apply(XPoly.variable(2, 1, 1)) == XPoly.variable(2, 2, 2)
    assert sub.apply(XPoly.variable(2, 1, 2)) == XPoly.variable(2, 1, 2)
    with pytest.raises(ValueError):
        sub.apply(XPoly.variable(3, 1, 1))


@pytest.mark.parametrize("family,n,k", [
    ("A", 4, 1), ("A", 4, 2), ("A", 5, 2),
    ("C", 2, 1), ("C", 2, 2), ("C", 3, 2),
])
def test_equivariance_exact(family, n, k):
    rep = verify_equivariance(family, n, k)
    assert rep.passed and rep.mode == "exact"
    assert rep.failures == ()
    assert rep.total == len(enumerate_multidissections(family, n, k))


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_equivariance_D_mod_J(n, k):
    rep = verify_equivariance("D", n, k)
    assert rep.passed and rep.mode == "mod_J"


@pytest.mark.parametrize("n", [2, 3, 4])
def test_D_pair_discrepancy_form(n):
    # for a chord pair the exact mismatch is a unit times the product of the
    # rotated-pair minor and the last-columns minor; wraparound pairs match
    # exactly
    N = n + 2
    units = [GR_ONE, -GR_ONE, GR_I, -GR_I]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for cls in (DPairSeg, DPairInt):
                f = Multidissection("D", n, {cls(a, b): 1})
                diff = equivariance_discrepancy("D", n, f)
                if b == n:
                    assert diff.is_zero()
                    continue
                target = minor(a + 1, b + 1, N) * minor(n + 1, n + 2, N)
                assert any(diff == target.scale(u) for u in units), (a, b, cls)
                assert j_member(diff, n)


def test_diameter_equivariance_exact_in_D():
    for n in (2, 3):
        for a in range(1, n + 1):
            for color in (SOLID, DOTTED):
                f = Multidissection("D", n, {DDiameter(a, color): 1})
                assert equivariance_discrepancy("D", n, f).is_zero()


# --- character identities ---------------------------------------------------------------

def test_character_A():
    for n, k in [(3, 1), (3, 2), (4, 1), (4, 2), (5, 2)]:
        assert character_check_A(n, k, ones_point(n))
        assert character_check_A(n, k, principal_point(n))
        assert character_check_A(n, k, tuple(
            IntLaurentPoly.monomial(0, p) for p in (2, 3, 5, 7, 11)[:n]))


def test_character_A_frozen_weight_sum():
    # weight generating function over one-edge multidissections on the square
    n, k = 4, 1
    y = principal_point(n)
    total = sum(
        (y[e.i - 1] * y[e.j - 1] for f in enumerate_multidissections("A", n, k)
         for e, m in f.items()),
        IntLaurentPoly({}))
    assert total == IntLaurentPoly({1: 1, 2: 1, 3: 2, 4: 1, 5: 1})
    assert total == schur_eval((1, 1), y)


def test_character_D():
    two = IntLaurentPoly.monomial(0, 2)
    for n, k in [(2, 1), (2, 2), (3, 1), (3, 2)]:
        assert character_check_D(n, k, ones_point(n), ones_point(2))
        assert character_check_D(n, k, principal_point(n, 2),
                                 (IntLaurentPoly.monomial(0),
                                  IntLaurentPoly.monomial(n)))
        assert character_check_D(n, k, ones_point(n), (two, two))
