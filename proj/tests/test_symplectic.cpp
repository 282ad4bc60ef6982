#include <doctest.h>

#include "golden.hpp"
#include "orbitdx/oracle.hpp"
#include "orbitdx/random_gen.hpp"
#include "orbitdx/symplectic.hpp"

using namespace orbitdx;

namespace {

Mat random_mat(Rng& rng, int rows, int cols, long bound = 9) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = random_scalar(rng, bound, true);
    return m;
}

Mat commutator(const Mat& x, const Mat& a) { return x * a - a * x; }

} // namespace

TEST_CASE("coordinate tangents of the 2x2 chart, against hand derivatives") {
    Rng rng(211);
    for (int trial = 0; trial < 10; ++trial) {
        GaussianRational r(rng.uniform(1, 9)), p(rng.uniform(-9, 9)), q(rng.uniform(-9, 9));
        CanonicalCoords c = golden::simple2_coords(r, p, q);
        CoordinateIndex dp{CoordKind::P, 1, 2, 0, 0};
        CoordinateIndex dq{CoordKind::Q, 2, 1, 0, 0};
        TangentVector tp = coordinate_tangent(c, dp);
        TangentVector tq = coordinate_tangent(c, dq);
        CHECK(tp.v == Mat{{-q, golden::one()}, {-q * q, q}});
        CHECK(tq.v == Mat{{-p, golden::Z()},
                          {-GaussianRational(2) * p * q - r, p}});
        CHECK(tp.at == golden::simple2_matrix(r, p, q));
    }
}

TEST_CASE("at zero coordinates a p tangent is an elementary block matrix") {
    TypeSequence t = golden::ex4_type_seq();
    CanonicalCoords c(t);
    CoordinateIndex idx{CoordKind::P, 1, 3, 1, 0}; // p_1^3 entry (2,1)
    TangentVector tv = coordinate_tangent(c, idx);
    Mat expected(6, 6);
    expected.at(1, 4) = golden::one(); // block (1,3) lives at rows 0..1, col 4
    CHECK(tv.v == expected);

    CHECK_THROWS_AS(coordinate_tangent(c, CoordinateIndex{CoordKind::P, 1, 3, 2, 0}), IndexError);
    CHECK_THROWS_AS(coordinate_tangent(c, CoordinateIndex{CoordKind::P, 3, 1, 0, 0}), IndexError);
}

TEST_CASE("solve_infinitesimal") {
    Rng rng(223);
    TypeSequence t = golden::ex1_type_seq({gr(1), gr(2), gr(3), gr(4)});
    Mat a = random_conjugate_point(t, rng, 5);

    Mat x0 = solve_infinitesimal(a, Mat::zeros(4, 4));
    CHECK(commutator(x0, a).is_zero());

    // scalar matrices are central: nothing nonzero is tangent there
    Mat scalar = gr(3) * Mat::identity(3);
    Mat nonzero(3, 3);
    nonzero.at(0, 1) = gr(1);
    CHECK_THROWS_AS(solve_infinitesimal(scalar, nonzero), InconsistentSystemError);

    // gauge independence: any two solutions pair equally with any tangent
    for (int trial = 0; trial < 10; ++trial) {
        Mat e = random_mat(rng, 4, 4);
        Mat v = commutator(e, a);
        Mat x = solve_infinitesimal(a, v);
        CHECK(commutator(x, a) == v);
        Mat w = commutator(random_mat(rng, 4, 4), a);
        CHECK(trace_of_product(x, w) == trace_of_product(e, w));
    }
}

TEST_CASE("kks form on the 2x2 chart") {
    Rng rng(227);
    for (int trial = 0; trial < 10; ++trial) {
        GaussianRational r(rng.uniform(1, 9)), p(rng.uniform(-9, 9)), q(rng.uniform(-9, 9));
        CanonicalCoords c = golden::simple2_coords(r, p, q);
        TangentVector tp = coordinate_tangent(c, {CoordKind::P, 1, 2, 0, 0});
        TangentVector tq = coordinate_tangent(c, {CoordKind::Q, 2, 1, 0, 0});
        CHECK(kks_form(tp, tq) == GaussianRational(1));
        CHECK(kks_form(tq, tp) == GaussianRational(-1));
        CHECK(kks_form(tp, tp) == GaussianRational(0));
        CHECK(kks_form(tq, tq) == GaussianRational(0));
    }
}

TEST_CASE("p directions pair to zero among themselves") {
    Rng rng(229);
    TypeSequence t = golden::ex1_type_seq({gr(1), gr(2), gr(3), gr(4)});
    CanonicalCoords c = random_coords(t, rng, 9, false);
    REQUIRE(verify_on_orbit(parameterize(c), structure_from_sequence(t)).match);
    auto coords = coordinate_enumeration(t);
    std::vector<TangentVector> ps;
    for (const auto& idx : coords)
        if (idx.kind == CoordKind::P)
            ps.push_back(coordinate_tangent(c, idx));
    for (size_t a = 0; a < ps.size(); ++a)
        for (size_t b = 0; b < ps.size(); ++b)
            CHECK(kks_form(ps[a], ps[b]) == GaussianRational(0));
}

TEST_CASE("kks form is bilinear and antisymmetric on random tangents") {
    Rng rng(233);
    TypeSequence t = golden::ex1_type_seq({gr(0), gr(1), gr(2), gr(5)});
    Mat a = random_conjugate_point(t, rng, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Mat v1 = commutator(random_mat(rng, 4, 4), a);
        Mat v2 = commutator(random_mat(rng, 4, 4), a);
        Mat v3 = commutator(random_mat(rng, 4, 4), a);
        GaussianRational s = random_scalar(rng, 9, true);
        TangentVector t1{a, v1}, t2{a, v2};
        CHECK(kks_form(t1, t2) == -kks_form(t2, t1));
        TangentVector sum{a, v2 + s * v3};
        CHECK(kks_form(t1, sum) ==
              kks_form(t1, t2) + s * kks_form(t1, TangentVector{a, v3}));
    }
    CHECK_THROWS_AS(kks_form(TangentVector{a, Mat::zeros(4, 4)},
                             TangentVector{Mat::identity(4), Mat::zeros(4, 4)}),
                    InvariantError);
}

TEST_CASE("the trace-pairing route and the commutator-solve route agree") {
    // omega can be evaluated at the normal form via tr(J [g^-1 E2 g, g^-1 E1 g])
    // or at the point via tr(X2 [E1, a]); both must produce the same exact value
    Rng rng(239);
    std::vector<JordanStructure> structures;
    structures.push_back(structure_from_sequence(golden::ex1_type_seq({gr(1), gr(2), gr(3), gr(4)})));
    structures.push_back(JordanStructure({{gr(0), {2, 1}}}));
    structures.push_back(JordanStructure({{gr(0), {3}}, {gr(1), {1}}}));
    for (const auto& s : structures) {
        TypeSequence t = type_sequence(s);
        int n = t.total_size();
        Mat j = jordan_matrix(t);
        Mat g = random_unitriangular_product(n, rng, 5);
        Mat ginv = inverse(g);
        Mat a = g * j * ginv;
        for (int trial = 0; trial < 15; ++trial) {
            Mat e1 = random_mat(rng, n, n, 6);
            Mat e2 = random_mat(rng, n, n, 6);
            TangentVector t1{a, commutator(e1, a)}, t2{a, commutator(e2, a)};
            GaussianRational via_solver = kks_form(t1, t2);
            Mat e1j = ginv * e1 * g, e2j = ginv * e2 * g;
            GaussianRational via_lie = trace(j * commutator(e2j, e1j));
            CHECK(via_solver == via_lie);
        }
    }
}

TEST_CASE("aux form") {
    int n = 2, m = 3;
    // elementary pair P_{ij}, Q_{ji}
    Mat pe(n + m, n + m), qe(n + m, n + m);
    pe.at(0, 3) = gr(1); // i = 1, j = 4
    qe.at(3, 0) = gr(1);
    CHECK(aux_form(pe, qe, n, m) == GaussianRational(1));
    CHECK(aux_form(qe, pe, n, m) == GaussianRational(-1));

    Rng rng(241);
    Mat b = random_mat(rng, n + m, n + m);
    CHECK(aux_form(b, b, n, m) == GaussianRational(0));

    // two purely upper-off-diagonal matrices pair to zero
    Mat u1(n + m, n + m), u2(n + m, n + m);
    u1.at(0, 2) = gr(5);
    u2.at(1, 4) = gr(-3);
    CHECK(aux_form(u1, u2, n, m) == GaussianRational(0));

    CHECK_THROWS_AS(aux_form(b, Mat::zeros(2, 2), n, m), ShapeError);
}

TEST_CASE("gram matrix of the 2x2 chart") {
    CanonicalCoords c = golden::simple2_coords(gr(4), gr(3), gr(-2));
    CHECK(gram_matrix(c) == Mat{{golden::Z(), golden::one()}, {-golden::one(), golden::Z()}});
    CHECK(canonical_gram(c.type_seq()) ==
          Mat{{golden::Z(), golden::one()}, {-golden::one(), golden::Z()}});
}

TEST_CASE("gram equals canonical for chains (2,2), and is constant in the chart") {
    Rng rng(251);
    JordanStructure s({{gr(0), {2, 2}}});
    TypeSequence t = type_sequence(s);
    Mat first;
    for (int sample = 0; sample < 2; ++sample) {
        CanonicalCoords c = random_coords(t, rng, 9, false);
        REQUIRE(verify_on_orbit(parameterize(c), s).match);
        Mat g = gram_matrix(c);
        CHECK(g == canonical_gram(t));
        if (sample == 0)
            first = g;
        else
            CHECK(g == first);
    }
}

TEST_CASE("canonical gram is antisymmetric with zero diagonal and full rank") {
    Rng rng(257);
    for (int trial = 0; trial < 10; ++trial) {
        TypeSequence t = type_sequence(random_structure(rng, 7));
        Mat g = canonical_gram(t);
        CHECK(g.rows() == CanonicalCoords(t).coordinate_count());
        CHECK(g == -transpose(g));
        CHECK(rank(g) == g.rows());
        for (int i = 0; i < g.rows(); ++i)
            CHECK(g.at(i, i).is_zero());
    }
}
