#include "doctest.h"

#include "fixtures.hpp"

using namespace orbicat;
using namespace fixtures;

TEST_SUITE_BEGIN("frobenius");

namespace {

// independent separability oracle: mu . Delta = id iff the window element
// z = sum_{st} g^{st} e_s e_t equals the unit
bool window_element_is_unit(const FrobeniusAlgebra& f) {
    Vec z(f.dim());
    for (int s = 0; s < f.dim(); ++s)
        for (int t = 0; t < f.dim(); ++t) {
            const Scalar& g = f.gram_inv.at(s, t);
            if (g.is_zero()) continue;
            Vec st = f.alg.mul(f.basis_vec(s), f.basis_vec(t));
            for (int k = 0; k < f.dim(); ++k) z[k] += g * st[k];
        }
    return z == f.alg.unit;
}

Algebra dual_numbers() { // Q[x]/(x^2)
    Algebra a;
    a.dim = 2;
    a.labels = {"1", "x"};
    a.c.assign(8, Scalar());
    a.sc(0, 0, 0) = Scalar::one();
    a.sc(0, 1, 1) = Scalar::one();
    a.sc(1, 0, 1) = Scalar::one();
    a.unit = {Scalar::one(), Scalar()};
    return a;
}

void check_nakayama_defining_property(const FrobeniusAlgebra& f) {
    Matrix nu = nakayama_automorphism(f);
    for (int i = 0; i < f.dim(); ++i) {
        Vec ni = nu.apply(f.basis_vec(i));
        for (int j = 0; j < f.dim(); ++j) {
            Scalar lhs = f.eps(f.alg.mul(ni, f.basis_vec(j)));
            Scalar rhs = f.eps(f.alg.mul(f.basis_vec(j), f.basis_vec(i)));
            if (f.alg.parity(i) == 1 && f.alg.parity(j) == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
    CHECK(nu.apply(f.alg.unit) == f.alg.unit);
}

} // namespace

TEST_CASE("trivial Frobenius algebra on the ground field") {
    FieldGuard fg(Field::Q);
    auto f = ground_field();
    CHECK(f->comult[0] == Matrix{{Scalar(1)}}); // Delta(1) = 1 (x) 1
    CHECK(check_delta_separable(*f));
    CHECK(is_symmetric(*f));
}

TEST_CASE("matrix algebras with trace counits") {
    FieldGuard fg(Field::Q);
    SUBCASE("plain trace is Frobenius but not separable") {
        auto f = mat_n(2, Scalar(1));
        CHECK_FALSE(check_delta_separable(*f));
        CHECK(window_element_is_unit(*f) == check_delta_separable(*f));
        CHECK(is_symmetric(*f));
    }
    SUBCASE("normalized trace 2 tr is separable") {
        auto f = mat_n(2, Scalar(2));
        CHECK(check_delta_separable(*f));
        CHECK(window_element_is_unit(*f));
    }
    SUBCASE("M_3 with 3 tr") {
        auto f = mat_n(3, Scalar(3));
        CHECK(check_delta_separable(*f));
        check_nakayama_defining_property(*f);
    }
}

TEST_CASE("degenerate counit is rejected with DegeneratePairing") {
    FieldGuard fg(Field::Q);
    CHECK_THROWS_AS(build_frobenius(dual_numbers(), {Scalar(1), Scalar(0)}), DegeneratePairing);
    // the nilpotent generator pairs nondegenerately against eps(a+bx) = b
    auto f = build_frobenius(dual_numbers(), {Scalar(0), Scalar(1)});
    CHECK_FALSE(check_delta_separable(f));
}

TEST_CASE("supplied comultiplication is checked against the derived one") {
    FieldGuard fg(Field::Q);
    auto good = ground_field();
    std::vector<Matrix> delta = good->comult;
    CHECK_NOTHROW(build_frobenius(ground_field_algebra(), {Scalar::one()}, &delta));
    delta[0].at(0, 0) = Scalar(2);
    CHECK_THROWS_AS(build_frobenius(ground_field_algebra(), {Scalar::one()}, &delta),
                    AxiomFailure);
}

TEST_CASE("group algebras Q[Z_n]") {
    FieldGuard fg(Field::Q);
    for (int n = 2; n <= 5; ++n) {
        auto f = group_zn(n, n);
        CHECK(check_delta_separable(*f));
        CHECK(window_element_is_unit(*f));
        CHECK(is_symmetric(*f));
        check_nakayama_defining_property(*f);
        CHECK(center_basis(*f).size() == std::size_t(n)); // commutative
    }
    // the scale-1 counit stays Frobenius but loses separability
    CHECK_FALSE(check_delta_separable(*group_zn(3, 1)));
}

TEST_CASE("Nakayama automorphism of M_2 with eps = tr(u .) is conjugation by u") {
    FieldGuard fg(Field::Q);
    auto f = m2_u();
    CHECK_FALSE(is_symmetric(*f));
    Matrix nu = nakayama_automorphism(*f);

    // oracle: nu(a) = u^{-1} a u computed elementwise in M_2
    auto entry = [](const Vec& v, int r, int c) { return v[r * 2 + c]; };
    for (int i = 0; i < 4; ++i) {
        Vec a = f->basis_vec(i);
        Vec got = nu.apply(a);
        // u = diag(1,2): (u^{-1} a u)_{rc} = a_{rc} u_c / u_r
        Scalar u[2] = {Scalar(1), Scalar(2)};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                CHECK(entry(got, r, c) == entry(a, r, c) * u[c] / u[r]);
    }
    check_nakayama_defining_property(*f);
}

TEST_CASE("symmetric iff the counit is trace-like on all basis pairs") {
    FieldGuard fg(Field::Q);
    for (const auto& f : {ground_field(), mat_n(2, Scalar(2)), qxq(), group_zn(4, 4), m2_u()}) {
        bool sym = true;
        for (int i = 0; i < f->dim() && sym; ++i)
            for (int j = 0; j < f->dim() && sym; ++j)
                sym = f->eps(f->alg.mul(f->basis_vec(i), f->basis_vec(j))) ==
                      f->eps(f->alg.mul(f->basis_vec(j), f->basis_vec(i)));
        CHECK(sym == is_symmetric(*f));
    }
}

TEST_CASE("graded Clifford algebra Cl_1") {
    FieldGuard fg(Field::Q);
    SUBCASE("Nakayama is the parity involution, independent of the scale") {
        // eps(a + bx) = a as in the defining example; graded system
        auto f = frob(clifford1(), {Scalar(1), Scalar(0)});
        Matrix nu = nakayama_automorphism(*f);
        CHECK(nu == Matrix{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}});
        check_nakayama_defining_property(*f);
        CHECK_FALSE(check_delta_separable(*f));
    }
    SUBCASE("separable normalization and r-spin verdicts") {
        auto f = cl1_separable();
        CHECK(check_delta_separable(*f));
        CHECK(window_element_is_unit(*f));
        CHECK_FALSE(is_r_spin(*f, 1, SpinMode::Strict).ok);
        CHECK(is_r_spin(*f, 2, SpinMode::Strict).ok);
        CHECK(is_r_spin(*f, 4, SpinMode::Strict).ok);
        // parity is not inner in Cl_1: the even part is just the scalars
        CHECK_FALSE(is_r_spin(*f, 1, SpinMode::Inner).ok);
    }
}

TEST_CASE("graded Clifford algebra Cl_2") {
    FieldGuard fg(Field::Q);
    auto f = cl2_separable();
    CHECK(check_delta_separable(*f));
    Matrix nu = nakayama_automorphism(*f);
    // parity involution: diag(1,-1,-1,1)
    CHECK(nu == Matrix::diagonal({Scalar(1), Scalar(-1), Scalar(-1), Scalar(1)}));
    CHECK_FALSE(is_r_spin(*f, 1, SpinMode::Strict).ok);
    CHECK(is_r_spin(*f, 2, SpinMode::Strict).ok);
    // in Cl_2 parity is conjugation by the even invertible element xy
    auto inner = is_r_spin(*f, 1, SpinMode::Inner);
    CHECK(inner.ok);
    REQUIRE(inner.u.has_value());
    Vec u = *inner.u;
    Matrix lu = f->alg.left_mult(u);
    Matrix ru = f->alg.right_mult(u);
    // nu(a) u = u a for all a, as matrices acting on coefficient vectors
    CHECK(ru * nu == lu);
}

TEST_CASE("r-spin witnesses for inner mode on M_2 with u = diag(1,2)") {
    FieldGuard fg(Field::Q);
    auto f = m2_u();
    for (int r = 1; r <= 4; ++r) {
        CHECK_FALSE(is_r_spin(*f, r, SpinMode::Strict).ok);
        auto w = is_r_spin(*f, r, SpinMode::Inner);
        CHECK(w.ok);
        REQUIRE(w.u.has_value());
        // witness conjugates nu^r to the identity: nu^r(a) = w a w^{-1}
        Matrix nu = nakayama_automorphism(*f), nur = Matrix::identity(4);
        for (int k = 0; k < r; ++k) nur = nu * nur;
        Matrix lw = f->alg.left_mult(*w.u), rw = f->alg.right_mult(*w.u);
        CHECK(rw * nur == lw); // nu^r(a) w = w a for all a
    }
}

TEST_CASE("every symmetric corpus algebra is r-spin for all small r") {
    FieldGuard fg(Field::Q);
    for (const auto& f : {ground_field(), mat_n(2, Scalar(2)), mat_n(3, Scalar(3)), qxq(),
                          group_zn(2, 2), group_zn(3, 3)}) {
        for (int r = 1; r <= 4; ++r) {
            CHECK(is_r_spin(*f, r, SpinMode::Strict).ok);
            CHECK(is_r_spin(*f, r, SpinMode::Inner).ok);
        }
    }
}

TEST_CASE("opposite algebra") {
    FieldGuard fg(Field::Q);
    SUBCASE("commutative ungraded algebras are fixed") {
        auto f = group_zn(3, 3);
        auto op = opposite_algebra(*f);
        CHECK(op.alg.c == f->alg.c);
        CHECK(op.counit == f->counit);
    }
    SUBCASE("transpose is an isomorphism M_2 -> M_2^op") {
        auto f = mat_n(2, Scalar(2));
        auto op = opposite_algebra(*f);
        // transpose permutation on basis E11,E12,E21,E22
        Matrix tr(4, 4);
        tr.at(0, 0) = tr.at(3, 3) = tr.at(1, 2) = tr.at(2, 1) = Scalar::one();
        // check as a map A -> A^op: tr(ab) = tr(b) *_op tr(a)... i.e. an
        // algebra map into the opposite structure constants
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Vec lhs = tr.apply(f->alg.mul(f->basis_vec(i), f->basis_vec(j)));
                Vec rhs = op.alg.mul(tr.apply(f->basis_vec(i)), tr.apply(f->basis_vec(j)));
                CHECK(lhs == rhs);
            }
    }
    SUBCASE("graded Cl_1 gets a sign on x.x") {
        auto f = cl1_separable();
        auto op = opposite_algebra(*f);
        CHECK(op.alg.sc(1, 1, 0) == Scalar(-1));
        CHECK(op.alg.sc(0, 1, 1) == Scalar(1));
    }
}

TEST_CASE("center of M_2 is one dimensional") {
    FieldGuard fg(Field::Q);
    auto basis = center_basis(*mat_n(2, Scalar(2)));
    REQUIRE(basis.size() == 1);
    CHECK(is_central_element(mat_n(2, Scalar(2))->alg, basis[0]));
    CHECK(is_invertible_element(mat_n(2, Scalar(2))->alg, basis[0]));
}

TEST_SUITE_END();
