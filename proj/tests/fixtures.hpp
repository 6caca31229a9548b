#pragma once

// Shared corpus fixtures for the test suites: the standard Frobenius
// algebras of the library plus the bimodules built from them.

#include <memory>

#include "orbicat/bimodule.hpp"

namespace fixtures {

using namespace orbicat;

inline AlgebraRef frob(Algebra a, Vec counit) {
    return std::make_shared<const FrobeniusAlgebra>(build_frobenius(std::move(a), std::move(counit)));
}

inline AlgebraRef ground_field() { return frob(ground_field_algebra(), {Scalar::one()}); }

inline AlgebraRef group_zn(int n, long scale) {
    return frob(group_algebra_zn(n), group_counit(n, Scalar(scale)));
}

inline AlgebraRef mat_n(int n, const Scalar& scale) {
    return frob(matrix_algebra(n), trace_counit(n, scale));
}

// M_2 with eps(a) = tr(u a), u = diag(1,2): not symmetric, Nakayama is inner
inline AlgebraRef m2_u() {
    return frob(matrix_algebra(2), trace_u_counit(2, {Scalar(1), Scalar(2)}));
}

inline AlgebraRef qxq() {
    return frob(product_of_fields(2), {Scalar::one(), Scalar::one()});
}

// Delta-separable normalizations of the graded Clifford algebras
inline AlgebraRef cl1_separable() { return frob(clifford1(), {Scalar(2), Scalar(0)}); }
inline AlgebraRef cl2_separable() {
    return frob(clifford2(), {Scalar(4), Scalar(0), Scalar(0), Scalar(0)});
}

// column vectors Q^n over (M_n, Q)
inline Bimodule column_module(const AlgebraRef& mn, const AlgebraRef& q) {
    int n = 0;
    while (n * n < mn->dim()) ++n;
    std::vector<Matrix> l;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Matrix m(n, n);
            m.at(r, c) = Scalar::one();
            l.push_back(m);
        }
    std::vector<Matrix> rt = {Matrix::identity(n)};
    return make_bimodule(mn, q, std::move(l), std::move(rt));
}

// row vectors over (Q, M_n)
inline Bimodule row_module(const AlgebraRef& q, const AlgebraRef& mn) {
    int n = 0;
    while (n * n < mn->dim()) ++n;
    std::vector<Matrix> l = {Matrix::identity(n)};
    std::vector<Matrix> rt;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            // row . E_rc : picks entry r into slot c
            Matrix m(n, n);
            m.at(c, r) = Scalar::one();
            rt.push_back(m);
        }
    return make_bimodule(q, mn, std::move(l), std::move(rt));
}

} // namespace fixtures
