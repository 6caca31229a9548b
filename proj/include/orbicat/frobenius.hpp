#pragma once

// Finite-dimensional associative algebras given by structure constants,
// Frobenius structures derived from a counit, Nakayama automorphisms, and
// the r-spin / opposite-algebra operations. Optionally Z2-graded; graded
// data follows the super conventions (Koszul sign in the opposite algebra
// and in the Nakayama defining system).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbicat/matrix.hpp"

namespace orbicat {

using Vec = std::vector<Scalar>;

struct Algebra {
    int dim = 0;
    std::vector<std::string> labels; // defaults to e0, e1, ...
    std::vector<Scalar> c;           // c[(i*dim+j)*dim+k]: e_i e_j = sum_k c_ijk e_k
    Vec unit;
    std::vector<int> grading; // empty = ungraded, else parity 0/1 per basis element

    bool graded() const { return !grading.empty(); }
    int parity(int i) const { return grading.empty() ? 0 : grading[i]; }
    bool has_odd_part() const;

    const Scalar& sc(int i, int j, int k) const { return c[(std::size_t(i) * dim + j) * dim + k]; }
    Scalar& sc(int i, int j, int k) { return c[(std::size_t(i) * dim + j) * dim + k]; }

    Vec mul(const Vec& a, const Vec& b) const;
    Matrix left_mult(const Vec& a) const;  // x -> a*x
    Matrix right_mult(const Vec& a) const; // x -> x*a
    Matrix left_mult_basis(int i) const;
    Matrix right_mult_basis(int i) const;

    Vec basis_vec(int i) const;
    std::string label(int i) const;

    // associativity on all basis triples, two-sided unit, grading closure
    void validate() const;
};

struct FrobeniusAlgebra {
    Algebra alg;
    Vec counit;
    Matrix gram;     // g_ij = eps(e_i e_j)
    Matrix gram_inv; // copairing coefficients g^{ij}
    std::vector<Matrix> comult; // comult[k](i,j): Delta(e_k) = sum c_ij e_i (x) e_j

    int dim() const { return alg.dim; }
    bool graded() const { return alg.graded(); }
    Scalar eps(const Vec& v) const;
    Vec basis_vec(int i) const { return alg.basis_vec(i); }
};

// Derives the pairing, copairing and comultiplication from the counit, then
// verifies the Frobenius identity and counitality exactly before returning.
// An optional caller-supplied comultiplication is checked against the
// derived one. Throws DegeneratePairing / AxiomFailure.
FrobeniusAlgebra build_frobenius(Algebra a, Vec counit,
                                 const std::vector<Matrix>* supplied_comult = nullptr);

bool check_delta_separable(const FrobeniusAlgebra& f); // mu . Delta == id, exactly

// The Nakayama automorphism: unique nu with eps(nu(a) b) = eps(b a); in the
// graded case the defining system carries the Koszul sign,
// eps(nu(a) b) = (-1)^{|a||b|} eps(b a). Verified to be a unital algebra
// automorphism before returning.
Matrix nakayama_automorphism(const FrobeniusAlgebra& f);

// The dual-side twist gamma used for bimodule adjoints: the automorphism
// with eps(gamma(a) b) = eps(b a) taken without grading signs (closed form
// g^{-T} g). Coincides with the Nakayama automorphism when ungraded; in the
// graded case the Nakayama automorphism is gamma composed with parity.
Matrix dual_twist(const FrobeniusAlgebra& f);

bool is_symmetric(const FrobeniusAlgebra& f); // nu == id

enum class SpinMode { Strict, Inner };

struct SpinWitness {
    bool ok = false;
    std::optional<Vec> u; // inner mode: nu^r(a) = u a u^{-1}
};

// Tests whether the r-th power of the Nakayama automorphism is trivial
// (strict) or inner (with witness u).
SpinWitness is_r_spin(const FrobeniusAlgebra& f, int r, SpinMode mode);

// Opposite algebra: c'_ijk = (-1)^{|i||j|} c_jik, same counit.
FrobeniusAlgebra opposite_algebra(const FrobeniusAlgebra& f);

// Basis of the (even) center {z : za = az for all a}, deterministic order.
std::vector<Vec> center_basis(const FrobeniusAlgebra& f);

bool is_invertible_element(const Algebra& a, const Vec& u);
bool is_central_element(const Algebra& a, const Vec& u);
bool is_algebra_automorphism(const Algebra& a, const Matrix& phi);
// anti-automorphism check carries the Koszul sign when graded:
// theta(e_i e_j) = (-1)^{|i||j|} theta(e_j) theta(e_i)
bool is_algebra_antiautomorphism(const Algebra& a, const Matrix& phi,
                                 std::string* witness = nullptr);

// --- standard examples -----------------------------------------------------

Algebra ground_field_algebra();
Algebra group_algebra_zn(int n);            // Q[Z_n], basis g^0..g^{n-1}
Algebra matrix_algebra(int n);              // M_n, basis E_11, E_12, ..., row-major
Algebra product_of_fields(int k);           // Q x ... x Q, orthogonal idempotents
Algebra clifford1();                        // <1, x>, x^2 = 1, x odd
Algebra clifford2();                        // <1, x, y, xy>, x^2 = y^2 = 1, xy = -yx

// Counits: eps(a) = scale * tr(rep(a)) for M_n; eps(g^k) = scale * [k = 0]
// for Z_n. The Delta-separable normalizations are scale = n for both.
Vec trace_counit(int n, const Scalar& scale);
Vec trace_u_counit(int n, const std::vector<Scalar>& u_diag); // eps(a) = tr(u a)
Vec group_counit(int n, const Scalar& scale);

} // namespace orbicat
