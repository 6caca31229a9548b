#pragma once

// Object classifications of the completed 2-category in its skeletal
// instantiation: orbifold objects (separable symmetric Frobenius algebras),
// r-spin objects (Nakayama power trivial or inner, with witness), O(2)
// objects (algebras with a compatible involution), the SO(2) equivalence
// between Euler data and strictification data, and the induced volution on
// Hom categories of bimodules.

#include "orbicat/bimodule.hpp"
#include "orbicat/category.hpp" // ValidationReport

namespace orbicat {

struct OrbifoldCheck {
    bool separable = false;
    bool symmetric = false;
    bool ok() const { return separable && symmetric; }
};
OrbifoldCheck check_orbifold_object(const FrobeniusAlgebra& f);

struct SpinObject {
    AlgebraRef algebra;
    int r = 1;
    bool strict = false;         // nu^r = id on the nose
    std::optional<Vec> lambda_u; // inner witness: nu^r(a) = u a u^{-1};
                                 // lambda is the u-multiplication intertwiner
};
std::optional<SpinObject> check_spin_object(const AlgebraRef& f, int r, SpinMode mode);

enum class O2Failure {
    None,
    NotAntiHomomorphism,
    NotInvolutive,
    CounitMismatch,
    NotSymmetric,
};

struct O2Object {
    AlgebraRef algebra;
    Matrix theta;
    // simple form: pi = phi = canonical, lambda = unit. The generalized
    // involution theta^2 = Ad_u is carried by a pi witness with theta(u) = u.
    Vec pi_witness;
};

struct O2Verdict {
    O2Failure failure = O2Failure::None;
    std::string witness;
    std::optional<O2Object> object;
    bool ok() const { return failure == O2Failure::None; }
};

// theta is a linear map in basis coordinates; pi, when supplied, relaxes
// involutivity to theta^2 = Ad_pi with theta(pi) = pi.
O2Verdict check_o2_object(const AlgebraRef& f, const Matrix& theta, const Vec* pi = nullptr);

// The SO(2) comparison: for a separable algebra, the strictification data
// lambda (invertible intertwiners A_{nu^{-1}} -> A) and the Euler data psi
// (invertible central elements) coincide along the identity bijection when
// the algebra is symmetric. Both sets are reported through bases of the
// corresponding element spaces; the invertibility predicate is shared.
struct SitSo2Report {
    bool separable = false;
    bool symmetric = false;
    std::vector<Vec> psi_space;    // basis of the center
    std::vector<Vec> lambda_space; // intertwiner values at the unit
    bool sets_coincide = false;    // equal spans, hence the identity bijection
    bool strict_psi_empty = false; // nonsymmetric: no Euler data at all
    std::optional<Vec> inner_lambda; // a lambda witness that still exists
    bool strict_inner_discrepancy = false;
};
SitSo2Report sit_equivalence_so2(const AlgebraRef& f);

// --- O(1)-volution on Hom categories of bimodules ----------------------------

// X over (B,A) with O(2) objects on both algebras: X-dagger is the linear
// dual with both actions routed through the involutions,
// (b.phi)(v) = phi(theta_B(b) v) and (phi.a)(v) = phi(v theta_A(a)).
struct HomVolution {
    Bimodule dag;
    Matrix eta_hat; // component X-dagger-dagger -> X (identity in the
                    // skeletal simple form; verified against the axioms)
};
HomVolution hom_dagger(const Bimodule& x, const O2Object& oB, const O2Object& oA);

// d-hat on 2-morphisms: an intertwiner T : X -> Y passes to T^t : Y+ -> X+.
Matrix hom_dagger_mor(const Matrix& t);

// Validates the volution axioms of d-hat/eta-hat on a finite corpus of
// bimodules and sample intertwiners between them.
ValidationReport check_hom_volution(const std::vector<Bimodule>& corpus, const O2Object& oB,
                                    const O2Object& oA);

// Strictification on the Hom category: a fixed point is an invertible
// symmetric intertwiner t : X -> X+ (a nondegenerate pairing on X); the
// strict dagger of f : (X,t) -> (Y,u) is t^{-1} f^t u.
std::optional<Matrix> hom_fixed_point(const Bimodule& x, const O2Object& oB, const O2Object& oA);
Matrix hom_strict_dagger(const Matrix& t_src, const Matrix& t_dst, const Matrix& f);

} // namespace orbicat
