#pragma once

// Bimodules over Frobenius algebras, relative tensor products via splitting
// the separability idempotent, duals and Nakayama-twisted adjoints with
// exact Zorro verification, and intertwiner-space solving.
//
// Conventions: a bimodule X over (B, A) carries a left B- and a right
// A-action. Tensor coordinates are row-major: x_p (x) y_q sits at p*dim(Y)+q.
// The linear dual X^v of X over (B, A) is the (A, B)-bimodule with
// (a.phi)(x) = phi(x a) and (phi.b)(x) = phi(b x); the adjoint X^* twists
// the right action of the dual by the dual-side Nakayama automorphism of B.

#include <memory>
#include <optional>

#include "orbicat/frobenius.hpp"

namespace orbicat {

using AlgebraRef = std::shared_ptr<const FrobeniusAlgebra>;

struct Bimodule {
    AlgebraRef left, right;
    int dim = 0;
    std::vector<Matrix> left_act;  // one action matrix per left-algebra basis element
    std::vector<Matrix> right_act; // one per right-algebra basis element
    std::vector<int> grading;      // empty = ungraded

    bool graded() const { return !grading.empty(); }
    int parity(int p) const { return grading.empty() ? 0 : grading[p]; }

    Matrix act_left(const Vec& b) const;
    Matrix act_right(const Vec& a) const;

    // representation / anti-representation / commutation / unit / parity
    void validate() const;
};

Bimodule make_bimodule(AlgebraRef left, AlgebraRef right, std::vector<Matrix> left_act,
                       std::vector<Matrix> right_act, std::vector<int> grading = {});

// A as an (A,A)-bimodule.
Bimodule regular_bimodule(const AlgebraRef& a);

// Linear dual, over the swapped algebra pair.
Bimodule dual_bimodule(const Bimodule& x);

// Precomposes the actions with algebra automorphisms of the left/right
// algebras (either may be the identity matrix).
Bimodule twist_bimodule(const Bimodule& x, const Matrix& phi, const Matrix& psi);

struct Intertwiner {
    Bimodule src, dst;
    Matrix mat;
};

// Basis of the space of (even) intertwiners X -> Y; deterministic order.
std::vector<Matrix> intertwiner_space(const Bimodule& x, const Bimodule& y);

bool is_intertwiner(const Bimodule& x, const Bimodule& y, const Matrix& t);

enum class IsoStatus { Found, None, Undetermined };
struct IsoSearch {
    IsoStatus status = IsoStatus::None;
    Matrix witness; // invertible intertwiner when status == Found
};

// Searches for an invertible intertwiner by scanning integer coefficient
// combinations in {-2..2} over the intertwiner-space basis (documented
// bound); reports Undetermined when the scan is exhausted or too large.
IsoSearch bimodule_iso(const Bimodule& x, const Bimodule& y);

// X over (C,B) and Y over (B,A) compose to X (x)_B Y over (C,A), as the
// image of the separability idempotent e_{X,B,Y}. Throws MiddleNotSeparable.
struct RelTensor {
    Bimodule prod;
    Matrix idem;    // e_{X,B,Y} on X (x) Y
    Matrix project; // X (x) Y coords -> prod coords (the Y of the splitting)
    Matrix include; // prod coords -> X (x) Y coords (the Z of the splitting)
};
RelTensor rel_tensor(const Bimodule& x, const Bimodule& y);

// The induced map X (x)_B Y -> X' (x)_B Y' of intertwiners f: X -> X',
// g: Y -> Y'.
Matrix tensor_map(const RelTensor& src, const RelTensor& dst, const Matrix& f, const Matrix& g);

// Unit isomorphisms X (x)_A A = X and B (x)_B X = X, constructed and
// verified invertible intertwiners.
struct UnitIso {
    RelTensor tensor;
    Matrix to_x, from_x;
};
UnitIso right_unit(const Bimodule& x);
UnitIso left_unit(const Bimodule& x);

// The associator (X (x) Y) (x) Z -> X (x) (Y (x) Z), verified invertible.
struct Associator {
    RelTensor xy, yz;     // inner products
    RelTensor left_nest;  // (X (x) Y) (x) Z
    RelTensor right_nest; // X (x) (Y (x) Z)
    Matrix fwd, bwd;
};
Associator associator(const Bimodule& x, const Bimodule& y, const Bimodule& z);

// Right adjoint X^* of X over (B,A) together with evaluation/coevaluation;
// both Zorro identities are verified exactly during construction.
struct StarAdjoint {
    Bimodule star;     // over (A,B)
    RelTensor x_star;  // X (x)_A X^*, a (B,B)-bimodule
    RelTensor star_x;  // X^* (x)_B X, an (A,A)-bimodule
    Matrix ev;         // X (x)_A X^* -> B
    Matrix coev;       // A -> X^* (x)_B X
};
StarAdjoint star_adjoint(const Bimodule& x);

} // namespace orbicat
