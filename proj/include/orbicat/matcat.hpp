#pragma once

// The skeletal matrix-valued category over the session field: objects are
// nonnegative integers, morphisms n -> m are m x n matrices, composition is
// the matrix product. Its two standard volutions (transpose over Q,
// conjugate-transpose over Q(i)) have identity unit components, so fixed
// points are nondegenerate (hermitian) forms and strictification produces
// the category of hermitian spaces with the form-adjoint dagger.
//
// Objects of derived categories are carried implicitly: this header exposes
// membership tests, finite sample generators and the dagger formulas; the
// exhaustive constructions live in category.hpp for finite backends.

#include <vector>

#include "orbicat/category.hpp"

namespace orbicat {

enum class MatVolutionKind { Transpose, ConjTranspose };

Matrix mat_d(MatVolutionKind k, const Matrix& m);

// Checks contravariance, strict involutivity and the (trivial) unit
// coherence on a deterministic sample of matrices up to max_dim.
ValidationReport check_mat_volution(MatVolutionKind k, int max_dim);

// --- strictification: hermitian objects -------------------------------------

// fixed point data (n, theta): invertible with d(theta) = theta
bool is_mat_fixed_point(MatVolutionKind k, const Matrix& theta);

// the documented finite sample: diagonal matrices with entries +-1
std::vector<Matrix> mat_theta_samples(int dim);

struct HermObject {
    int dim = 0;
    Matrix form; // invertible, d(form) = form
};

// form-adjoint of x : a -> b, i.e. theta_a^{-1} . d(x) . theta_b
Matrix herm_dagger(MatVolutionKind k, const HermObject& a, const HermObject& b, const Matrix& x);

// Positivity of a self-adjoint automorphism f of the hermitian object a:
// witnessed by the object carrying the form theta_a f together with g = id,
// since f = dagger(g) . g against that target. Undecided (and reported so)
// when f is not self-adjoint for the form.
struct HermPositivity {
    bool decided = false;
    bool positive = false;
    HermObject target;
    Matrix g;
};
HermPositivity herm_positivity(MatVolutionKind k, const HermObject& a, const Matrix& f);

// --- idempotent completion over the matrix backend --------------------------

struct MatIdeObject {
    int dim = 0;
    Matrix e; // idempotent
};

bool mat_ide_hom_contains(const MatIdeObject& a, const MatIdeObject& b, const Matrix& x);
int mat_ide_hom_dim(const MatIdeObject& a, const MatIdeObject& b); // = rank(e) rank(f)
// the same dimension computed independently as the rank of X -> f X e
int mat_ide_hom_dim_by_kernel(const MatIdeObject& a, const MatIdeObject& b);

// inverse of x as a morphism (n,e) -> (m,f) in the completion, when it exists
std::optional<Matrix> mat_ide_inverse(const MatIdeObject& a, const MatIdeObject& b,
                                      const Matrix& x);

// --- SIT objects over the matrix backend -------------------------------------

// object of (S . I . T)(Mat, d): an idempotent e together with
// theta : (n,e) -> (n,d(e)) invertible in the completion and d(theta) = theta
struct MatSitObject {
    int dim = 0;
    Matrix e;
    Matrix theta;
};

bool mat_sit_object_valid(MatVolutionKind k, const MatSitObject& o);

// dagger of x : o1 -> o2, i.e. theta_1^{-} . d(x) . theta_2 with the
// completion-level inverse of theta_1
Matrix mat_sit_dagger(MatVolutionKind k, const MatSitObject& o1, const MatSitObject& o2,
                      const Matrix& x);

// deterministic sample of matrices for naturality checks
std::vector<Matrix> mat_morphism_samples(int rows, int cols);

} // namespace orbicat
