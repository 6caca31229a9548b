#include "orbicat/frobenius.hpp"

#include <algorithm>

namespace orbicat {

bool Algebra::has_odd_part() const {
    return std::any_of(grading.begin(), grading.end(), [](int p) { return p == 1; });
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (int k = 0; k < dim; ++k)
                if (!sc(i, j, k).is_zero()) out[k] += ab * sc(i, j, k);
        }
    }
    return out;
}

Matrix Algebra::left_mult(const Vec& a) const {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!sc(i, j, k).is_zero()) m.at(k, j) += a[i] * sc(i, j, k);
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k)
                if (!sc(i, j, k).is_zero()) m.at(k, i) += a[j] * sc(i, j, k);
    }
    return m;
}

Matrix Algebra::left_mult_basis(int i) const { return left_mult(basis_vec(i)); }
Matrix Algebra::right_mult_basis(int i) const { return right_mult(basis_vec(i)); }

Vec Algebra::basis_vec(int i) const {
    Vec v(dim);
    v[i] = Scalar::one();
    return v;
}

std::string Algebra::label(int i) const {
    if (i < int(labels.size())) return labels[i];
    return "e" + std::to_string(i);
}

void Algebra::validate() const {
    if (dim <= 0) throw InvalidAlgebra("dimension must be positive");
    if (int(unit.size()) != dim) throw InvalidAlgebra("unit vector has wrong length");
    if (!grading.empty() && int(grading.size()) != dim)
        throw InvalidAlgebra("grading has wrong length");

    if (graded()) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    if (!sc(i, j, k).is_zero() && (parity(i) + parity(j)) % 2 != parity(k))
                        throw InvalidAlgebra("multiplication does not respect parity at (" +
                                             label(i) + "," + label(j) + "," + label(k) + ")");
        for (int i = 0; i < dim; ++i)
            if (parity(i) == 1 && !unit[i].is_zero()) throw InvalidAlgebra("unit is not even");
    }

    // two-sided unit
    for (int i = 0; i < dim; ++i) {
        Vec e = basis_vec(i);
        if (mul(unit, e) != e || mul(e, unit) != e)
            throw InvalidAlgebra("unit fails on basis element " + label(i));
    }
    // associativity on all basis triples
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec ij = mul(basis_vec(i), basis_vec(j));
            for (int k = 0; k < dim; ++k) {
                Vec l = mul(ij, basis_vec(k));
                Vec r = mul(basis_vec(i), mul(basis_vec(j), basis_vec(k)));
                if (l != r)
                    throw InvalidAlgebra("associativity fails at (" + label(i) + "," + label(j) +
                                         "," + label(k) + ")");
            }
        }
}

Scalar FrobeniusAlgebra::eps(const Vec& v) const {
    Scalar out;
    for (int i = 0; i < dim(); ++i)
        if (!v[i].is_zero()) out += v[i] * counit[i];
    return out;
}

FrobeniusAlgebra build_frobenius(Algebra a, Vec counit,
                                 const std::vector<Matrix>* supplied_comult) {
    a.validate();
    const int n = a.dim;
    if (int(counit.size()) != n) throw InvalidAlgebra("counit vector has wrong length");
    if (a.graded())
        for (int i = 0; i < n; ++i)
            if (a.parity(i) == 1 && !counit[i].is_zero())
                throw InvalidAlgebra("counit must vanish on odd basis elements");

    FrobeniusAlgebra f;
    f.alg = std::move(a);
    f.counit = std::move(counit);

    f.gram = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar g;
            for (int k = 0; k < n; ++k)
                if (!f.alg.sc(i, j, k).is_zero()) g += f.alg.sc(i, j, k) * f.counit[k];
            f.gram.at(i, j) = g;
        }
    if (!f.gram.try_inverse(f.gram_inv))
        throw DegeneratePairing("the pairing eps(e_i e_j) is degenerate");

    // Delta(e_k) = sum_{s,t} g^{st} (e_k e_s) (x) e_t
    f.comult.resize(n);
    for (int k = 0; k < n; ++k) {
        Matrix d(n, n);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                const Scalar& gst = f.gram_inv.at(s, t);
                if (gst.is_zero()) continue;
                for (int i = 0; i < n; ++i)
                    if (!f.alg.sc(k, s, i).is_zero()) d.at(i, t) += gst * f.alg.sc(k, s, i);
            }
        f.comult[k] = std::move(d);
    }

    if (supplied_comult) {
        if (int(supplied_comult->size()) != n)
            throw AxiomFailure("supplied comultiplication has wrong arity");
        for (int k = 0; k < n; ++k)
            if ((*supplied_comult)[k] != f.comult[k])
                throw AxiomFailure("supplied comultiplication disagrees with the one derived "
                                   "from the counit at basis element " +
                                   f.alg.label(k));
    }

    // counitality: (eps (x) id) Delta = id = (id (x) eps) Delta
    for (int k = 0; k < n; ++k) {
        Vec l(n), r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Scalar& d = f.comult[k].at(i, j);
                if (d.is_zero()) continue;
                l[j] += d * f.counit[i];
                r[i] += d * f.counit[j];
            }
        if (l != f.alg.basis_vec(k) || r != f.alg.basis_vec(k))
            throw AxiomFailure("counitality fails at basis element " + f.alg.label(k));
    }

    // Frobenius identity on all basis pairs, as maps A(x)A -> A(x)A:
    //   (id (x) mu)(Delta (x) id) = Delta . mu = (mu (x) id)(id (x) Delta)
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            Matrix mid(n, n); // Delta(e_p e_q)
            Vec pq = f.alg.mul(f.alg.basis_vec(p), f.alg.basis_vec(q));
            for (int k = 0; k < n; ++k)
                if (!pq[k].is_zero()) mid += pq[k] * f.comult[k];

            Matrix lhs(n, n); // (id (x) mu)(Delta(e_p) (x) e_q)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Scalar& d = f.comult[p].at(i, j);
                    if (d.is_zero()) continue;
                    for (int k = 0; k < n; ++k)
                        if (!f.alg.sc(j, q, k).is_zero())
                            lhs.at(i, k) += d * f.alg.sc(j, q, k);
                }

            Matrix rhs(n, n); // (mu (x) id)(e_p (x) Delta(e_q))
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Scalar& d = f.comult[q].at(i, j);
                    if (d.is_zero()) continue;
                    for (int k = 0; k < n; ++k)
                        if (!f.alg.sc(p, i, k).is_zero())
                            rhs.at(k, j) += d * f.alg.sc(p, i, k);
                }

            if (lhs != mid || rhs != mid)
                throw AxiomFailure("Frobenius identity fails at pair (" + f.alg.label(p) + "," +
                                   f.alg.label(q) + ")");
        }

    return f;
}

bool check_delta_separable(const FrobeniusAlgebra& f) {
    const int n = f.dim();
    for (int k = 0; k < n; ++k) {
        Vec out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Scalar& d = f.comult[k].at(i, j);
                if (d.is_zero()) continue;
                for (int s = 0; s < n; ++s)
                    if (!f.alg.sc(i, j, s).is_zero()) out[s] += d * f.alg.sc(i, j, s);
            }
        if (out != f.alg.basis_vec(k)) return false;
    }
    return true;
}

namespace {

// Solves nu^T g = s where s_ij = sign(i,j) g_ji, then checks nu is a unital
// algebra automorphism.
Matrix solve_nakayama(const FrobeniusAlgebra& f, bool koszul_sign) {
    const int n = f.dim();
    Matrix rhs(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar v = f.gram.at(j, i);
            if (koszul_sign && f.alg.parity(i) == 1 && f.alg.parity(j) == 1) v = -v;
            rhs.at(i, j) = v;
        }
    // nu^T = rhs g^{-1}
    Matrix nu = (rhs * f.gram_inv).transpose();

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // eps(nu(e_i) e_j) == sign * eps(e_j e_i), re-checked directly
            Scalar lhs;
            for (int k = 0; k < n; ++k)
                if (!nu.at(k, i).is_zero()) lhs += nu.at(k, i) * f.gram.at(k, j);
            if (lhs != rhs.at(i, j)) throw AxiomFailure("Nakayama system inconsistent");
        }

    // automorphism checks
    Vec one = f.alg.unit;
    if (nu.apply(one) != one) throw AxiomFailure("Nakayama map does not fix the unit");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = nu.apply(f.alg.mul(f.alg.basis_vec(i), f.alg.basis_vec(j)));
            Vec rhs2 = f.alg.mul(nu.apply(f.alg.basis_vec(i)), nu.apply(f.alg.basis_vec(j)));
            if (lhs != rhs2)
                throw AxiomFailure("Nakayama map is not multiplicative at (" + f.alg.label(i) +
                                   "," + f.alg.label(j) + ")");
        }
    Matrix inv;
    if (!nu.try_inverse(inv)) throw AxiomFailure("Nakayama map is not invertible");
    return nu;
}

} // namespace

Matrix nakayama_automorphism(const FrobeniusAlgebra& f) {
    return solve_nakayama(f, /*koszul_sign=*/f.graded());
}

Matrix dual_twist(const FrobeniusAlgebra& f) { return solve_nakayama(f, /*koszul_sign=*/false); }

bool is_symmetric(const FrobeniusAlgebra& f) {
    return nakayama_automorphism(f).is_identity();
}

SpinWitness is_r_spin(const FrobeniusAlgebra& f, int r, SpinMode mode) {
    if (r < 1) throw Error("r must be positive");
    const int n = f.dim();
    Matrix nu = nakayama_automorphism(f);
    Matrix nur = Matrix::identity(n);
    for (int k = 0; k < r; ++k) nur = nu * nur;

    if (mode == SpinMode::Strict) return {nur.is_identity(), std::nullopt};

    // inner: find invertible u with nu^r(a) u = u a for all a
    std::vector<Matrix> rows;
    for (int i = 0; i < n; ++i) {
        Vec nei = nur.apply(f.alg.basis_vec(i));
        rows.push_back(f.alg.left_mult(nei) - f.alg.right_mult_basis(i));
    }
    if (f.graded()) {
        // restrict to even witnesses
        Matrix sel(n, n);
        for (int i = 0; i < n; ++i)
            if (f.alg.parity(i) == 1) sel.at(i, i) = Scalar::one();
        rows.push_back(sel);
    }
    auto kernel = nullspace_basis(vstack(rows));
    // deterministic scan for an invertible element of the kernel
    if (kernel.empty()) return {false, std::nullopt};
    for (const auto& v : kernel)
        if (is_invertible_element(f.alg, v)) return {true, v};
    if (kernel.size() <= 6) {
        std::vector<int> coeff(kernel.size(), -2);
        while (true) {
            Vec u(n);
            bool nonzero = false;
            for (std::size_t b = 0; b < kernel.size(); ++b) {
                if (coeff[b] == 0) continue;
                nonzero = true;
                for (int i = 0; i < n; ++i) u[i] += Scalar(coeff[b]) * kernel[b][i];
            }
            if (nonzero && is_invertible_element(f.alg, u)) return {true, u};
            std::size_t pos = 0;
            while (pos < coeff.size() && coeff[pos] == 2) coeff[pos++] = -2;
            if (pos == coeff.size()) break;
            ++coeff[pos];
        }
    }
    return {false, std::nullopt};
}

FrobeniusAlgebra opposite_algebra(const FrobeniusAlgebra& f) {
    Algebra op = f.alg;
    const int n = op.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar v = f.alg.sc(j, i, k);
                if (f.alg.parity(i) == 1 && f.alg.parity(j) == 1) v = -v;
                op.sc(i, j, k) = v;
            }
    return build_frobenius(std::move(op), f.counit);
}

std::vector<Vec> center_basis(const FrobeniusAlgebra& f) {
    const int n = f.dim();
    std::vector<Matrix> rows;
    for (int i = 0; i < n; ++i)
        rows.push_back(f.alg.left_mult_basis(i) - f.alg.right_mult_basis(i));
    if (f.graded()) {
        Matrix sel(n, n);
        for (int i = 0; i < n; ++i)
            if (f.alg.parity(i) == 1) sel.at(i, i) = Scalar::one();
        rows.push_back(sel);
    }
    return nullspace_basis(vstack(rows));
}

bool is_invertible_element(const Algebra& a, const Vec& u) {
    Matrix inv;
    return a.left_mult(u).try_inverse(inv);
}

bool is_central_element(const Algebra& a, const Vec& u) {
    return a.left_mult(u) == a.right_mult(u);
}

bool is_algebra_automorphism(const Algebra& a, const Matrix& phi) {
    if (phi.rows() != a.dim || phi.cols() != a.dim) return false;
    Matrix inv;
    if (!phi.try_inverse(inv)) return false;
    if (phi.apply(a.unit) != a.unit) return false;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = phi.apply(a.mul(a.basis_vec(i), a.basis_vec(j)));
            Vec rhs = a.mul(phi.apply(a.basis_vec(i)), phi.apply(a.basis_vec(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_algebra_antiautomorphism(const Algebra& a, const Matrix& phi, std::string* witness) {
    if (phi.rows() != a.dim || phi.cols() != a.dim) return false;
    Matrix inv;
    if (!phi.try_inverse(inv)) {
        if (witness) *witness = "map is not invertible";
        return false;
    }
    if (phi.apply(a.unit) != a.unit) {
        if (witness) *witness = "map does not fix the unit";
        return false;
    }
    auto is_zero_vec = [](const Vec& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    };
    // witness preference: the first failing pair where both sides are
    // nonzero (a genuine noncommutation), else the first failing pair
    std::string fallback;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec lhs = phi.apply(a.mul(a.basis_vec(i), a.basis_vec(j)));
            Vec rhs = a.mul(phi.apply(a.basis_vec(j)), phi.apply(a.basis_vec(i)));
            if (a.parity(i) == 1 && a.parity(j) == 1)
                for (auto& x : rhs) x = -x;
            if (lhs == rhs) continue;
            std::string pair = "(" + a.label(i) + "," + a.label(j) + ")";
            if (!is_zero_vec(lhs) && !is_zero_vec(rhs)) {
                if (witness) *witness = pair;
                return false;
            }
            if (fallback.empty()) fallback = pair;
        }
    if (fallback.empty()) return true;
    if (witness) *witness = fallback;
    return false;
}

// --- standard examples -----------------------------------------------------

Algebra ground_field_algebra() {
    Algebra a;
    a.dim = 1;
    a.labels = {"1"};
    a.c.assign(1, Scalar::one());
    a.unit = {Scalar::one()};
    return a;
}

Algebra group_algebra_zn(int n) {
    Algebra a;
    a.dim = n;
    a.c.assign(std::size_t(n) * n * n, Scalar());
    for (int i = 0; i < n; ++i) {
        a.labels.push_back("g" + std::to_string(i));
        for (int j = 0; j < n; ++j) a.sc(i, j, (i + j) % n) = Scalar::one();
    }
    a.unit.assign(n, Scalar());
    a.unit[0] = Scalar::one();
    return a;
}

Algebra matrix_algebra(int n) {
    Algebra a;
    a.dim = n * n;
    a.c.assign(std::size_t(a.dim) * a.dim * a.dim, Scalar());
    auto idx = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            a.labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
            for (int r2 = 0; r2 < n; ++r2)
                for (int c2 = 0; c2 < n; ++c2)
                    if (c == r2) a.sc(idx(r, c), idx(r2, c2), idx(r, c2)) = Scalar::one();
        }
    a.unit.assign(a.dim, Scalar());
    for (int r = 0; r < n; ++r) a.unit[idx(r, r)] = Scalar::one();
    return a;
}

Algebra product_of_fields(int k) {
    Algebra a;
    a.dim = k;
    a.c.assign(std::size_t(k) * k * k, Scalar());
    for (int i = 0; i < k; ++i) {
        a.labels.push_back("p" + std::to_string(i + 1));
        a.sc(i, i, i) = Scalar::one();
    }
    a.unit.assign(k, Scalar::one());
    return a;
}

Algebra clifford1() {
    Algebra a;
    a.dim = 2;
    a.labels = {"1", "x"};
    a.c.assign(8, Scalar());
    a.sc(0, 0, 0) = Scalar::one();
    a.sc(0, 1, 1) = Scalar::one();
    a.sc(1, 0, 1) = Scalar::one();
    a.sc(1, 1, 0) = Scalar::one(); // x^2 = 1
    a.unit = {Scalar::one(), Scalar()};
    a.grading = {0, 1};
    return a;
}

Algebra clifford2() {
    Algebra a;
    a.dim = 4;
    a.labels = {"1", "x", "y", "xy"};
    a.c.assign(64, Scalar());
    auto set = [&a](int i, int j, int k, long v) { a.sc(i, j, k) = Scalar(v); };
    // 1 is the unit
    for (int i = 0; i < 4; ++i) {
        set(0, i, i, 1);
        if (i) set(i, 0, i, 1);
    }
    set(1, 1, 0, 1);  // x x = 1
    set(2, 2, 0, 1);  // y y = 1
    set(1, 2, 3, 1);  // x y = xy
    set(2, 1, 3, -1); // y x = -xy
    set(1, 3, 2, 1);  // x(xy) = y
    set(3, 1, 2, -1); // (xy)x = -y
    set(2, 3, 1, -1); // y(xy) = -x
    set(3, 2, 1, 1);  // (xy)y = x
    set(3, 3, 0, -1); // (xy)(xy) = -1
    a.unit = {Scalar::one(), Scalar(), Scalar(), Scalar()};
    a.grading = {0, 1, 1, 0};
    return a;
}

Vec trace_counit(int n, const Scalar& scale) {
    Vec eps(std::size_t(n) * n);
    for (int r = 0; r < n; ++r) eps[std::size_t(r) * n + r] = scale;
    return eps;
}

Vec trace_u_counit(int n, const std::vector<Scalar>& u_diag) {
    // eps(E_rc) = tr(u E_rc) = u_cc [r = c] for diagonal u
    Vec eps(std::size_t(n) * n);
    for (int r = 0; r < n; ++r) eps[std::size_t(r) * n + r] = u_diag[r];
    return eps;
}

Vec group_counit(int n, const Scalar& scale) {
    Vec eps(n);
    eps[0] = scale;
    return eps;
}

} // namespace orbicat
