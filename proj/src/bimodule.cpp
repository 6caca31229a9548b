#include "orbicat/bimodule.hpp"

namespace orbicat {

Matrix Bimodule::act_left(const Vec& b) const {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < left_act.size(); ++i)
        if (!b[i].is_zero()) m += b[i] * left_act[i];
    return m;
}

Matrix Bimodule::act_right(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < right_act.size(); ++i)
        if (!a[i].is_zero()) m += a[i] * right_act[i];
    return m;
}

void Bimodule::validate() const {
    const Algebra& bl = left->alg;
    const Algebra& ar = right->alg;
    if (int(left_act.size()) != bl.dim || int(right_act.size()) != ar.dim)
        throw InvalidBimodule("action list lengths do not match the algebra dimensions");
    for (const auto& m : left_act)
        if (m.rows() != dim || m.cols() != dim) throw InvalidBimodule("left action shape");
    for (const auto& m : right_act)
        if (m.rows() != dim || m.cols() != dim) throw InvalidBimodule("right action shape");
    if (!grading.empty() && int(grading.size()) != dim)
        throw InvalidBimodule("grading length");
    if ((bl.has_odd_part() || ar.has_odd_part()) && grading.empty())
        throw InvalidBimodule("graded algebra acting on an ungraded module");

    // left action is a representation
    for (int i = 0; i < bl.dim; ++i)
        for (int j = 0; j < bl.dim; ++j) {
            Matrix expect(dim, dim);
            for (int k = 0; k < bl.dim; ++k)
                if (!bl.sc(i, j, k).is_zero()) expect += bl.sc(i, j, k) * left_act[k];
            if (left_act[i] * left_act[j] != expect)
                throw InvalidBimodule("left action is not a representation at (" + bl.label(i) +
                                      "," + bl.label(j) + ")");
        }
    // right action is an anti-representation: x.(a a') = (x.a).a'
    for (int i = 0; i < ar.dim; ++i)
        for (int j = 0; j < ar.dim; ++j) {
            Matrix expect(dim, dim);
            for (int k = 0; k < ar.dim; ++k)
                if (!ar.sc(i, j, k).is_zero()) expect += ar.sc(i, j, k) * right_act[k];
            if (right_act[j] * right_act[i] != expect)
                throw InvalidBimodule("right action is not an anti-representation at (" +
                                      ar.label(i) + "," + ar.label(j) + ")");
        }
    // actions commute
    for (const auto& l : left_act)
        for (const auto& r : right_act)
            if (l * r != r * l) throw InvalidBimodule("left and right actions do not commute");
    // units act as the identity
    if (act_left(bl.unit) != Matrix::identity(dim) || act_right(ar.unit) != Matrix::identity(dim))
        throw InvalidBimodule("unit does not act as the identity");
    // parity discipline of the action matrices
    if (!grading.empty()) {
        auto check = [&](const Matrix& m, int apar, const char* side) {
            for (int p = 0; p < dim; ++p)
                for (int q = 0; q < dim; ++q)
                    if (!m.at(p, q).is_zero() && (parity(q) + apar) % 2 != parity(p))
                        throw InvalidBimodule(std::string(side) +
                                              " action does not respect parity");
        };
        for (int i = 0; i < bl.dim; ++i) check(left_act[i], bl.parity(i), "left");
        for (int i = 0; i < ar.dim; ++i) check(right_act[i], ar.parity(i), "right");
    }
}

Bimodule make_bimodule(AlgebraRef left, AlgebraRef right, std::vector<Matrix> left_act,
                       std::vector<Matrix> right_act, std::vector<int> grading) {
    Bimodule x;
    x.left = std::move(left);
    x.right = std::move(right);
    x.dim = left_act.empty() ? (right_act.empty() ? 0 : right_act.front().rows())
                             : left_act.front().rows();
    x.left_act = std::move(left_act);
    x.right_act = std::move(right_act);
    x.grading = std::move(grading);
    x.validate();
    return x;
}

Bimodule regular_bimodule(const AlgebraRef& a) {
    std::vector<Matrix> l, r;
    for (int i = 0; i < a->dim(); ++i) {
        l.push_back(a->alg.left_mult_basis(i));
        r.push_back(a->alg.right_mult_basis(i));
    }
    std::vector<int> grading = a->alg.grading;
    return make_bimodule(a, a, std::move(l), std::move(r), std::move(grading));
}

Bimodule dual_bimodule(const Bimodule& x) {
    std::vector<Matrix> l, r;
    for (const auto& m : x.right_act) l.push_back(m.transpose());
    for (const auto& m : x.left_act) r.push_back(m.transpose());
    return make_bimodule(x.right, x.left, std::move(l), std::move(r), x.grading);
}

Bimodule twist_bimodule(const Bimodule& x, const Matrix& phi, const Matrix& psi) {
    if (!is_algebra_automorphism(x.left->alg, phi))
        throw InvalidBimodule("left twist is not an algebra automorphism");
    if (!is_algebra_automorphism(x.right->alg, psi))
        throw InvalidBimodule("right twist is not an algebra automorphism");
    std::vector<Matrix> l(x.left_act.size(), Matrix(x.dim, x.dim));
    std::vector<Matrix> r(x.right_act.size(), Matrix(x.dim, x.dim));
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t t = 0; t < l.size(); ++t)
            if (!phi.at(int(t), int(i)).is_zero())
                l[i] += phi.at(int(t), int(i)) * x.left_act[t];
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t t = 0; t < r.size(); ++t)
            if (!psi.at(int(t), int(i)).is_zero())
                r[i] += psi.at(int(t), int(i)) * x.right_act[t];
    return make_bimodule(x.left, x.right, std::move(l), std::move(r), x.grading);
}

bool is_intertwiner(const Bimodule& x, const Bimodule& y, const Matrix& t) {
    if (t.rows() != y.dim || t.cols() != x.dim) return false;
    for (std::size_t i = 0; i < x.left_act.size(); ++i)
        if (t * x.left_act[i] != y.left_act[i] * t) return false;
    for (std::size_t i = 0; i < x.right_act.size(); ++i)
        if (t * x.right_act[i] != y.right_act[i] * t) return false;
    if (x.graded() || y.graded()) {
        for (int p = 0; p < y.dim; ++p)
            for (int q = 0; q < x.dim; ++q)
                if (!t.at(p, q).is_zero() && y.parity(p) != x.parity(q)) return false;
    }
    return true;
}

std::vector<Matrix> intertwiner_space(const Bimodule& x, const Bimodule& y) {
    if (x.left->alg.dim != y.left->alg.dim || x.right->alg.dim != y.right->alg.dim)
        throw InvalidBimodule("intertwiner space requires the same algebra pair");
    const int rows = y.dim, cols = x.dim, nvar = rows * cols;
    std::vector<Matrix> sys;
    // T L^X_i - L^Y_i T = 0 and T R^X_j - R^Y_j T = 0, in vec_rm coordinates:
    // vec(T L) = (I (x) L^T) vec(T), vec(L' T) = (L' (x) I) vec(T)
    auto block = [&](const Matrix& ax, const Matrix& ay) {
        Matrix m = Matrix::identity(rows).kron(ax.transpose()) - ay.kron(Matrix::identity(cols));
        sys.push_back(std::move(m));
    };
    for (std::size_t i = 0; i < x.left_act.size(); ++i) block(x.left_act[i], y.left_act[i]);
    for (std::size_t i = 0; i < x.right_act.size(); ++i) block(x.right_act[i], y.right_act[i]);
    if (x.graded() || y.graded()) {
        Matrix sel(nvar, nvar);
        for (int p = 0; p < rows; ++p)
            for (int q = 0; q < cols; ++q)
                if (y.parity(p) != x.parity(q)) {
                    int k = p * cols + q;
                    sel.at(k, k) = Scalar::one();
                }
        sys.push_back(std::move(sel));
    }
    std::vector<Matrix> basis;
    for (const auto& v : nullspace_basis(vstack(sys))) basis.push_back(unvec_rm(v, rows, cols));
    return basis;
}

IsoSearch bimodule_iso(const Bimodule& x, const Bimodule& y) {
    if (x.dim != y.dim) return {IsoStatus::None, Matrix()};
    Matrix inv;
    Matrix id = Matrix::identity(x.dim);
    if (is_intertwiner(x, y, id)) return {IsoStatus::Found, id};
    auto basis = intertwiner_space(x, y);
    if (basis.empty()) return {IsoStatus::None, Matrix()};
    for (const auto& t : basis)
        if (t.try_inverse(inv)) return {IsoStatus::Found, t};
    if (basis.size() <= 6) {
        // exhaustive small-integer scan, lexicographic over {-2..2}^k
        std::vector<int> coeff(basis.size(), -2);
        while (true) {
            Matrix t(y.dim, x.dim);
            bool nonzero = false;
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (coeff[b] != 0) {
                    nonzero = true;
                    t += Scalar(coeff[b]) * basis[b];
                }
            if (nonzero && t.try_inverse(inv)) return {IsoStatus::Found, t};
            std::size_t pos = 0;
            while (pos < coeff.size() && coeff[pos] == 2) coeff[pos++] = -2;
            if (pos == coeff.size()) break;
            ++coeff[pos];
        }
        return {IsoStatus::Undetermined, Matrix()};
    }
    // larger spaces: a fixed deterministic sample of integer combinations
    long state = 88172645463325252L;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return int(((state % 7) + 7) % 7) - 3; // in {-3..3}
    };
    for (int trial = 0; trial < 500; ++trial) {
        Matrix t(y.dim, x.dim);
        bool nonzero = false;
        for (const auto& b : basis) {
            int c = next();
            if (c != 0) {
                nonzero = true;
                t += Scalar(c) * b;
            }
        }
        if (nonzero && t.try_inverse(inv)) return {IsoStatus::Found, t};
    }
    return {IsoStatus::Undetermined, Matrix()};
}

RelTensor rel_tensor(const Bimodule& x, const Bimodule& y) {
    if (x.right.get() != y.left.get() && !(x.right->alg.c == y.left->alg.c &&
                                           x.right->counit == y.left->counit))
        throw InvalidBimodule("relative tensor product requires matching middle algebra");
    const FrobeniusAlgebra& b = *x.right;
    if (!check_delta_separable(b))
        throw MiddleNotSeparable("middle algebra is not Delta-separable");

    const int dx = x.dim, dy = y.dim, n = b.dim();
    Matrix e(dx * dy, dx * dy);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Scalar& g = b.gram_inv.at(i, j);
            if (!g.is_zero()) e += g * x.right_act[i].kron(y.left_act[j]);
        }
    auto [Y, Z] = split_idempotent(e);
    const int r = Y.rows();

    RelTensor out;
    out.idem = std::move(e);
    out.project = std::move(Y);
    out.include = std::move(Z);

    Bimodule p;
    p.left = x.left;
    p.right = y.right;
    p.dim = r;
    for (const auto& l : x.left_act)
        p.left_act.push_back(out.project * l.kron(Matrix::identity(dy)) * out.include);
    for (const auto& ra : y.right_act)
        p.right_act.push_back(out.project * Matrix::identity(dx).kron(ra) * out.include);

    if (x.graded() || y.graded()) {
        // each split basis vector is parity-homogeneous because the
        // idempotent preserves parity and elimination never mixes rows of
        // different parity support
        p.grading.resize(r, 0);
        for (int row = 0; row < r; ++row) {
            int par = -1;
            for (int col = 0; col < dx * dy; ++col)
                if (!out.project.at(row, col).is_zero()) {
                    int here = (x.parity(col / dy) + y.parity(col % dy)) % 2;
                    if (par < 0) par = here;
                    if (par != here)
                        throw InvalidBimodule("split basis vector mixes parities");
                }
            p.grading[row] = par < 0 ? 0 : par;
        }
    }
    p.validate();
    out.prod = std::move(p);
    return out;
}

Matrix tensor_map(const RelTensor& src, const RelTensor& dst, const Matrix& f, const Matrix& g) {
    return dst.project * f.kron(g) * src.include;
}

UnitIso right_unit(const Bimodule& x) {
    UnitIso u;
    u.tensor = rel_tensor(x, regular_bimodule(x.right));
    const int dx = x.dim, n = x.right->dim();
    Matrix m0(dx, dx * n); // x (x) a -> x.a
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < dx; ++p)
            for (int q = 0; q < dx; ++q) m0.at(p, q * n + i) = x.right_act[i].at(p, q);
    Matrix i0(dx * n, dx); // x -> x (x) 1
    for (int q = 0; q < dx; ++q)
        for (int i = 0; i < n; ++i) i0.at(q * n + i, q) = x.right->alg.unit[i];
    u.to_x = m0 * u.tensor.include;
    u.from_x = u.tensor.project * i0;
    if (u.to_x * u.from_x != Matrix::identity(dx) ||
        u.from_x * u.to_x != Matrix::identity(u.tensor.prod.dim))
        throw AxiomFailure("right unit isomorphism failed");
    if (!is_intertwiner(u.tensor.prod, x, u.to_x))
        throw AxiomFailure("right unit map is not an intertwiner");
    return u;
}

UnitIso left_unit(const Bimodule& x) {
    UnitIso u;
    u.tensor = rel_tensor(regular_bimodule(x.left), x);
    const int dx = x.dim, n = x.left->dim();
    Matrix m0(dx, n * dx); // a (x) x -> a.x
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < dx; ++p)
            for (int q = 0; q < dx; ++q) m0.at(p, i * dx + q) = x.left_act[i].at(p, q);
    Matrix i0(n * dx, dx); // x -> 1 (x) x
    for (int q = 0; q < dx; ++q)
        for (int i = 0; i < n; ++i) i0.at(i * dx + q, q) = x.left->alg.unit[i];
    u.to_x = m0 * u.tensor.include;
    u.from_x = u.tensor.project * i0;
    if (u.to_x * u.from_x != Matrix::identity(dx) ||
        u.from_x * u.to_x != Matrix::identity(u.tensor.prod.dim))
        throw AxiomFailure("left unit isomorphism failed");
    if (!is_intertwiner(u.tensor.prod, x, u.to_x))
        throw AxiomFailure("left unit map is not an intertwiner");
    return u;
}

Associator associator(const Bimodule& x, const Bimodule& y, const Bimodule& z) {
    Associator a;
    a.xy = rel_tensor(x, y);
    a.yz = rel_tensor(y, z);
    a.left_nest = rel_tensor(a.xy.prod, z);
    a.right_nest = rel_tensor(x, a.yz.prod);
    const Matrix ix = Matrix::identity(x.dim);
    const Matrix iz = Matrix::identity(z.dim);
    a.fwd = a.right_nest.project * ix.kron(a.yz.project) * a.xy.include.kron(iz) *
            a.left_nest.include;
    a.bwd = a.left_nest.project * a.xy.project.kron(iz) * ix.kron(a.yz.include) *
            a.right_nest.include;
    if (a.fwd * a.bwd != Matrix::identity(a.right_nest.prod.dim) ||
        a.bwd * a.fwd != Matrix::identity(a.left_nest.prod.dim))
        throw AxiomFailure("associator is not invertible");
    if (!is_intertwiner(a.left_nest.prod, a.right_nest.prod, a.fwd))
        throw AxiomFailure("associator is not an intertwiner");
    return a;
}

StarAdjoint star_adjoint(const Bimodule& x) {
    const FrobeniusAlgebra& b = *x.left;
    if (!check_delta_separable(b) || !check_delta_separable(*x.right))
        throw MiddleNotSeparable("star adjoint requires Delta-separable algebras on both sides");

    StarAdjoint s;
    s.star = twist_bimodule(dual_bimodule(x), Matrix::identity(x.right->dim()), dual_twist(b));

    s.x_star = rel_tensor(x, s.star);
    s.star_x = rel_tensor(s.star, x);

    const int dx = x.dim, nb = b.dim(), na = x.right->dim();

    // ev(x_p (x) x_q^*) = sum_{kj} g^{kj} phi(b_j x_p) b_k
    Matrix e0(nb, dx * dx);
    for (int k = 0; k < nb; ++k)
        for (int j = 0; j < nb; ++j) {
            const Scalar& g = b.gram_inv.at(k, j);
            if (g.is_zero()) continue;
            for (int p = 0; p < dx; ++p)
                for (int q = 0; q < dx; ++q) e0.at(k, p * dx + q) += g * x.left_act[j].at(q, p);
        }
    // well-definedness on the quotient
    if (e0 * s.x_star.idem != e0) throw AxiomFailure("evaluation is not balanced");
    s.ev = e0 * s.x_star.include;

    // coev(a) = sum_p x_p^* (x) x_p.a
    Matrix c0(dx * dx, na);
    for (int m = 0; m < na; ++m)
        for (int q = 0; q < dx; ++q)
            for (int t = 0; t < dx; ++t) c0.at(q * dx + t, m) = x.right_act[m].at(t, q);
    s.coev = s.star_x.project * c0;

    Bimodule breg = regular_bimodule(x.left);
    Bimodule areg = regular_bimodule(x.right);
    if (!is_intertwiner(s.x_star.prod, breg, s.ev))
        throw AxiomFailure("evaluation is not an intertwiner");
    if (!is_intertwiner(areg, s.star_x.prod, s.coev))
        throw AxiomFailure("coevaluation is not an intertwiner");

    // Zorro for X: X -> X(x)A -> X(x)(X^*(x)X) -> (X(x)X^*)(x)X -> B(x)X -> X
    {
        UnitIso ru = right_unit(x);
        RelTensor t_x_sx = rel_tensor(x, s.star_x.prod);
        Matrix m1 = tensor_map(ru.tensor, t_x_sx, Matrix::identity(dx), s.coev);
        Associator as = associator(x, s.star, x);
        RelTensor t_b_x = rel_tensor(breg, x);
        Matrix m3 = tensor_map(as.left_nest, t_b_x, s.ev, Matrix::identity(dx));
        UnitIso lu = left_unit(x);
        // the nests computed inside `as` coincide with t_x_sx / our tensors
        Matrix composite = lu.to_x * m3 * as.bwd * m1 * ru.from_x;
        if (composite != Matrix::identity(dx))
            throw AxiomFailure("Zorro identity for X failed");
    }
    // Zorro for X^*: X^* -> A(x)X^* -> (X^*(x)X)(x)X^* -> X^*(x)(X(x)X^*)
    //               -> X^*(x)B -> X^*
    {
        UnitIso lu = left_unit(s.star);
        RelTensor t_sx_s = rel_tensor(s.star_x.prod, s.star);
        Matrix m1 = tensor_map(lu.tensor, t_sx_s, s.coev, Matrix::identity(dx));
        Associator as = associator(s.star, x, s.star);
        RelTensor t_s_b = rel_tensor(s.star, breg);
        Matrix m3 = tensor_map(as.right_nest, t_s_b, Matrix::identity(dx), s.ev);
        UnitIso ru = right_unit(s.star);
        Matrix composite = ru.to_x * m3 * as.fwd * m1 * lu.from_x;
        if (composite != Matrix::identity(dx))
            throw AxiomFailure("Zorro identity for X^* failed");
    }
    return s;
}

} // namespace orbicat
