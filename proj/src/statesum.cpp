#include "orbicat/statesum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbicat {

namespace {

struct SlotRef {
    int tri = -1, pos = -1;
};

std::map<int, SlotRef> slot_table(const CombSurface& s) {
    std::map<int, SlotRef> slots;
    for (int t = 0; t < int(s.triangles.size()); ++t)
        for (int k = 0; k < 3; ++k) {
            int id = s.triangles[t].e[k];
            if (slots.count(id)) throw NotClosed("edge id " + std::to_string(id) + " reused");
            slots[id] = {t, k};
        }
    return slots;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (int i = 0; i < int(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

} // namespace

void CombSurface::validate() const {
    auto slots = slot_table(*this);
    std::map<int, int> glued; // edge id -> gluing index
    for (int g = 0; g < int(gluings.size()); ++g) {
        const auto& gl = gluings[g];
        if (gl.sign != 1 && gl.sign != -1) throw NotClosed("gluing sign must be +1 or -1");
        if (gl.a == gl.b) throw NotClosed("gluing pairs an edge with itself");
        for (int id : {gl.a, gl.b}) {
            if (!slots.count(id))
                throw NotClosed("gluing references unknown edge " + std::to_string(id));
            if (glued.count(id))
                throw NotClosed("edge " + std::to_string(id) + " glued more than once");
            glued[id] = g;
        }
    }
    for (const auto& [id, ref] : slots) {
        (void)ref;
        if (!glued.count(id))
            throw NotClosed("edge " + std::to_string(id) + " is a free boundary edge");
    }
}

int CombSurface::vertex_count() const {
    auto slots = slot_table(*this);
    UnionFind uf(int(triangles.size()) * 3);
    auto corner = [](const SlotRef& s, bool end) {
        return s.tri * 3 + (end ? (s.pos + 1) % 3 : s.pos);
    };
    for (const auto& gl : gluings) {
        SlotRef a = slots.at(gl.a), b = slots.at(gl.b);
        if (gl.sign > 0) {
            uf.unite(corner(a, false), corner(b, true));
            uf.unite(corner(a, true), corner(b, false));
        } else {
            uf.unite(corner(a, false), corner(b, false));
            uf.unite(corner(a, true), corner(b, true));
        }
    }
    return uf.classes();
}

int CombSurface::euler_characteristic() const {
    return vertex_count() - int(gluings.size()) + int(triangles.size());
}

std::optional<std::vector<int>> CombSurface::orientation() const {
    auto slots = slot_table(*this);
    const int n = int(triangles.size());
    std::vector<int> sigma(n, 0); // 0 unassigned, else +-1
    for (int start = 0; start < n; ++start) {
        if (sigma[start]) continue;
        sigma[start] = 1;
        std::vector<int> queue = {start};
        while (!queue.empty()) {
            int t = queue.back();
            queue.pop_back();
            for (const auto& gl : gluings) {
                int ta = slots.at(gl.a).tri, tb = slots.at(gl.b).tri;
                if (ta != t && tb != t) continue;
                if (ta == tb) {
                    if (gl.sign < 0) return std::nullopt; // reversing self-gluing
                    continue;
                }
                int other = ta == t ? tb : ta;
                int need = gl.sign * sigma[t];
                if (sigma[other] == 0) {
                    sigma[other] = need;
                    queue.push_back(other);
                } else if (sigma[other] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    return sigma;
}

CombSurface CombSurface::disjoint_union(const CombSurface& x, const CombSurface& y) {
    int shift = 0;
    for (const auto& t : x.triangles) shift = std::max({shift, t.e[0], t.e[1], t.e[2]});
    ++shift;
    CombSurface out = x;
    for (const auto& t : y.triangles)
        out.triangles.push_back({{t.e[0] + shift, t.e[1] + shift, t.e[2] + shift}});
    for (const auto& g : y.gluings) out.gluings.push_back({g.a + shift, g.b + shift, g.sign});
    return out;
}

CombSurface flip_triangle(const CombSurface& s, int t) {
    CombSurface out = s;
    std::swap(out.triangles[t].e[1], out.triangles[t].e[2]);
    auto slots = slot_table(s);
    for (auto& gl : out.gluings) {
        bool touches_a = slots.at(gl.a).tri == t;
        bool touches_b = slots.at(gl.b).tri == t;
        if (touches_a != touches_b) gl.sign = -gl.sign; // self-gluings stay put
    }
    return out;
}

CombSurface pachner_22(const CombSurface& s, int gluing_index) {
    s.validate();
    const auto gl = s.gluings.at(gluing_index);
    if (gl.sign != 1) throw Error("pachner_22 requires a +1 gluing");
    auto slots = slot_table(s);
    SlotRef sa = slots.at(gl.a), sb = slots.at(gl.b);
    if (sa.tri == sb.tri) throw Error("pachner_22 requires distinct triangles");

    auto rotate_front = [&s](const SlotRef& r) {
        const auto& e = s.triangles[r.tri].e;
        return std::array<int, 3>{e[r.pos], e[(r.pos + 1) % 3], e[(r.pos + 2) % 3]};
    };
    auto [a, m, n] = rotate_front(sa);
    auto [b, u, v] = rotate_front(sb);
    (void)a;
    (void)b;

    int fresh = 0;
    for (const auto& t : s.triangles) fresh = std::max({fresh, t.e[0], t.e[1], t.e[2]});
    int d1 = fresh + 1, d2 = fresh + 2;

    CombSurface out = s;
    out.triangles[sa.tri] = {{n, u, d2}};
    out.triangles[sb.tri] = {{v, m, d1}};
    out.gluings.erase(out.gluings.begin() + gluing_index);
    out.gluings.push_back({d1, d2, 1});
    out.validate();
    return out;
}

CombSurface pachner_13(const CombSurface& s, int triangle_index) {
    s.validate();
    const auto tri = s.triangles.at(triangle_index);
    int fresh = 0;
    for (const auto& t : s.triangles) fresh = std::max({fresh, t.e[0], t.e[1], t.e[2]});
    int p = fresh + 1, pr = fresh + 2, q = fresh + 3, qr = fresh + 4, r = fresh + 5,
        rr = fresh + 6;

    CombSurface out = s;
    out.triangles[triangle_index] = {{tri.e[0], p, rr}};
    out.triangles.push_back({{tri.e[1], q, pr}});
    out.triangles.push_back({{tri.e[2], r, qr}});
    out.gluings.push_back({p, pr, 1});
    out.gluings.push_back({q, qr, 1});
    out.gluings.push_back({r, rr, 1});
    out.validate();
    return out;
}

namespace {

// dense tensor over the currently open gluing axes, all of dimension n
struct Axis {
    int gluing = -1;
    bool first = false; // whether this axis sits in the first slot of its gluing
};

struct Tensor {
    int n = 1;
    std::vector<Axis> axes;
    std::vector<Scalar> v;
};

std::size_t tensor_size(int n, std::size_t naxes) {
    std::size_t s = 1;
    for (std::size_t i = 0; i < naxes; ++i) s *= std::size_t(n);
    return s;
}

// contracts axes p and q with the kernel k(i_first, j_second)
Tensor contract_pair(const Tensor& t, std::size_t p, std::size_t q, const Matrix& k) {
    if (p > q) return contract_pair(t, q, p, k);
    Tensor out;
    out.n = t.n;
    for (std::size_t i = 0; i < t.axes.size(); ++i)
        if (i != p && i != q) out.axes.push_back(t.axes[i]);
    out.v.assign(tensor_size(t.n, out.axes.size()), Scalar());

    const bool p_first = t.axes[p].first;
    std::vector<int> idx(t.axes.size(), 0);
    for (std::size_t flat = 0; flat < t.v.size(); ++flat) {
        if (!t.v[flat].is_zero()) {
            const Scalar& kv =
                p_first ? k.at(idx[p], idx[q]) : k.at(idx[q], idx[p]);
            if (!kv.is_zero()) {
                std::size_t oflat = 0;
                for (std::size_t i = 0; i < t.axes.size(); ++i)
                    if (i != p && i != q) oflat = oflat * t.n + idx[i];
                out.v[oflat] += kv * t.v[flat];
            }
        }
        for (std::size_t i = t.axes.size(); i-- > 0;) {
            if (++idx[i] < t.n) break;
            idx[i] = 0;
        }
    }
    return out;
}

Scalar contract_network(const FrobeniusAlgebra& f, const CombSurface& s,
                        const std::vector<int>& flips, const Matrix* theta) {
    const int n = f.dim();
    auto slots = slot_table(s);

    // per-gluing kernel: g^{-1}, with theta folded into the second index on
    // orientation-reversing gluings
    std::vector<Matrix> kernel(s.gluings.size());
    std::map<int, std::pair<int, bool>> gluing_of; // edge id -> (gluing, is first slot)
    for (int g = 0; g < int(s.gluings.size()); ++g) {
        const auto& gl = s.gluings[g];
        int eff = gl.sign;
        if (!flips.empty()) eff *= flips[slots.at(gl.a).tri] * flips[slots.at(gl.b).tri];
        if (eff > 0) {
            kernel[g] = f.gram_inv;
        } else {
            if (!theta) throw NotOrientable("reversing gluing without an involution");
            kernel[g] = f.gram_inv * theta->transpose();
        }
        gluing_of[gl.a] = {g, true};
        gluing_of[gl.b] = {g, false};
    }

    // triangle weight tensor eps(e_i e_j e_k)
    std::vector<Scalar> weight(std::size_t(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ij = f.alg.mul(f.basis_vec(i), f.basis_vec(j));
            for (int k = 0; k < n; ++k)
                weight[(std::size_t(i) * n + j) * n + k] = f.eps(f.alg.mul(ij, f.basis_vec(k)));
        }

    Tensor acc;
    acc.n = n;
    acc.v = {Scalar::one()};
    for (int t = 0; t < int(s.triangles.size()); ++t) {
        std::array<int, 3> edges = {s.triangles[t].e[0], s.triangles[t].e[1],
                                    s.triangles[t].e[2]};
        if (!flips.empty() && flips[t] < 0) std::swap(edges[1], edges[2]);

        // weight tensor eps(e_i e_j e_k) appended as three new axes
        Tensor next;
        next.n = n;
        next.axes = acc.axes;
        for (int slot : edges) {
            auto [g, first] = gluing_of.at(slot);
            next.axes.push_back({g, first});
        }
        next.v.assign(tensor_size(n, next.axes.size()), Scalar());
        const std::size_t base = acc.v.size();
        for (std::size_t flat = 0; flat < base; ++flat) {
            if (acc.v[flat].is_zero()) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        const Scalar& w = weight[(std::size_t(i) * n + j) * n + k];
                        if (w.is_zero()) continue;
                        std::size_t oflat = ((flat * n + i) * n + j) * n + k;
                        next.v[oflat] = acc.v[flat] * w;
                    }
        }
        acc = std::move(next);

        // contract every gluing that is now complete
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t p = 0; p < acc.axes.size() && !again; ++p)
                for (std::size_t q = p + 1; q < acc.axes.size() && !again; ++q)
                    if (acc.axes[p].gluing == acc.axes[q].gluing) {
                        acc = contract_pair(acc, p, q, kernel[acc.axes[p].gluing]);
                        again = true;
                    }
        }
    }
    if (!acc.axes.empty()) throw NotClosed("network did not close");
    return acc.v.at(0);
}

} // namespace

Invariant evaluate_oriented(const FrobeniusAlgebra& f, const CombSurface& s) {
    s.validate();
    auto orb = check_orbifold_object(f);
    if (!orb.ok())
        throw InvalidAlgebra(orb.separable ? "algebra is not symmetric"
                                           : "algebra is not Delta-separable");
    auto sigma = s.orientation();
    if (!sigma) throw NotOrientable("no consistent triangle orientation exists");
    return {contract_network(f, s, *sigma, nullptr)};
}

Invariant evaluate_unoriented(const O2Object& o, const CombSurface& s) {
    s.validate();
    return {contract_network(*o.algebra, s, {}, &o.theta)};
}

Scalar oracle_contract(const FrobeniusAlgebra& f, const Matrix* theta, const CombSurface& s) {
    s.validate();
    const int n = f.dim();
    const int ng = int(s.gluings.size());

    // element carried by each slot for a given assignment: e_i on the first
    // slot; e_j, or theta(e_j) on a reversing gluing, on the second
    std::map<int, std::pair<int, bool>> gluing_of;
    for (int g = 0; g < ng; ++g) {
        gluing_of[s.gluings[g].a] = {g, true};
        gluing_of[s.gluings[g].b] = {g, false};
    }

    // per gluing, the nonzero copairing entries (i, j, g^{ij})
    struct Pair {
        int i, j;
        Scalar w;
    };
    std::vector<std::vector<Pair>> nz(ng);
    for (int g = 0; g < ng; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!f.gram_inv.at(i, j).is_zero()) nz[g].push_back({i, j, f.gram_inv.at(i, j)});

    Scalar total;
    std::vector<std::size_t> pick(ng, 0);
    while (true) {
        Scalar term = Scalar::one();
        for (int g = 0; g < ng; ++g) term *= nz[g][pick[g]].w;
        for (const auto& tri : s.triangles) {
            if (term.is_zero()) break;
            Vec prod = f.alg.unit;
            for (int slot : tri.e) {
                auto [g, first] = gluing_of.at(slot);
                Vec elt = f.basis_vec(first ? nz[g][pick[g]].i : nz[g][pick[g]].j);
                if (!first && s.gluings[g].sign < 0) {
                    if (!theta) throw NotOrientable("reversing gluing without an involution");
                    elt = theta->apply(elt);
                }
                prod = f.alg.mul(prod, elt);
            }
            term *= f.eps(prod);
        }
        total += term;
        int pos = 0;
        while (pos < ng && ++pick[pos] == nz[pos].size()) pick[pos++] = 0;
        if (pos == ng) break;
    }
    return total;
}

} // namespace orbicat
