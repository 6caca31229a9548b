#include "orbicat/category.hpp"

#include <algorithm>

namespace orbicat {

std::vector<int> FiniteCategory::hom(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < nmor(); ++m)
        if (morphisms[m].src == a && morphisms[m].dst == b) out.push_back(m);
    return out;
}

bool FiniteCategory::is_idempotent(int m) const {
    return morphisms[m].src == morphisms[m].dst && compose(m, m) == m;
}

std::optional<int> FiniteCategory::inverse_of(int m) const {
    int a = morphisms[m].src, b = morphisms[m].dst;
    for (int w : hom(b, a))
        if (compose(w, m) == identity[a] && compose(m, w) == identity[b]) return w;
    return std::nullopt;
}

void FiniteCategory::validate() const {
    if (int(identity.size()) != nobj()) throw InvalidCategory("identity list length");
    if (table.size() != std::size_t(nmor()) * nmor()) throw InvalidCategory("table shape");
    for (int o = 0; o < nobj(); ++o) {
        int id = identity[o];
        if (id < 0 || id >= nmor() || morphisms[id].src != o || morphisms[id].dst != o)
            throw InvalidCategory("identity of object " + objects[o] + " is not an endomorphism");
    }
    for (int g = 0; g < nmor(); ++g)
        for (int f = 0; f < nmor(); ++f) {
            int gf = compose(g, f);
            if (!composable(g, f)) {
                if (gf != -1)
                    throw InvalidCategory("composite defined for non-composable pair (" +
                                          morphisms[g].label + "," + morphisms[f].label + ")");
                continue;
            }
            if (gf < 0 || gf >= nmor())
                throw InvalidCategory("composition table not closed at (" + morphisms[g].label +
                                      "," + morphisms[f].label + ")");
            if (morphisms[gf].src != morphisms[f].src || morphisms[gf].dst != morphisms[g].dst)
                throw InvalidCategory("composite has wrong endpoints at (" + morphisms[g].label +
                                      "," + morphisms[f].label + ")");
        }
    for (int f = 0; f < nmor(); ++f) {
        if (compose(identity[morphisms[f].dst], f) != f ||
            compose(f, identity[morphisms[f].src]) != f)
            throw InvalidCategory("identity law fails at " + morphisms[f].label);
    }
    for (int h = 0; h < nmor(); ++h)
        for (int g = 0; g < nmor(); ++g) {
            if (!composable(h, g)) continue;
            for (int f = 0; f < nmor(); ++f) {
                if (!composable(g, f)) continue;
                if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                    throw InvalidCategory("associativity fails at (" + morphisms[h].label + "," +
                                          morphisms[g].label + "," + morphisms[f].label + ")");
            }
        }
}

ValidationReport check_o1_volution(const FiniteCategory& c, const FiniteVolution& v) {
    ValidationReport rep;
    if (int(v.d_obj.size()) != c.nobj() || int(v.d_mor.size()) != c.nmor() ||
        int(v.eta.size()) != c.nobj()) {
        rep.fail("totality", "volution data does not cover the category");
        return rep;
    }
    // typing of d on morphisms: f : a -> b gives d(f) : d(b) -> d(a)
    for (int f = 0; f < c.nmor(); ++f) {
        int df = v.d_mor[f];
        if (c.morphisms[df].src != v.d_obj[c.morphisms[f].dst] ||
            c.morphisms[df].dst != v.d_obj[c.morphisms[f].src])
            rep.fail("contravariance", "d(" + c.morphisms[f].label + ") has wrong endpoints");
    }
    if (!rep.valid) return rep;
    for (int o = 0; o < c.nobj(); ++o)
        if (v.d_mor[c.identity[o]] != c.identity[v.d_obj[o]])
            rep.fail("contravariance", "d(id_" + c.objects[o] + ") is not an identity");
    for (int g = 0; g < c.nmor(); ++g)
        for (int f = 0; f < c.nmor(); ++f) {
            if (!c.composable(g, f)) continue;
            if (v.d_mor[c.compose(g, f)] != c.compose(v.d_mor[f], v.d_mor[g]))
                rep.fail("contravariance", "d(g.f) != d(f).d(g) at (g,f) = (" +
                                               c.morphisms[g].label + "," +
                                               c.morphisms[f].label + ")");
        }
    // eta components: typing, invertibility, naturality
    for (int o = 0; o < c.nobj(); ++o) {
        int e = v.eta[o];
        int dda = v.d_obj[v.d_obj[o]];
        if (c.morphisms[e].src != dda || c.morphisms[e].dst != o) {
            rep.fail("naturality", "eta_" + c.objects[o] + " has wrong endpoints");
            continue;
        }
        if (!c.inverse_of(e))
            rep.fail("naturality", "eta_" + c.objects[o] + " is not invertible");
    }
    if (!rep.valid) return rep;
    for (int f = 0; f < c.nmor(); ++f) {
        int a = c.morphisms[f].src, b = c.morphisms[f].dst;
        int ddf = v.d_mor[v.d_mor[f]];
        if (c.compose(f, v.eta[a]) != c.compose(v.eta[b], ddf))
            rep.fail("naturality", "eta is not natural at " + c.morphisms[f].label);
    }
    // coherence d(eta_a) = eta_{d(a)}^{-1}
    for (int o = 0; o < c.nobj(); ++o) {
        auto inv = c.inverse_of(v.eta[v.d_obj[o]]);
        if (!inv || v.d_mor[v.eta[o]] != *inv)
            rep.fail("coherence", "d(eta_a) != eta_{d(a)}^{-1} at object " + c.objects[o]);
    }
    return rep;
}

ValidationReport check_dagger(const FiniteCategory& c, const DaggerStructure& d) {
    ValidationReport rep;
    if (int(d.size()) != c.nmor()) {
        rep.fail("totality", "dagger not defined on all morphisms");
        return rep;
    }
    for (int f = 0; f < c.nmor(); ++f) {
        if (c.morphisms[d[f]].src != c.morphisms[f].dst ||
            c.morphisms[d[f]].dst != c.morphisms[f].src)
            rep.fail("identity-on-objects", "dagger of " + c.morphisms[f].label +
                                                " has wrong endpoints");
        if (d[d[f]] != f)
            rep.fail("involution", "d(d(" + c.morphisms[f].label + ")) != " +
                                       c.morphisms[f].label);
    }
    for (int o = 0; o < c.nobj(); ++o)
        if (d[c.identity[o]] != c.identity[o])
            rep.fail("involution", "dagger moves id_" + c.objects[o]);
    for (int g = 0; g < c.nmor(); ++g)
        for (int f = 0; f < c.nmor(); ++f) {
            if (!c.composable(g, f)) continue;
            if (d[c.compose(g, f)] != c.compose(d[f], d[g]))
                rep.fail("antihomomorphism", "(g.f)+ != f+.g+ at (" + c.morphisms[g].label +
                                                 "," + c.morphisms[f].label + ")");
        }
    return rep;
}

bool is_self_adjoint(const FiniteCategory& c, const DaggerStructure& d, int m) {
    return c.morphisms[m].src == c.morphisms[m].dst && d[m] == m && c.inverse_of(m).has_value();
}

bool is_isometry(const FiniteCategory& c, const DaggerStructure& d, int m) {
    return c.compose(d[m], m) == c.identity[c.morphisms[m].src];
}

bool is_unitary(const FiniteCategory& c, const DaggerStructure& d, int m) {
    return is_isometry(c, d, m) && c.compose(m, d[m]) == c.identity[c.morphisms[m].dst];
}

std::optional<std::pair<int, int>> positivity_witness(const FiniteCategory& c,
                                                      const DaggerStructure& d, int m) {
    if (!is_self_adjoint(c, d, m)) return std::nullopt;
    int a = c.morphisms[m].src;
    for (int b = 0; b < c.nobj(); ++b)
        for (int g : c.hom(a, b))
            if (c.inverse_of(g) && c.compose(d[g], g) == m) return std::make_pair(b, g);
    return std::nullopt;
}

FiniteVolution t_o1(const FiniteCategory& c, const DaggerStructure& d) {
    auto rep = check_dagger(c, d);
    if (!rep.valid) throw InvalidDagger(rep.issues.front().axiom + ": " + rep.issues.front().witness);
    FiniteVolution v;
    v.d_obj.resize(c.nobj());
    for (int o = 0; o < c.nobj(); ++o) v.d_obj[o] = o;
    v.d_mor = d;
    v.eta = c.identity;
    return v;
}

std::optional<int> StrictifiedCategory::find_object(int a, int theta) const {
    for (int i = 0; i < int(obj_data.size()); ++i)
        if (obj_data[i] == std::make_pair(a, theta)) return i;
    return std::nullopt;
}

std::optional<int> StrictifiedCategory::find_morphism(int src_obj, int dst_obj,
                                                      int base_mor) const {
    for (int i = 0; i < int(mor_data.size()); ++i)
        if (cat.morphisms[i].src == src_obj && cat.morphisms[i].dst == dst_obj &&
            mor_data[i] == base_mor)
            return i;
    return std::nullopt;
}

StrictifiedCategory s_o1(const FiniteCategory& c, const FiniteVolution& v) {
    auto rep = check_o1_volution(c, v);
    if (!rep.valid)
        throw InvalidVolution(rep.issues.front().axiom + ": " + rep.issues.front().witness);

    StrictifiedCategory s;
    // fixed points: theta : a -> d(a) invertible with eta_a . d(theta)^{-1} . theta = id_a
    for (int a = 0; a < c.nobj(); ++a)
        for (int t : c.hom(a, v.d_obj[a])) {
            auto dt_inv = c.inverse_of(v.d_mor[t]);
            if (!dt_inv || !c.inverse_of(t)) continue;
            if (c.compose(v.eta[a], c.compose(*dt_inv, t)) != c.identity[a]) continue;
            s.obj_data.emplace_back(a, t);
            s.cat.objects.push_back("(" + c.objects[a] + "|" + c.morphisms[t].label + ")");
        }
    // morphisms (a,t) -> (b,u) are all base morphisms a -> b
    for (int o1 = 0; o1 < int(s.obj_data.size()); ++o1)
        for (int o2 = 0; o2 < int(s.obj_data.size()); ++o2)
            for (int x : c.hom(s.obj_data[o1].first, s.obj_data[o2].first)) {
                s.mor_data.push_back(x);
                s.cat.morphisms.push_back({c.morphisms[x].label + ":" + std::to_string(o1) +
                                               ">" + std::to_string(o2),
                                           o1, o2});
            }
    s.cat.identity.resize(s.obj_data.size());
    for (int o = 0; o < int(s.obj_data.size()); ++o)
        s.cat.identity[o] = *s.find_morphism(o, o, c.identity[s.obj_data[o].first]);

    const int n = s.cat.nmor();
    s.cat.table.assign(std::size_t(n) * n, -1);
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
            if (s.cat.morphisms[f].dst != s.cat.morphisms[g].src) continue;
            int comp = c.compose(s.mor_data[g], s.mor_data[f]);
            s.cat.table[std::size_t(g) * n + f] =
                *s.find_morphism(s.cat.morphisms[f].src, s.cat.morphisms[g].dst, comp);
        }
    s.cat.validate();

    // dagger of X : (a,t) -> (b,u) is t^{-1} . d(X) . u
    s.dagger.resize(n);
    for (int m = 0; m < n; ++m) {
        int o1 = s.cat.morphisms[m].src, o2 = s.cat.morphisms[m].dst;
        auto [a, t] = s.obj_data[o1];
        auto [b, u] = s.obj_data[o2];
        int composite = c.compose(*c.inverse_of(t), c.compose(v.d_mor[s.mor_data[m]], u));
        s.dagger[m] = *s.find_morphism(o2, o1, composite);
        (void)b;
        (void)a;
    }
    auto drep = check_dagger(s.cat, s.dagger);
    if (!drep.valid)
        throw InvalidVolution("strictification produced an invalid dagger: " +
                              drep.issues.front().witness);
    return s;
}

std::optional<int> IdeCategory::find_object(int a, int e) const {
    for (int i = 0; i < int(obj_data.size()); ++i)
        if (obj_data[i] == std::make_pair(a, e)) return i;
    return std::nullopt;
}

std::optional<int> IdeCategory::find_morphism(int src_obj, int dst_obj, int base_mor) const {
    for (int i = 0; i < int(mor_data.size()); ++i)
        if (mor_data[i] == std::make_tuple(src_obj, dst_obj, base_mor)) return i;
    return std::nullopt;
}

IdeCategory idempotent_completion(const FiniteCategory& c) {
    c.validate();
    IdeCategory ide;
    for (int a = 0; a < c.nobj(); ++a)
        for (int e : c.hom(a, a))
            if (c.compose(e, e) == e) {
                ide.obj_data.emplace_back(a, e);
                ide.cat.objects.push_back("(" + c.objects[a] + "," + c.morphisms[e].label + ")");
            }
    for (int o1 = 0; o1 < int(ide.obj_data.size()); ++o1)
        for (int o2 = 0; o2 < int(ide.obj_data.size()); ++o2) {
            auto [a, e] = ide.obj_data[o1];
            auto [b, f] = ide.obj_data[o2];
            for (int x : c.hom(a, b)) {
                if (c.compose(f, x) != x || c.compose(x, e) != x) continue;
                ide.mor_data.emplace_back(o1, o2, x);
                ide.cat.morphisms.push_back({c.morphisms[x].label + ":" + std::to_string(o1) +
                                                 ">" + std::to_string(o2),
                                             o1, o2});
            }
        }
    ide.cat.identity.resize(ide.obj_data.size());
    for (int o = 0; o < int(ide.obj_data.size()); ++o)
        ide.cat.identity[o] = *ide.find_morphism(o, o, ide.obj_data[o].second);

    const int n = ide.cat.nmor();
    ide.cat.table.assign(std::size_t(n) * n, -1);
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
            if (ide.cat.morphisms[f].dst != ide.cat.morphisms[g].src) continue;
            int comp = c.compose(std::get<2>(ide.mor_data[g]), std::get<2>(ide.mor_data[f]));
            ide.cat.table[std::size_t(g) * n + f] =
                *ide.find_morphism(ide.cat.morphisms[f].src, ide.cat.morphisms[g].dst, comp);
        }
    ide.cat.validate();
    return ide;
}

FiniteVolution i_o1(const FiniteCategory& c, const FiniteVolution& v, const IdeCategory& ide) {
    FiniteVolution out;
    out.d_obj.resize(ide.obj_data.size());
    for (int o = 0; o < int(ide.obj_data.size()); ++o) {
        auto [a, e] = ide.obj_data[o];
        auto target = ide.find_object(v.d_obj[a], v.d_mor[e]);
        if (!target) throw InvalidVolution("d(e) is not an idempotent in the completion");
        out.d_obj[o] = *target;
    }
    out.d_mor.resize(ide.mor_data.size());
    for (int m = 0; m < int(ide.mor_data.size()); ++m) {
        auto [o1, o2, x] = ide.mor_data[m];
        out.d_mor[m] = *ide.find_morphism(out.d_obj[o2], out.d_obj[o1], v.d_mor[x]);
    }
    out.eta.resize(ide.obj_data.size());
    for (int o = 0; o < int(ide.obj_data.size()); ++o) {
        auto [a, e] = ide.obj_data[o];
        int component = c.compose(e, v.eta[a]); // e . eta_a
        out.eta[o] = *ide.find_morphism(out.d_obj[out.d_obj[o]], o, component);
    }
    return out;
}

std::optional<int> DKaroubiCategory::find_object(int a, int e) const {
    for (int i = 0; i < int(obj_data.size()); ++i)
        if (obj_data[i] == std::make_pair(a, e)) return i;
    return std::nullopt;
}

DKaroubiCategory d_karoubi(const FiniteCategory& c, const DaggerStructure& d) {
    auto rep = check_dagger(c, d);
    if (!rep.valid)
        throw InvalidDagger(rep.issues.front().axiom + ": " + rep.issues.front().witness);

    DKaroubiCategory k;
    for (int a = 0; a < c.nobj(); ++a)
        for (int e : c.hom(a, a))
            if (c.compose(e, e) == e && d[e] == e) {
                k.obj_data.emplace_back(a, e);
                k.cat.objects.push_back("(" + c.objects[a] + "," + c.morphisms[e].label + ")");
            }
    auto find_mor = [&k](int o1, int o2, int x) -> std::optional<int> {
        for (int i = 0; i < int(k.mor_data.size()); ++i)
            if (k.mor_data[i] == std::make_tuple(o1, o2, x)) return i;
        return std::nullopt;
    };
    for (int o1 = 0; o1 < int(k.obj_data.size()); ++o1)
        for (int o2 = 0; o2 < int(k.obj_data.size()); ++o2) {
            auto [a, e] = k.obj_data[o1];
            auto [b, f] = k.obj_data[o2];
            for (int x : c.hom(a, b)) {
                if (c.compose(f, x) != x || c.compose(x, e) != x) continue;
                k.mor_data.emplace_back(o1, o2, x);
                k.cat.morphisms.push_back({c.morphisms[x].label + ":" + std::to_string(o1) +
                                               ">" + std::to_string(o2),
                                           o1, o2});
            }
        }
    k.cat.identity.resize(k.obj_data.size());
    for (int o = 0; o < int(k.obj_data.size()); ++o)
        k.cat.identity[o] = *find_mor(o, o, k.obj_data[o].second);
    const int n = k.cat.nmor();
    k.cat.table.assign(std::size_t(n) * n, -1);
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
            if (k.cat.morphisms[f].dst != k.cat.morphisms[g].src) continue;
            int comp = c.compose(std::get<2>(k.mor_data[g]), std::get<2>(k.mor_data[f]));
            k.cat.table[std::size_t(g) * n + f] =
                *find_mor(k.cat.morphisms[f].src, k.cat.morphisms[g].dst, comp);
        }
    k.cat.validate();
    k.dagger.resize(n);
    for (int m = 0; m < n; ++m) {
        auto [o1, o2, x] = k.mor_data[m];
        k.dagger[m] = *find_mor(o2, o1, d[x]);
    }
    auto drep = check_dagger(k.cat, k.dagger);
    if (!drep.valid)
        throw InvalidDagger("d-Karoubi envelope produced an invalid dagger: " +
                            drep.issues.front().witness);
    return k;
}

ValidationReport check_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                               const FiniteFunctor& f) {
    ValidationReport rep;
    if (int(f.obj_map.size()) != dom.nobj() || int(f.mor_map.size()) != dom.nmor()) {
        rep.fail("totality", "functor data does not cover the domain");
        return rep;
    }
    for (int m = 0; m < dom.nmor(); ++m) {
        const auto& dm = dom.morphisms[m];
        const auto& cm = cod.morphisms[f.mor_map[m]];
        if (cm.src != f.obj_map[dm.src] || cm.dst != f.obj_map[dm.dst])
            rep.fail("typing", "image of " + dm.label + " has wrong endpoints");
    }
    if (!rep.valid) return rep;
    for (int o = 0; o < dom.nobj(); ++o)
        if (f.mor_map[dom.identity[o]] != cod.identity[f.obj_map[o]])
            rep.fail("unitality", "image of id_" + dom.objects[o] + " is not an identity");
    for (int g = 0; g < dom.nmor(); ++g)
        for (int m = 0; m < dom.nmor(); ++m) {
            if (!dom.composable(g, m)) continue;
            if (f.mor_map[dom.compose(g, m)] != cod.compose(f.mor_map[g], f.mor_map[m]))
                rep.fail("functoriality", "F(g.f) != F(g).F(f) at (" + dom.morphisms[g].label +
                                              "," + dom.morphisms[m].label + ")");
        }
    return rep;
}

bool is_fully_faithful(const FiniteCategory& dom, const FiniteCategory& cod,
                       const FiniteFunctor& f, Issue* why) {
    for (int a = 0; a < dom.nobj(); ++a)
        for (int b = 0; b < dom.nobj(); ++b) {
            auto source = dom.hom(a, b);
            auto target = cod.hom(f.obj_map[a], f.obj_map[b]);
            std::vector<int> image;
            for (int m : source) image.push_back(f.mor_map[m]);
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                if (why) *why = {"faithful", "hom(" + dom.objects[a] + "," + dom.objects[b] + ")"};
                return false;
            }
            std::sort(target.begin(), target.end());
            if (image != target) {
                if (why) *why = {"full", "hom(" + dom.objects[a] + "," + dom.objects[b] + ")"};
                return false;
            }
        }
    return true;
}

std::optional<std::vector<SurjectivityWitness>>
essential_surjectivity(const FiniteCategory& dom, const FiniteCategory& cod,
                       const FiniteFunctor& f) {
    std::vector<SurjectivityWitness> out;
    for (int y = 0; y < cod.nobj(); ++y) {
        bool found = false;
        for (int x = 0; x < dom.nobj() && !found; ++x)
            for (int iso : cod.hom(f.obj_map[x], y)) {
                auto inv = cod.inverse_of(iso);
                if (inv) {
                    out.push_back({x, iso});
                    found = true;
                    break;
                }
            }
        if (!found) return std::nullopt;
    }
    return out;
}

ValidationReport check_volutive_functor(const FiniteCategory& dom, const FiniteVolution& dv,
                                        const FiniteCategory& cod, const FiniteVolution& cv,
                                        const FiniteFunctor& f, const std::vector<int>& alpha) {
    ValidationReport rep = check_functor(dom, cod, f);
    if (!rep.valid) return rep;
    if (int(alpha.size()) != dom.nobj()) {
        rep.fail("totality", "alpha does not cover the domain objects");
        return rep;
    }
    // typing and invertibility: alpha_a : F(d a) -> d'(F a)
    for (int a = 0; a < dom.nobj(); ++a) {
        const auto& m = cod.morphisms[alpha[a]];
        if (m.src != f.obj_map[dv.d_obj[a]] || m.dst != cv.d_obj[f.obj_map[a]])
            rep.fail("alpha-typing", "alpha at object " + dom.objects[a]);
        else if (!cod.inverse_of(alpha[a]))
            rep.fail("alpha-iso", "alpha at object " + dom.objects[a]);
    }
    if (!rep.valid) return rep;
    // naturality: alpha_a . F(d(m)) = d'(F(m)) . alpha_b for m : a -> b
    for (int m = 0; m < dom.nmor(); ++m) {
        int a = dom.morphisms[m].src, b = dom.morphisms[m].dst;
        int lhs = cod.compose(alpha[a], f.mor_map[dv.d_mor[m]]);
        int rhs = cod.compose(cv.d_mor[f.mor_map[m]], alpha[b]);
        if (lhs != rhs) rep.fail("alpha-naturality", dom.morphisms[m].label);
    }
    // unit compatibility: F(eta_a) = eta'_{F a} . d'(alpha_a)^{-1} . alpha_{d a}
    for (int a = 0; a < dom.nobj(); ++a) {
        auto dalpha_inv = cod.inverse_of(cv.d_mor[alpha[a]]);
        if (!dalpha_inv) {
            rep.fail("unit-compatibility", "d'(alpha) not invertible at " + dom.objects[a]);
            continue;
        }
        int rhs = cod.compose(cv.eta[f.obj_map[a]], cod.compose(*dalpha_inv, alpha[dv.d_obj[a]]));
        if (f.mor_map[dv.eta[a]] != rhs)
            rep.fail("unit-compatibility", "at object " + dom.objects[a]);
    }
    return rep;
}

IdeComparison ide_idempotency_witness(const FiniteCategory& c) {
    IdeComparison cmp;
    cmp.ide = idempotent_completion(c);
    cmp.ide2 = idempotent_completion(cmp.ide.cat);
    // (a,e) -> ((a,e), e); the idempotent e on (a,e) is the identity of (a,e)
    cmp.functor_.obj_map.resize(cmp.ide.obj_data.size());
    for (int o = 0; o < int(cmp.ide.obj_data.size()); ++o)
        cmp.functor_.obj_map[o] = *cmp.ide2.find_object(o, cmp.ide.cat.identity[o]);
    cmp.functor_.mor_map.resize(cmp.ide.mor_data.size());
    for (int m = 0; m < int(cmp.ide.mor_data.size()); ++m) {
        int o1 = cmp.ide.cat.morphisms[m].src, o2 = cmp.ide.cat.morphisms[m].dst;
        cmp.functor_.mor_map[m] =
            *cmp.ide2.find_morphism(cmp.functor_.obj_map[o1], cmp.functor_.obj_map[o2], m);
    }
    return cmp;
}

PsiEmbedding psi_embed(const FiniteCategory& c, const DaggerStructure& d) {
    PsiEmbedding p;
    FiniteVolution v = t_o1(c, d);
    p.ide = idempotent_completion(c);
    p.ide_vol = i_o1(c, v, p.ide);
    p.sit = s_o1(p.ide.cat, p.ide_vol);
    p.kar = d_karoubi(c, d);

    p.psi.obj_map.resize(p.kar.obj_data.size());
    for (int o = 0; o < int(p.kar.obj_data.size()); ++o) {
        auto [a, e] = p.kar.obj_data[o];
        int ide_obj = *p.ide.find_object(a, e);
        // theta = id_{(a,e)} = e; for a d-idempotent this is a fixed point
        int theta = p.ide.cat.identity[ide_obj];
        auto target = p.sit.find_object(ide_obj, theta);
        if (!target)
            throw InvalidDagger("psi target object missing for (" + c.objects[a] + "," +
                                c.morphisms[e].label + ")");
        p.psi.obj_map[o] = *target;
    }
    p.psi.mor_map.resize(p.kar.mor_data.size());
    for (int m = 0; m < int(p.kar.mor_data.size()); ++m) {
        auto [o1, o2, x] = p.kar.mor_data[m];
        auto [a1, e1] = p.kar.obj_data[o1];
        auto [a2, e2] = p.kar.obj_data[o2];
        int ide_mor = *p.ide.find_morphism(*p.ide.find_object(a1, e1),
                                           *p.ide.find_object(a2, e2), x);
        p.psi.mor_map[m] = *p.sit.find_morphism(p.psi.obj_map[o1], p.psi.obj_map[o2], ide_mor);
    }
    return p;
}

} // namespace orbicat
