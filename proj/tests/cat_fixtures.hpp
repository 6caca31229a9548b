#pragma once

// Finite dagger-category fixtures shared by the cat1 tests and the
// acceptance suite.

#include <functional>
#include <map>

#include "orbicat/category.hpp"

namespace fixtures {

using orbicat::DaggerStructure;
using orbicat::FiniteCategory;

struct CatSpec {
    std::vector<std::string> objects;
    std::vector<std::tuple<std::string, std::string, std::string>> mors; // label, src, dst
    std::vector<std::string> identities;                                 // per object
    // composition by labels: comp[{g,f}] = g.f
    std::map<std::pair<std::string, std::string>, std::string> comp;
};

inline FiniteCategory build_category(const CatSpec& spec) {
    FiniteCategory c;
    c.objects = spec.objects;
    auto oidx = [&c](const std::string& o) {
        for (int i = 0; i < c.nobj(); ++i)
            if (c.objects[i] == o) return i;
        throw orbicat::InvalidCategory("unknown object " + o);
    };
    std::map<std::string, int> midx;
    for (const auto& [label, src, dst] : spec.mors) {
        midx[label] = c.nmor();
        c.morphisms.push_back({label, oidx(src), oidx(dst)});
    }
    for (const auto& id : spec.identities) c.identity.push_back(midx.at(id));
    c.table.assign(std::size_t(c.nmor()) * c.nmor(), -1);
    for (int g = 0; g < c.nmor(); ++g)
        for (int f = 0; f < c.nmor(); ++f) {
            if (!c.composable(g, f)) continue;
            auto it = spec.comp.find({c.morphisms[g].label, c.morphisms[f].label});
            if (it == spec.comp.end())
                throw orbicat::InvalidCategory("composition table missing (" +
                                               c.morphisms[g].label + "," +
                                               c.morphisms[f].label + ")");
            c.table[std::size_t(g) * c.nmor() + f] = midx.at(it->second);
        }
    c.validate();
    return c;
}

// one object, End = {1, e} with e.e = e
inline std::pair<FiniteCategory, DaggerStructure> walking_idempotent() {
    CatSpec s;
    s.objects = {"*"};
    s.mors = {{"1", "*", "*"}, {"e", "*", "*"}};
    s.identities = {"1"};
    s.comp = {{{"1", "1"}, "1"}, {{"1", "e"}, "e"}, {{"e", "1"}, "e"}, {{"e", "e"}, "e"}};
    FiniteCategory c = build_category(s);
    return {c, DaggerStructure{0, 1}}; // d = id is a dagger here
}

// one object, Z_2 = {1, s}, s.s = 1, dagger s -> s
inline std::pair<FiniteCategory, DaggerStructure> group_c2() {
    CatSpec s;
    s.objects = {"*"};
    s.mors = {{"1", "*", "*"}, {"s", "*", "*"}};
    s.identities = {"1"};
    s.comp = {{{"1", "1"}, "1"}, {{"1", "s"}, "s"}, {{"s", "1"}, "s"}, {{"s", "s"}, "1"}};
    return {build_category(s), DaggerStructure{0, 1}};
}

// two objects with a split idempotent: f : a -> b, g : b -> a, f.g = 1_b,
// e = g.f; dagger swaps f and g
inline std::pair<FiniteCategory, DaggerStructure> split_pair() {
    CatSpec s;
    s.objects = {"a", "b"};
    s.mors = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"},
              {"e", "a", "a"}};
    s.identities = {"1a", "1b"};
    s.comp = {{{"1a", "1a"}, "1a"}, {{"1a", "g"}, "g"},  {{"1a", "e"}, "e"},
              {{"1b", "1b"}, "1b"}, {{"1b", "f"}, "f"},  {{"f", "1a"}, "f"},
              {{"f", "g"}, "1b"},   {{"f", "e"}, "f"},   {{"g", "1b"}, "g"},
              {{"g", "f"}, "e"},    {{"e", "1a"}, "e"},  {{"e", "g"}, "g"},
              {{"e", "e"}, "e"}};
    FiniteCategory c = build_category(s);
    // dagger: f+ = g, g+ = f, e+ = e
    return {c, DaggerStructure{0, 1, 3, 2, 4}};
}

// the full transformation monoid on two points; d = identity map on
// morphisms is NOT contravariant
inline FiniteCategory transformation_monoid() {
    CatSpec s;
    s.objects = {"*"};
    s.mors = {{"id", "*", "*"}, {"c0", "*", "*"}, {"c1", "*", "*"}, {"sw", "*", "*"}};
    s.identities = {"id"};
    auto set = [&s](const std::string& g, const std::string& f, const std::string& gf) {
        s.comp[{g, f}] = gf;
    };
    for (const std::string& m : {"id", "c0", "c1", "sw"}) {
        set("id", m, m);
        set(m, "id", m);
    }
    set("c0", "c0", "c0"); set("c0", "c1", "c0"); set("c0", "sw", "c0");
    set("c1", "c0", "c1"); set("c1", "c1", "c1"); set("c1", "sw", "c1");
    set("sw", "c0", "c1"); set("sw", "c1", "c0"); set("sw", "sw", "id");
    return build_category(s);
}

inline std::vector<std::pair<FiniteCategory, DaggerStructure>> dagger_fixtures() {
    return {walking_idempotent(), group_c2(), split_pair()};
}

} // namespace fixtures
