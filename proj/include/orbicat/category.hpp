#pragma once

// Finite categories presented by composition tables, O(1)-volutions and
// dagger structures on them, and the strictification / idempotent
// completion operations between the two.
//
// Composition convention: compose(g, f) = g . f, defined when dst(f) == src(g).
// A dagger structure is stored as the morphism involution alone (it is
// identity on objects); an O(1)-volution carries object/morphism maps and
// the unit components eta_a : d(d(a)) -> a.

#include <optional>
#include <string>
#include <vector>

#include "orbicat/matrix.hpp"

namespace orbicat {

struct FiniteCategory {
    struct Mor {
        std::string label;
        int src = 0, dst = 0;
    };
    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<int> identity; // object -> morphism index
    std::vector<int> table;    // table[g*nmor+f] = g.f, -1 when not composable

    int nobj() const { return int(objects.size()); }
    int nmor() const { return int(morphisms.size()); }
    int compose(int g, int f) const { return table[std::size_t(g) * morphisms.size() + f]; }
    bool composable(int g, int f) const {
        return morphisms[f].dst == morphisms[g].src;
    }
    std::vector<int> hom(int a, int b) const;
    bool is_idempotent(int m) const;
    std::optional<int> inverse_of(int m) const;

    void validate() const; // closure, units, associativity; throws InvalidCategory
};

using DaggerStructure = std::vector<int>; // morphism involution, identity on objects

struct FiniteVolution {
    std::vector<int> d_obj;
    std::vector<int> d_mor;
    std::vector<int> eta; // per object: a morphism d(d(a)) -> a
};

struct Issue {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Issue> issues;
    void fail(const std::string& axiom, const std::string& witness) {
        valid = false;
        issues.push_back({axiom, witness});
    }
};

ValidationReport check_o1_volution(const FiniteCategory& c, const FiniteVolution& v);
ValidationReport check_dagger(const FiniteCategory& c, const DaggerStructure& d);

// morphism predicates in a dagger category
bool is_self_adjoint(const FiniteCategory& c, const DaggerStructure& d, int m);
bool is_isometry(const FiniteCategory& c, const DaggerStructure& d, int m);
bool is_unitary(const FiniteCategory& c, const DaggerStructure& d, int m);
// positivity of a self-adjoint automorphism: f = d(g) . g for an iso
// g : a -> b; exhaustive search, returns (target object, g) when found
std::optional<std::pair<int, int>> positivity_witness(const FiniteCategory& c,
                                                      const DaggerStructure& d, int m);

// Trivial reinterpretation of a dagger structure as a volution (identity
// object map, identity unit components). Throws InvalidDagger.
FiniteVolution t_o1(const FiniteCategory& c, const DaggerStructure& d);

// Strictification: objects become fixed points (a, theta_a) with
// eta_a . d(theta_a)^{-1} . theta_a = id_a, morphisms are unconstrained
// morphisms of the base, the dagger is theta_a^{-1} . d(X) . theta_b.
struct StrictifiedCategory {
    FiniteCategory cat;
    DaggerStructure dagger;
    std::vector<std::pair<int, int>> obj_data; // (base object, theta morphism)
    std::vector<int> mor_data;                 // underlying base morphism
    std::optional<int> find_object(int a, int theta) const;
    std::optional<int> find_morphism(int src_obj, int dst_obj, int base_mor) const;
};
StrictifiedCategory s_o1(const FiniteCategory& c, const FiniteVolution& v);

// Idempotent completion: objects (a, e), morphisms X with f.X = X = X.e.
struct IdeCategory {
    FiniteCategory cat;
    std::vector<std::pair<int, int>> obj_data;     // (a, e)
    std::vector<std::tuple<int, int, int>> mor_data; // (src obj, dst obj, base morphism)
    std::optional<int> find_object(int a, int e) const;
    std::optional<int> find_morphism(int src_obj, int dst_obj, int base_mor) const;
};
IdeCategory idempotent_completion(const FiniteCategory& c);

// Lift of a volution to the idempotent completion:
// d'(a,e) = (d a, d e), d'(X) = d(X), eta'_{(a,e)} = e . eta_a.
FiniteVolution i_o1(const FiniteCategory& c, const FiniteVolution& v, const IdeCategory& ide);

// d-Karoubi envelope: full subcategory of Ide C on the d-idempotents,
// with dagger X -> d(X).
struct DKaroubiCategory {
    FiniteCategory cat;
    DaggerStructure dagger;
    std::vector<std::pair<int, int>> obj_data;
    std::vector<std::tuple<int, int, int>> mor_data;
    std::optional<int> find_object(int a, int e) const;
};
DKaroubiCategory d_karoubi(const FiniteCategory& c, const DaggerStructure& d);

struct FiniteFunctor {
    std::vector<int> obj_map;
    std::vector<int> mor_map;
};

ValidationReport check_functor(const FiniteCategory& dom, const FiniteCategory& cod,
                               const FiniteFunctor& f);
bool is_fully_faithful(const FiniteCategory& dom, const FiniteCategory& cod,
                       const FiniteFunctor& f, Issue* why = nullptr);

// For each codomain object, an isomorphism from the image of some domain
// object; nullopt when one cannot be found.
struct SurjectivityWitness {
    int dom_obj;
    int iso; // codomain morphism F(dom_obj) -> cod object
};
std::optional<std::vector<SurjectivityWitness>>
essential_surjectivity(const FiniteCategory& dom, const FiniteCategory& cod,
                       const FiniteFunctor& f);

// O(1)-volutive functor check: alpha_a : F(d a) -> d'(F a) natural iso with
// F(eta_a) = eta'_{F a} . d'(alpha_a)^{-1} . alpha_{d a}.
ValidationReport check_volutive_functor(const FiniteCategory& dom, const FiniteVolution& dv,
                                        const FiniteCategory& cod, const FiniteVolution& cv,
                                        const FiniteFunctor& f, const std::vector<int>& alpha);

// The comparison (a,e) -> ((a,e), e) exhibiting Ide(Ide C) = Ide C.
struct IdeComparison {
    IdeCategory ide;        // Ide C
    IdeCategory ide2;       // Ide(Ide C)
    FiniteFunctor functor_; // Ide C -> Ide(Ide C)
};
IdeComparison ide_idempotency_witness(const FiniteCategory& c);

// psi : dKar(C,d) -> (S . I . T)(C,d), (a,e) -> (a,e,id), X -> X.
struct PsiEmbedding {
    IdeCategory ide;
    FiniteVolution ide_vol;
    StrictifiedCategory sit;
    DKaroubiCategory kar;
    FiniteFunctor psi;
};
PsiEmbedding psi_embed(const FiniteCategory& c, const DaggerStructure& d);

} // namespace orbicat
