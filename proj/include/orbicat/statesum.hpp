#pragma once

// Two-dimensional state sums on triangulated closed surfaces. A surface is
// a list of triangles, each an ordered triple of edge slots, plus a perfect
// matching of the slots into gluings flagged orientation-compatible (+1,
// the two slots run head-to-tail) or orientation-reversing (-1, they run
// head-to-head).
//
// Edge slot k of a triangle runs from the triangle's corner k to corner
// (k+1) mod 3. Every edge id occurs in exactly one slot and one gluing.
//
// Evaluation contracts a weight eps(e_a e_b e_c) per triangle against the
// copairing g^{ab} per gluing; orientation-reversing gluings route the
// second slot of the pair through the involution theta.

#include "orbicat/completion.hpp"

namespace orbicat {

struct CombSurface {
    struct Triangle {
        int e[3];
    };
    struct Gluing {
        int a = 0, b = 0;
        int sign = 1;
    };
    std::vector<Triangle> triangles;
    std::vector<Gluing> gluings;

    void validate() const; // slots unique, matching perfect; throws NotClosed
    int vertex_count() const;
    int euler_characteristic() const;

    // a flip assignment per triangle turning every gluing compatible, or
    // nullopt for non-orientable surfaces
    std::optional<std::vector<int>> orientation() const;
    bool orientable() const { return orientation().has_value(); }

    static CombSurface disjoint_union(const CombSurface& x, const CombSurface& y);
};

// reverses the cyclic order of one triangle and toggles its gluing flags;
// the state sum of a valid unoriented model is invariant under this move
CombSurface flip_triangle(const CombSurface& s, int t);

// bistellar moves; pachner_22 requires a +1 gluing between distinct triangles
CombSurface pachner_22(const CombSurface& s, int gluing_index);
CombSurface pachner_13(const CombSurface& s, int triangle_index);

struct Invariant {
    Scalar value;
};

// oriented model: requires an orbifold object and an orientable surface
Invariant evaluate_oriented(const FrobeniusAlgebra& f, const CombSurface& s);

// unoriented model: requires a (simple-form) O(2) object; the surface may
// be non-orientable
Invariant evaluate_unoriented(const O2Object& o, const CombSurface& s);

// independent oracle: a monolithic sum over basis-label assignments per
// gluing, multiplying counit weights of element products (no propagator
// matrices, no intermediate tensors)
Scalar oracle_contract(const FrobeniusAlgebra& f, const Matrix* theta, const CombSurface& s);

} // namespace orbicat
