#pragma once

// Reference triangulations used by the state-sum tests: spheres, tori,
// Klein bottles and the projective plane, each validated by Euler
// characteristic and orientability.

#include "orbicat/statesum.hpp"

namespace fixtures {

using orbicat::CombSurface;

// two triangles glued as mirror images along their whole boundary
inline CombSurface sphere2() {
    CombSurface s;
    s.triangles = {{{0, 1, 2}}, {{3, 4, 5}}};
    s.gluings = {{0, 5, 1}, {1, 4, 1}, {2, 3, 1}};
    return s;
}

// boundary of the tetrahedron
inline CombSurface sphere4() {
    CombSurface s;
    s.triangles = {{{0, 1, 2}}, {{3, 4, 5}}, {{6, 7, 8}}, {{9, 10, 11}}};
    s.gluings = {{0, 8, 1}, {1, 11, 1}, {2, 3, 1}, {4, 10, 1}, {5, 6, 1}, {7, 9, 1}};
    return s;
}

// unit square with opposite sides identified, cut along the main diagonal
inline CombSurface torus2() {
    CombSurface s;
    s.triangles = {{{0, 1, 2}}, {{3, 4, 5}}};
    s.gluings = {{2, 3, 1}, {0, 4, 1}, {1, 5, 1}};
    return s;
}

// the same square cut along the other diagonal
inline CombSurface torus2_alt() {
    CombSurface s;
    s.triangles = {{{0, 1, 2}}, {{3, 4, 5}}};
    s.gluings = {{0, 4, 1}, {3, 2, 1}, {1, 5, 1}};
    return s;
}

// square with one side pair identified with a flip
inline CombSurface klein2() {
    CombSurface s = torus2();
    s.gluings[2].sign = -1; // the b-edge
    return s;
}

inline CombSurface klein2_alt() {
    CombSurface s = torus2();
    s.gluings[1].sign = -1; // flip the a-edge instead
    return s;
}

// sphere gluing pattern with one antipodal (reversing) identification
inline CombSurface rp2() {
    CombSurface s;
    s.triangles = {{{0, 1, 2}}, {{3, 4, 5}}};
    s.gluings = {{0, 5, 1}, {1, 4, 1}, {2, 3, -1}};
    return s;
}

} // namespace fixtures
