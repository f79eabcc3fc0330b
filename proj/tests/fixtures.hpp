#pragma once

// Hand-written reference data shared by the unit and acceptance tests.

#include <cstdint>
#include <vector>

#include "hopfcoh/exactmath.hpp"

namespace fixtures {

using hopfcoh::FieldSpec;
using hopfcoh::Scalar;
using hopfcoh::Vec;

inline Vec vec(const FieldSpec& f, std::vector<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(f.fromInt(x));
    return v;
}

// Coordinates in E2 (x) H4: index 4i + j for E2 basis {1, h} and H4 basis
// {1, g, h, gh}.

/// 1⊗1 + u 1⊗h - u h⊗1 + u h⊗g - u^2 h⊗h
inline Vec closedX(const FieldSpec& f, const Scalar& u) {
    Vec v(8, f.zero());
    v[0] = f.one();
    v[2] = u;
    v[4] = -u;
    v[5] = u;
    v[6] = -(u * u);
    return v;
}

/// 1⊗g + u 1⊗gh - u h⊗g + u h⊗1 - u^2 h⊗gh
inline Vec closedY(const FieldSpec& f, const Scalar& u) {
    Vec v(8, f.zero());
    v[1] = f.one();
    v[3] = u;
    v[5] = -u;
    v[4] = u;
    v[7] = -(u * u);
    return v;
}

} // namespace fixtures
