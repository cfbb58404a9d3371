#pragma once

#include "supell/poly.hpp"

namespace supell {

// y^n = f(x) with f separable.
struct SuperellipticCurve {
    int n = 2;
    Poly f;

    SuperellipticCurve() = default;
    SuperellipticCurve(int level, Poly poly);

    const Field& field() const { return f.field(); }
    int degree() const { return f.degree(); }
};

}  // namespace supell
