#include "supell/curve.hpp"

#include "supell/error.hpp"

namespace supell {

SuperellipticCurve::SuperellipticCurve(int level, Poly poly) : n(level), f(std::move(poly))
{
    if (n < 2) fail(Errc::domain, "level n must be at least 2");
    if (f.degree() < 1) fail(Errc::domain, "f must be nonconstant");
    if (!is_squarefree(f)) fail(Errc::singular, "f has a repeated root");
}

}  // namespace supell
