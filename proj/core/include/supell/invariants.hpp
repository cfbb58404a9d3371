#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "supell/binary_form.hpp"
#include "supell/curve.hpp"
#include "supell/weighted.hpp"

namespace supell {

struct SexticInvariants {
    Scalar J2, J4, J6, J10;  // Igusa
    Scalar A, B, C, D;       // Clebsch
    Scalar I2, I4, I6, I10;  // integral (Igusa-Clebsch)
};

struct OctavicInvariants {
    std::array<Scalar, 9> J;  // J[0] = J2 ... J[8] = J10
    const Scalar& operator()(int i) const { return J.at(i - 2); }
};

struct DihedralInvariants {
    int r = 0;
    std::vector<Scalar> u;
};

enum class RootProfile { separable, triple, quadruple_or_more, quadruple, quintuple_or_more, other_repeated };

const char* profile_name(RootProfile p);

std::array<Scalar, 4> clebsch_sextic(const BinaryForm& f);
SexticInvariants igusa_sextic(const BinaryForm& f);
OctavicInvariants octavic_invariants(const BinaryForm& f);

// r with J_{2i}(f) = r^{2i} J_{2i}(g), i = 1,2,3,5.
std::optional<Scalar> sextic_equivalent(const BinaryForm& f, const BinaryForm& g);
// lambda with J_i(f) = lambda^i J_i(g), i = 2..7.
std::optional<Scalar> octavic_equivalent(const BinaryForm& f, const BinaryForm& g);

// Largest multiplicity of a projective root, with infinity included.
int max_root_multiplicity(const BinaryForm& f);
RootProfile multiplicity_profile(const BinaryForm& f);

DihedralInvariants dihedral_invariants(int n, const std::vector<Scalar>& a, int r);

// Weighted points used downstream.
WeightedPoint sextic_point(const SexticInvariants& s);          // (J2:J4:J6:J10)
WeightedPoint sextic_integral_point(const SexticInvariants& s); // (I2:I4:I6:I10)
WeightedPoint octavic_point(const OctavicInvariants& o);        // (J2:...:J7)

// Homogenized form of y^2 = f(x) for deg f in {5,6} (degree 6) or {7,8} (degree 8).
BinaryForm curve_form(const SuperellipticCurve& C);

WeightedPoint moduli_point(const SuperellipticCurve& C);

}  // namespace supell
