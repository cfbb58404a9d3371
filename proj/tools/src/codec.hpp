#pragma once

#include <json.hpp>

#include "supell/atlas.hpp"
#include "supell/binary_form.hpp"
#include "supell/curve.hpp"
#include "supell/jacobian.hpp"
#include "supell/minimal.hpp"
#include "supell/theta.hpp"
#include "supell/weighted.hpp"

namespace supell::cli {

using Json = nlohmann::ordered_json;

// All decoders throw Error(Errc::parse) on malformed documents.
Field field_from(const Json& doc);

Json encode(const Scalar& s);
Scalar decode_scalar(const Json& v, Field F);

Json encode(const mpz_class& z);
mpz_class decode_integer(const Json& v);

Json encode(const Poly& p);  // ascending coefficients
Poly decode_poly(const Json& v, Field F);

// {"n": 2, "f": ["1", "0", "1"], "field": "Q"}
Json encode(const SuperellipticCurve& C);
SuperellipticCurve decode_curve(const Json& doc);

// {"n": 2, "f": [...], "h": [...], "field": "GF(7)"}; h optional
Json encode(const HyperCurve& C);
HyperCurve decode_hyper(const Json& doc);

// {"coeffs": [a_0, ..., a_d], "field": "Q"}, a_i the coefficient of X^(d-i) Y^i
Json encode(const BinaryForm& f);
BinaryForm decode_form(const Json& doc);

// {"coords": [...], "weights": [...], "field": "Q"}
Json encode(const WeightedPoint& p);
WeightedPoint decode_point(const Json& doc);

Json encode(const Height& h);

// {"u": [...], "v": [...]}
Json encode(const MumfordDivisor& D);
MumfordDivisor decode_divisor(const Json& doc, Field F);

// {"a1": "0", "a2": ..., "a6": ...}
Json encode(const EllipticModel& E);
EllipticModel decode_model(const Json& doc);

Json encode(const WeierstrassChange& w);
Json encode(const AutRecord& r);
Json encode(const HalfIntChar& m);

}  // namespace supell::cli
