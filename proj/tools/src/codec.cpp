#include "codec.hpp"

#include "supell/error.hpp"

namespace supell::cli {

namespace {

const Json& need(const Json& doc, const char* key)
{
    if (!doc.is_object()) fail(Errc::parse, std::string("expected an object holding '") + key + "'");
    auto it = doc.find(key);
    if (it == doc.end()) fail(Errc::parse, std::string("missing key '") + key + "'");
    return *it;
}

int small_int(const Json& v, const char* what)
{
    if (!v.is_number_integer()) fail(Errc::parse, std::string(what) + " must be an integer");
    return v.get<int>();
}

}  // namespace

Field field_from(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("field")) return Field::rationals();
    const Json& f = doc["field"];
    if (!f.is_string()) fail(Errc::parse, "field must be a string");
    return Field::parse(f.get<std::string>());
}

Json encode(const Scalar& s) { return s.str(); }

Scalar decode_scalar(const Json& v, Field F)
{
    if (v.is_string()) return Scalar::parse(F, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::parse(F, v.dump());
    fail(Errc::parse, "scalar must be a string like \"3/7\" or an integer, got " + v.dump());
}

Json encode(const mpz_class& z) { return z.get_str(); }

mpz_class decode_integer(const Json& v)
{
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_number_integer())
        s = v.dump();
    else
        fail(Errc::parse, "integer expected, got " + v.dump());
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) fail(Errc::parse, "bad integer '" + s + "'");
    return z;
}

Json encode(const Poly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(encode(c));
    return a;
}

Poly decode_poly(const Json& v, Field F)
{
    if (!v.is_array()) fail(Errc::parse, "polynomial must be an array of coefficients");
    std::vector<Scalar> c;
    for (const auto& x : v) c.push_back(decode_scalar(x, F));
    return Poly(F, std::move(c));
}

Json encode(const SuperellipticCurve& C)
{
    return Json{{"n", C.n}, {"f", encode(C.f)}, {"field", C.field().name()}};
}

SuperellipticCurve decode_curve(const Json& doc)
{
    Field F = field_from(doc);
    return SuperellipticCurve(small_int(need(doc, "n"), "n"), decode_poly(need(doc, "f"), F));
}

Json encode(const HyperCurve& C)
{
    Json j{{"n", 2}, {"f", encode(C.f())}};
    if (!C.h().is_zero()) j["h"] = encode(C.h());
    j["field"] = C.field().name();
    return j;
}

HyperCurve decode_hyper(const Json& doc)
{
    Field F = field_from(doc);
    if (doc.contains("n") && small_int(doc["n"], "n") != 2)
        fail(Errc::unsupported, "Jacobian arithmetic is implemented for y^2 + h y = f only");
    Poly f = decode_poly(need(doc, "f"), F);
    Poly h = doc.contains("h") ? decode_poly(doc["h"], F) : Poly(F);
    return HyperCurve(std::move(f), std::move(h));
}

Json encode(const BinaryForm& f)
{
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(encode(c));
    return Json{{"coeffs", a}, {"field", f.field().name()}};
}

BinaryForm decode_form(const Json& doc)
{
    Field F = field_from(doc);
    const Json& a = need(doc, "coeffs");
    if (!a.is_array() || a.empty()) fail(Errc::parse, "coeffs must be a nonempty array");
    std::vector<Scalar> c;
    for (const auto& x : a) c.push_back(decode_scalar(x, F));
    return BinaryForm(F, std::move(c));
}

Json encode(const WeightedPoint& p)
{
    Json c = Json::array();
    for (const auto& x : p.coords) c.push_back(encode(x));
    return Json{{"coords", c}, {"weights", p.weights}, {"field", p.field().name()}};
}

WeightedPoint decode_point(const Json& doc)
{
    Field F = field_from(doc);
    const Json& c = need(doc, "coords");
    const Json& w = need(doc, "weights");
    if (!c.is_array() || !w.is_array()) fail(Errc::parse, "coords and weights must be arrays");
    std::vector<Scalar> coords;
    std::vector<int> weights;
    for (const auto& x : c) coords.push_back(decode_scalar(x, F));
    for (const auto& x : w) weights.push_back(small_int(x, "weight"));
    return WeightedPoint(std::move(coords), std::move(weights));
}

Json encode(const Height& h)
{
    return Json{{"radicand", h.radicand.get_str()}, {"root", h.root}, {"approx", h.approx}};
}

Json encode(const MumfordDivisor& D) { return Json{{"u", encode(D.u)}, {"v", encode(D.v)}}; }

MumfordDivisor decode_divisor(const Json& doc, Field F)
{
    return MumfordDivisor{decode_poly(need(doc, "u"), F), decode_poly(need(doc, "v"), F)};
}

Json encode(const EllipticModel& E)
{
    return Json{{"a1", encode(E.a1)}, {"a2", encode(E.a2)}, {"a3", encode(E.a3)}, {"a4", encode(E.a4)},
                {"a6", encode(E.a6)}};
}

EllipticModel decode_model(const Json& doc)
{
    return EllipticModel{decode_integer(need(doc, "a1")), decode_integer(need(doc, "a2")),
                         decode_integer(need(doc, "a3")), decode_integer(need(doc, "a4")),
                         decode_integer(need(doc, "a6"))};
}

Json encode(const WeierstrassChange& w)
{
    return Json{{"u", w.u.get_str()}, {"r", w.r.get_str()}, {"s", w.s.get_str()}, {"t", w.t.get_str()}};
}

Json encode(const AutRecord& r)
{
    Json j;
    j["source"] = source_name(r.source);
    j["genus"] = r.genus;
    j["row"] = r.row;
    j["reduced_group"] = r.reduced_group.empty() ? Json(nullptr) : Json(r.reduced_group);
    j["group"] = r.group.empty() ? Json(nullptr) : Json(r.group);
    j["group_id"] = r.group_id ? Json::array({r.group_id->first, r.group_id->second}) : Json(nullptr);
    j["order"] = r.order;
    j["n"] = r.n ? Json(*r.n) : Json(nullptr);
    j["m"] = r.m ? Json(*r.m) : Json(nullptr);
    j["quotient_genus"] = r.quotient_genus;
    j["signature"] = r.signature;
    j["delta"] = r.delta ? Json(*r.delta) : Json(nullptr);
    return j;
}

Json encode(const HalfIntChar& m)
{
    Json top = Json::array(), bottom = Json::array();
    for (int i = 0; i < m.g; ++i) {
        top.push_back((m.top >> i & 1) ? "1/2" : "0");
        bottom.push_back((m.bottom >> i & 1) ? "1/2" : "0");
    }
    return Json{{"top", top}, {"bottom", bottom}};
}

}  // namespace supell::cli
