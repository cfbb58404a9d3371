#include "commands.hpp"

#include <algorithm>

#include "supell/invariants.hpp"

namespace supell::cli {

namespace {

const Json& need(const Json& args, const std::string& key)
{
    auto it = args.find(key);
    if (it == args.end() || it->is_null()) fail(Errc::usage, "missing --" + key);
    return *it;
}

bool has(const Json& args, const std::string& key) { return args.contains(key) && !args[key].is_null(); }

long get_int(const Json& args, const std::string& key)
{
    const Json& v = need(args, key);
    if (!v.is_number_integer()) fail(Errc::parse, "--" + key + " must be an integer");
    return v.get<long>();
}

long get_int(const Json& args, const std::string& key, long fallback)
{
    return has(args, key) ? get_int(args, key) : fallback;
}

int as_int(long v, const std::string& key)
{
    if (v < -1000000 || v > 1000000) fail(Errc::domain, "--" + key + " is out of range");
    return static_cast<int>(v);
}

std::string get_text(const Json& args, const std::string& key, std::string fallback)
{
    if (!has(args, key)) return fallback;
    const Json& v = args[key];
    if (!v.is_string()) fail(Errc::parse, "--" + key + " must be a string");
    return v.get<std::string>();
}

BinaryForm to_form(const Json& doc)
{
    if (doc.is_object() && doc.contains("coeffs")) return decode_form(doc);
    return curve_form(decode_curve(doc));
}

Json run_invariants(const Json& args)
{
    BinaryForm f = to_form(need(args, "curve"));
    Json out;
    out["degree"] = f.degree();
    if (f.degree() == 6) {
        auto s = igusa_sextic(f);
        out["J"] = Json{{"J2", encode(s.J2)}, {"J4", encode(s.J4)}, {"J6", encode(s.J6)}, {"J10", encode(s.J10)}};
        out["clebsch"] = Json{{"A", encode(s.A)}, {"B", encode(s.B)}, {"C", encode(s.C)}, {"D", encode(s.D)}};
        out["integral"] = Json{{"I2", encode(s.I2)}, {"I4", encode(s.I4)}, {"I6", encode(s.I6)}, {"I10", encode(s.I10)}};
    } else if (f.degree() == 8) {
        auto o = octavic_invariants(f);
        Json J;
        for (int i = 2; i <= 10; ++i) J["J" + std::to_string(i)] = encode(o(i));
        out["J"] = J;
    } else {
        fail(Errc::unsupported, "invariants are implemented for binary sextics and octavics");
    }
    out["profile"] = profile_name(multiplicity_profile(f));
    return out;
}

Json run_equivalent(const Json& args)
{
    BinaryForm f = to_form(need(args, "curve")), g = to_form(need(args, "other"));
    if (f.degree() != g.degree()) fail(Errc::domain, "forms of different degree");
    std::optional<Scalar> s;
    if (f.degree() == 6)
        s = sextic_equivalent(f, g);
    else if (f.degree() == 8)
        s = octavic_equivalent(f, g);
    else
        fail(Errc::unsupported, "equivalence is implemented for sextics and octavics");
    return Json{{"equivalent", s.has_value()}, {"scale", s ? encode(*s) : Json(nullptr)}};
}

Json run_moduli_point(const Json& args)
{
    auto C = decode_curve(need(args, "curve"));
    WeightedPoint p = moduli_point(C);
    Json out{{"point", encode(p)}};
    if (p.field().is_rational()) out["normalized"] = encode(normalize(p));
    return out;
}

Json run_height(const Json& args)
{
    WeightedPoint p = decode_point(need(args, "point"));
    return Json{{"height", encode(weighted_height(p))}, {"normalized", encode(normalize(p))}};
}

Json run_wgcd(const Json& args)
{
    WeightedPoint p = decode_point(need(args, "point"));
    if (has(args, "weights")) {
        const Json& w = args["weights"];
        if (!w.is_array()) fail(Errc::parse, "--weights must be a JSON array");
        std::vector<int> weights;
        for (const auto& x : w) {
            if (!x.is_number_integer()) fail(Errc::parse, "weights must be integers");
            weights.push_back(x.get<int>());
        }
        return Json{{"wgcd", encode(wgcd(p, weights))}};
    }
    return Json{{"wgcd", encode(wgcd(p))}};
}

Json run_minimal(const Json& args)
{
    auto R = superelliptic_minimal(decode_curve(need(args, "curve")));
    Json rows = Json::array();
    for (const auto& row : R.valuations)
        rows.push_back(Json{{"prime", encode(row.prime)}, {"before", row.before}, {"after", row.after}});
    return Json{{"curve", encode(R.curve)},
                {"lambda", encode(R.lambda)},
                {"isomorphism", R.isomorphism},
                {"integral", R.integral},
                {"before", encode(R.before)},
                {"after", encode(R.after)},
                {"scaled_weights", R.scaled_weights},
                {"valuations", rows}};
}

Json run_laska(const Json& args)
{
    auto R = laska_reduce(decode_model(need(args, "model")));
    Json rows = Json::array();
    for (const auto& v : R.valuations)
        rows.push_back(Json{{"prime", encode(v.prime)}, {"before", v.before}, {"after", v.after}});
    return Json{{"model", encode(R.model)},
                {"change", encode(R.change)},
                {"disc_before", encode(R.disc_before)},
                {"disc_after", encode(R.disc_after)},
                {"valuations", rows}};
}

Json run_genus(const Json& args)
{
    return Json{{"g", genus(as_int(get_int(args, "n"), "n"), as_int(get_int(args, "d"), "d"))}};
}

Json run_gap_basis(const Json& args)
{
    int n = as_int(get_int(args, "n"), "n"), d = as_int(get_int(args, "d"), "d");
    int q = as_int(get_int(args, "q", 1), "q");
    auto B = weierstrass_gap_basis(n, d, q);
    Json S = Json::array();
    for (auto [a, b] : B.S) S.push_back(Json::array({a, b}));
    return Json{{"g", genus(n, d)}, {"S", S}, {"d_q", B.d_q}, {"branch_weight", branch_weight(n, d, q)}};
}

std::optional<AtlasSource> source_from(const std::string& s)
{
    for (auto src : {AtlasSource::formula, AtlasSource::genus3_table, AtlasSource::genus4_table,
                     AtlasSource::genus4_locus, AtlasSource::genus3_ids})
        if (s == source_name(src)) return src;
    fail(Errc::usage, "unknown source '" + s + "'");
}

Json run_aut_lookup(const Json& args)
{
    Json recs = Json::array();
    if (get_int(args, "all", 0)) {
        for (const auto& r : atlas_records()) recs.push_back(encode(r));
        return Json{{"version", 1}, {"records", recs}};
    }
    AutFilter f;
    if (has(args, "n")) f.n = as_int(get_int(args, "n"), "n");
    if (has(args, "m")) f.m = as_int(get_int(args, "m"), "m");
    if (has(args, "case")) f.row = as_int(get_int(args, "case"), "case");
    if (has(args, "reduced")) f.reduced_group = get_text(args, "reduced", "");
    if (has(args, "source")) f.source = source_from(get_text(args, "source", ""));
    for (const auto& r : aut_lookup(as_int(get_int(args, "g"), "g"), f)) recs.push_back(encode(r));
    return Json{{"version", 1}, {"records", recs}};
}

Json run_family_eq(const Json& args)
{
    Field F = Field::parse(get_text(args, "field", "Q"));
    std::vector<Scalar> params;
    if (has(args, "params")) {
        const Json& p = args["params"];
        if (!p.is_array()) fail(Errc::parse, "--params must be a JSON array");
        for (const auto& x : p) params.push_back(decode_scalar(x, F));
    }
    int c = as_int(get_int(args, "case"), "case");
    auto C = family_equation(c, as_int(get_int(args, "n"), "n"), as_int(get_int(args, "m", 0), "m"), params, F);
    return Json{{"case", c}, {"delta", params.size()}, {"curve", encode(C)}};
}

Json run_split(const Json& args)
{
    if (has(args, "curve")) {
        auto C = decode_curve(args["curve"]);
        auto Q = quotient_equations(C, as_int(get_int(args, "m", 0), "m"));
        int delta = Q.first.degree();
        auto s = split_jacobian(C.n, Q.m, delta);
        return Json{{"m", Q.m},
                    {"delta", delta},
                    {"first", encode(Q.first)},
                    {"second", encode(Q.second)},
                    {"decomposes", s.decomposes},
                    {"lhs", s.lhs},
                    {"rhs", s.rhs}};
    }
    auto s = split_jacobian(as_int(get_int(args, "n"), "n"), as_int(get_int(args, "m"), "m"),
                            as_int(get_int(args, "delta"), "delta"));
    return Json{{"decomposes", s.decomposes}, {"lhs", s.lhs}, {"rhs", s.rhs}};
}

Json run_jac_validate(const Json& args)
{
    HyperCurve C = decode_hyper(need(args, "curve"));
    const Json& d = need(args, "divisor");
    auto D = decode_divisor(d, C.field());
    auto defect = mumford_check(D.u, D.v, C);
    return Json{{"valid", defect == MumfordDefect::none}, {"defect", defect_name(defect)}};
}

Json run_jac_add(const Json& args)
{
    HyperCurve C = decode_hyper(need(args, "curve"));
    auto a = decode_divisor(need(args, "a"), C.field());
    auto b = decode_divisor(need(args, "b"), C.field());
    a = mumford_validate(a.u, a.v, C);
    b = mumford_validate(b.u, b.v, C);
    std::string method = get_text(args, "method", "cantor");
    if (method == "cantor") return Json{{"sum", encode(cantor_add(C, a, b))}};
    if (method == "interpolation") {
        auto s = interpolation_add_g2(C, a, b);
        return Json{{"sum", encode(s.sum)}, {"fallback", s.fallback}, {"vieta_ok", s.vieta_ok}};
    }
    fail(Errc::usage, "--method must be cantor or interpolation");
}

Json run_jac_order(const Json& args)
{
    auto J = jacobian_order_g2(decode_hyper(need(args, "curve")));
    return Json{{"q", J.q},         {"n1", J.n1},           {"n2", J.n2},
                {"a", encode(J.a)}, {"b", encode(J.b)},     {"order", encode(J.order)},
                {"hasse", J.in_hasse_interval}};
}

Json run_theta_census(const Json& args)
{
    auto c = theta_census(as_int(get_int(args, "g"), "g"));
    return Json{{"g", c.g}, {"even", c.even}, {"odd", c.odd}, {"vanishing", c.vanishing}, {"nonvanishing", c.nonvanishing}};
}

Json run_gopel(const Json& args)
{
    int g = as_int(get_int(args, "g"), "g"), r = as_int(get_int(args, "r"), "r");
    return Json{{"g", g}, {"r", r}, {"count", encode(gopel_count(g, r))}};
}

using K = OptKind;

std::vector<Command> build()
{
    return {
        {"invariants", "Igusa/Clebsch invariants of a sextic, J2..J10 of an octavic",
         {{"curve", K::document, "curve document (n = 2, deg 5..8) or {\"coeffs\": [...]} binary form"}},
         run_invariants},
        {"equivalent", "decide GL2 equivalence of two sextics or octavics via invariants",
         {{"curve", K::document, "first curve or form"}, {"other", K::document, "second curve or form"}},
         run_equivalent},
        {"moduli-point", "weighted moduli point of a genus 2 or genus 3 hyperelliptic curve",
         {{"curve", K::document, "curve document"}}, run_moduli_point},
        {"height", "weighted height of a point", {{"point", K::document, "weighted point document"}}, run_height},
        {"wgcd", "weighted gcd of an integral point",
         {{"point", K::document, "weighted point document"}, {"weights", K::document, "override weights, JSON array"}},
         run_wgcd},
        {"minimal", "minimal model of a sextic or octavic over Q", {{"curve", K::document, "curve document"}},
         run_minimal},
        {"laska", "minimal Weierstrass model of an elliptic curve over Q",
         {{"model", K::document, "{\"a1\": ..., \"a2\": ..., \"a3\": ..., \"a4\": ..., \"a6\": ...}"}}, run_laska},
        {"genus", "genus of y^n = f(x), deg f = d", {{"n", K::integer, "level"}, {"d", K::integer, "degree of f"}},
         run_genus},
        {"gap-basis", "q-gap basis exponents and branch point weight",
         {{"n", K::integer, "level"}, {"d", K::integer, "degree"}, {"q", K::integer, "order of differentials (1)"}},
         run_gap_basis},
        {"aut-lookup", "automorphism group records for 2 <= g <= 10",
         {{"g", K::integer, "genus"},
          {"n", K::integer, "level filter"},
          {"m", K::integer, "m filter"},
          {"case", K::integer, "row/case filter"},
          {"reduced", K::text, "reduced group filter, e.g. V4"},
          {"source", K::text, "formula|genus3-table|genus4-table|genus4-locus|genus3-ids"},
          {"all", K::integer, "1: export every record"}},
         run_aut_lookup},
        {"family-eq", "equation y^n = f(x) for cases 1..31",
         {{"case", K::integer, "case id"},
          {"n", K::integer, "level"},
          {"m", K::integer, "order of the cyclic part (cases 1-9)"},
          {"params", K::document, "JSON array of parameters, its length is the dimension"},
          {"field", K::text, "Q or GF(p)"}},
         run_family_eq},
        {"split", "Jacobian splitting test, or quotient curves of y^n = g(x^m)",
         {{"n", K::integer, "level"},
          {"m", K::integer, "order of the extra automorphism"},
          {"delta", K::integer, "degree of g"},
          {"curve", K::document, "curve with f(x) = g(x^m)"}},
         run_split},
        {"jac-validate", "check a Mumford pair",
         {{"curve", K::document, "curve y^2 + h y = f"}, {"divisor", K::document, "{\"u\": [...], \"v\": [...]}"}},
         run_jac_validate},
        {"jac-add", "add two divisor classes",
         {{"curve", K::document, "curve y^2 + h y = f"},
          {"a", K::document, "first divisor"},
          {"b", K::document, "second divisor"},
          {"method", K::text, "cantor (default) or interpolation"}},
         run_jac_add},
        {"jac-order", "order of a genus 2 Jacobian over GF(p)", {{"curve", K::document, "curve over GF(p)"}},
         run_jac_order},
        {"theta-census", "even/odd characteristics and vanishing thetanulls", {{"g", K::integer, "genus"}},
         run_theta_census},
        {"gopel", "number of Goepel groups of order 2^r", {{"g", K::integer, "genus"}, {"r", K::integer, "rank"}},
         run_gopel},
    };
}

}  // namespace

const std::vector<Command>& commands()
{
    static const std::vector<Command> table = build();
    return table;
}

const Command* find_command(std::string_view name)
{
    for (const auto& c : commands())
        if (c.name == name) return &c;
    return nullptr;
}

int exit_code(Errc c)
{
    switch (c) {
    case Errc::usage: return 2;
    case Errc::parse: return 4;
    default: return 3;
    }
}

Json error_object(Errc c, const std::string& message)
{
    return Json{{"error", Json{{"code", errc_name(c)}, {"message", message}}}};
}

Outcome run_captured(const Command& cmd, const Json& args)
{
    try {
        if (!args.is_object()) fail(Errc::parse, "arguments must be a JSON object");
        for (auto it = args.begin(); it != args.end(); ++it)
            if (std::none_of(cmd.options.begin(), cmd.options.end(),
                             [&](const OptSpec& o) { return o.name == it.key(); }))
                fail(Errc::usage, "unknown key '" + it.key() + "' for " + cmd.name);
        return {cmd.run(args), 0};
    } catch (const Error& e) {
        return {error_object(e.code(), e.what()), exit_code(e.code())};
    } catch (const nlohmann::json::exception& e) {
        return {error_object(Errc::parse, e.what()), exit_code(Errc::parse)};
    } catch (const std::exception& e) {
        return {error_object(Errc::domain, e.what()), exit_code(Errc::domain)};
    }
}

}  // namespace supell::cli
