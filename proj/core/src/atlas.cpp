#include "supell/atlas.hpp"

#include <algorithm>
#include <numeric>

#include "supell/error.hpp"

namespace supell {

int genus(int n, int d)
{
    if (n < 2 || d < 1) fail(Errc::domain, "genus needs n >= 2 and d >= 1");
    return (n * d - n - d - std::gcd(n, d) + 2) / 2;
}

GapBasis weierstrass_gap_basis(int n, int d, int q)
{
    int g = genus(n, d);
    if (g < 2) fail(Errc::domain, "gap basis needs genus at least 2, got " + std::to_string(g));
    if (q < 1) fail(Errc::domain, "q must be positive");
    GapBasis B;
    long bound = static_cast<long>(2 * g - 2) * q;
    for (int b = 0; b < n; ++b)
        for (int a = 0; static_cast<long>(a) * n + static_cast<long>(b) * d <= bound; ++a)
            B.S.emplace_back(a, b);
    std::sort(B.S.begin(), B.S.end(), [n](auto x, auto y) {
        return x.first * n + x.second < y.first * n + y.second;
    });
    B.d_q = q == 1 ? g : (g - 1) * (2 * q - 1);
    return B;
}

long branch_weight(int n, int d, int q)
{
    GapBasis B = weierstrass_gap_basis(n, d, q);
    long w = 0;
    for (auto [a, b] : B.S) w += static_cast<long>(a) * n + b + 1;
    long k = static_cast<long>(B.S.size());
    return w - k * (k + 1) / 2;
}

const char* source_name(AtlasSource s)
{
    switch (s) {
    case AtlasSource::formula: return "formula";
    case AtlasSource::genus3_table: return "genus3-table";
    case AtlasSource::genus4_table: return "genus4-table";
    case AtlasSource::genus4_locus: return "genus4-locus";
    case AtlasSource::genus3_ids: return "genus3-ids";
    }
    return "?";
}

namespace {

enum class Reduced { cyclic, dihedral, A4, S4, A5 };

struct FormulaRow {
    int id;
    Reduced kind;
    int base[3];
    int lifted;     // bit i set: entry i is multiplied by n
    int c;          // polyhedral rows: delta = (g - c (n - 1)) / (k (n - 1))
    int trailing;   // extra copies of n beyond delta
};

const FormulaRow kRows[] = {
    {1, Reduced::cyclic, {0, 0, 0}, 0b00, 0, 1},
    {2, Reduced::cyclic, {0, 0, 0}, 0b10, 0, 1},
    {3, Reduced::cyclic, {0, 0, 0}, 0b11, 0, 1},
    {4, Reduced::dihedral, {2, 2, 0}, 0b000, 0, 0},
    {5, Reduced::dihedral, {2, 2, 0}, 0b001, 0, 0},
    {6, Reduced::dihedral, {2, 2, 0}, 0b100, 0, 0},
    {7, Reduced::dihedral, {2, 2, 0}, 0b011, 0, 0},
    {8, Reduced::dihedral, {2, 2, 0}, 0b101, 0, 0},
    {9, Reduced::dihedral, {2, 2, 0}, 0b111, 0, 0},
    {10, Reduced::A4, {2, 3, 3}, 0b000, -1, 0},
    {11, Reduced::A4, {2, 3, 3}, 0b010, 1, 0},
    {12, Reduced::A4, {2, 3, 3}, 0b110, 3, 0},
    {13, Reduced::A4, {2, 3, 3}, 0b001, 2, 0},
    {14, Reduced::A4, {2, 3, 3}, 0b011, 4, 0},
    {15, Reduced::A4, {2, 3, 3}, 0b111, 6, 0},
    {16, Reduced::S4, {2, 3, 4}, 0b000, -1, 0},
    {17, Reduced::S4, {2, 3, 4}, 0b010, 3, 0},
    {18, Reduced::S4, {2, 3, 4}, 0b100, 2, 0},
    {19, Reduced::S4, {2, 3, 4}, 0b110, 6, 0},
    {20, Reduced::S4, {2, 3, 4}, 0b001, 5, 0},
    {21, Reduced::S4, {2, 3, 4}, 0b011, 9, 0},
    {22, Reduced::S4, {2, 3, 4}, 0b101, 8, 0},
    {23, Reduced::S4, {2, 3, 4}, 0b111, 12, 0},
    {24, Reduced::A5, {2, 3, 5}, 0b000, -1, 0},
    {25, Reduced::A5, {2, 3, 5}, 0b100, 5, 0},
    {26, Reduced::A5, {2, 3, 5}, 0b110, 15, 0},
    {27, Reduced::A5, {2, 3, 5}, 0b010, 9, 0},
    {28, Reduced::A5, {2, 3, 5}, 0b001, 14, 0},
    {29, Reduced::A5, {2, 3, 5}, 0b101, 20, 0},
    {30, Reduced::A5, {2, 3, 5}, 0b011, 24, 0},
    {31, Reduced::A5, {2, 3, 5}, 0b111, 30, 0},
};

// Exact quotient num/den if it is an integer.
std::optional<long> exact(long num, long den)
{
    if (den == 0 || num % den != 0) return std::nullopt;
    return num / den;
}

std::optional<long> formula_delta(const FormulaRow& r, long g, long n, long m)
{
    long e = n - 1;
    std::optional<long> q;
    switch (r.id) {
    case 1: q = exact(2 * (g + n - 1), m * e); break;
    case 2: q = exact(2 * g + n - 1, m * e); break;
    case 3: q = exact(2 * g, m * e); break;
    case 4: return exact(g + n - 1, m * e);
    case 5: return exact(2 * g + m + 2 * n - n * m - 2, 2 * m * e);
    case 6: return exact(g, m * e);
    case 7: return exact(g + m + n - m * n - 1, m * e);
    case 8: return exact(2 * g + m - m * n, 2 * m * e);
    case 9: return exact(g + m - m * n, m * e);
    default: {
        long k = r.kind == Reduced::A4 ? 6 : r.kind == Reduced::S4 ? 12 : 30;
        return exact(g - r.c * e, k * e);
    }
    }
    if (!q) return q;
    return *q - 1;
}

std::string cyclic_name(int m) { return m == 1 ? "{I}" : "C" + std::to_string(m); }
std::string dihedral_name(int m) { return m == 2 ? "V4" : "D" + std::to_string(2 * m); }

void instantiate(std::vector<AutRecord>& out)
{
    for (int g = 2; g <= 10; ++g) {
        for (const FormulaRow& r : kRows) {
            bool uses_m = r.kind == Reduced::cyclic || r.kind == Reduced::dihedral;
            int m_hi = uses_m ? 4 * g + 2 : 2;
            for (int n = 2; n <= 4 * g + 2; ++n) {
                for (int m = 2; m <= m_hi; ++m) {
                    auto delta = formula_delta(r, g, n, m);
                    if (!delta || *delta < 0) continue;
                    AutRecord rec;
                    rec.source = AtlasSource::formula;
                    rec.genus = g;
                    rec.row = r.id;
                    rec.n = n;
                    rec.delta = static_cast<int>(*delta);
                    int reduced_order = 0;
                    switch (r.kind) {
                    case Reduced::cyclic:
                        rec.reduced_group = cyclic_name(m);
                        reduced_order = m;
                        rec.signature = {m, m};
                        break;
                    case Reduced::dihedral:
                        rec.reduced_group = dihedral_name(m);
                        reduced_order = 2 * m;
                        rec.signature = {2, 2, m};
                        break;
                    case Reduced::A4: rec.reduced_group = "A4"; reduced_order = 12; break;
                    case Reduced::S4: rec.reduced_group = "S4"; reduced_order = 24; break;
                    case Reduced::A5: rec.reduced_group = "A5"; reduced_order = 60; break;
                    }
                    if (uses_m)
                        rec.m = m;
                    else
                        rec.signature = {r.base[0], r.base[1], r.base[2]};
                    for (std::size_t i = 0; i < rec.signature.size(); ++i)
                        if (r.lifted >> i & 1) rec.signature[i] *= n;
                    rec.signature.insert(rec.signature.end(), *delta + r.trailing, n);
                    rec.order = reduced_order * n;
                    out.push_back(std::move(rec));
                }
            }
        }
    }
}

AutRecord table_row(AtlasSource src, int g, int row, std::string reduced, std::string group, int order,
                    int n, int m, std::vector<int> sig, int delta)
{
    AutRecord r;
    r.source = src;
    r.genus = g;
    r.row = row;
    r.reduced_group = std::move(reduced);
    r.group = std::move(group);
    r.order = order;
    r.n = n;
    r.m = m;
    r.signature = std::move(sig);
    r.delta = delta;
    return r;
}

AutRecord locus(int row, int dim, std::string group, int order, int gap, int h, std::vector<int> sig)
{
    AutRecord r;
    r.source = AtlasSource::genus4_locus;
    r.genus = 4;
    r.row = row;
    r.group = std::move(group);
    r.group_id = std::make_pair(order, gap);
    r.order = order;
    r.quotient_genus = h;
    r.signature = std::move(sig);
    r.delta = dim;
    return r;
}

std::vector<AutRecord> build_records()
{
    std::vector<AutRecord> out;
    instantiate(out);

    using S = AtlasSource;
    // superelliptic genus 3: (reduced, G, |G|, n, m, signature, delta)
    out.push_back(table_row(S::genus3_table, 3, 1, "{I}", "C2", 2, 2, 1, {2, 2, 2, 2, 2, 2, 2, 2}, 5));
    out.push_back(table_row(S::genus3_table, 3, 2, "C2", "V4", 4, 2, 2, {2, 2, 2, 2, 2, 2}, 3));
    out.push_back(table_row(S::genus3_table, 3, 3, "C2", "C4", 4, 2, 2, {2, 2, 2, 4, 4}, 2));
    out.push_back(table_row(S::genus3_table, 3, 4, "C2", "C6", 6, 3, 2, {2, 3, 3, 6}, 1));
    out.push_back(table_row(S::genus3_table, 3, 5, "V4", "V4xC4", 16, 4, 2, {2, 2, 2, 4}, 1));

    // superelliptic genus 4
    out.push_back(table_row(S::genus4_table, 4, 1, "{I}", "C2", 2, 2, 1, std::vector<int>(10, 2), 7));
    out.push_back(table_row(S::genus4_table, 4, 2, "C2", "V4", 4, 2, 2, std::vector<int>(7, 2), 4));
    out.push_back(table_row(S::genus4_table, 4, 3, "C2", "C4", 4, 2, 2, {2, 2, 2, 2, 4, 4}, 3));
    out.push_back(table_row(S::genus4_table, 4, 4, "C3", "C6", 6, 2, 3, {2, 2, 2, 3, 6}, 2));
    out.push_back(table_row(S::genus4_table, 4, 5, "{I}", "C3", 3, 3, 1, {3, 3, 3, 3, 3, 3}, 3));
    out.push_back(table_row(S::genus4_table, 4, 6, "C2", "C2xC3", 6, 3, 2, {2, 2, 3, 3, 3}, 2));
    out.push_back(table_row(S::genus4_table, 4, 7, "D6", "D6xC3", 18, 3, 3, {2, 2, 3, 3}, 1));
    out.push_back(table_row(S::genus4_table, 4, 8, "V4", "V4xC3", 12, 3, 2, {2, 2, 3, 6}, 1));
    out.push_back(table_row(S::genus4_table, 4, 9, "V4", "V4xC3", 12, 3, 2, {2, 2, 3, 6}, 1));

    // genus 4 loci: (row, dim, G, id, quotient genus, signature)
    out.push_back(locus(1, 0, "S5", 120, 34, 0, {2, 4, 5}));
    out.push_back(locus(2, 0, "C3xS4", 72, 42, 0, {2, 3, 12}));
    out.push_back(locus(3, 0, "", 72, 40, 0, {2, 4, 6}));
    out.push_back(locus(4, 0, "V10", 40, 8, 0, {2, 4, 10}));
    out.push_back(locus(5, 0, "C6xS3", 36, 12, 0, {2, 6, 6}));
    out.push_back(locus(6, 0, "U8", 32, 19, 0, {2, 4, 16}));
    out.push_back(locus(7, 0, "SL2(3)", 24, 3, 0, {3, 4, 6}));
    out.push_back(locus(8, 0, "C18", 18, 2, 0, {2, 9, 18}));
    out.push_back(locus(9, 0, "C15", 15, 1, 0, {3, 5, 15}));
    out.push_back(locus(10, 0, "C12", 12, 2, 0, {4, 6, 12}));
    out.push_back(locus(11, 0, "C10", 10, 2, 0, {5, 10, 10}));
    out.push_back(locus(12, 1, "S3^2", 36, 10, 0, {2, 2, 2, 3}));
    out.push_back(locus(13, 1, "S4", 24, 12, 0, {2, 2, 2, 4}));
    out.push_back(locus(14, 1, "C2xD5", 20, 4, 0, {2, 2, 2, 5}));
    out.push_back(locus(15, 1, "C3xS3", 18, 3, 0, {2, 2, 3, 3}));
    out.push_back(locus(16, 1, "D8", 16, 7, 0, {2, 2, 2, 8}));
    out.push_back(locus(17, 1, "C2xC6", 12, 5, 0, {2, 2, 3, 6}));
    out.push_back(locus(18, 1, "C2xS3", 12, 4, 0, {2, 2, 3, 6}));
    out.push_back(locus(19, 1, "A4", 12, 3, 0, {2, 3, 3, 3}));
    out.push_back(locus(20, 1, "D10", 10, 1, 0, {2, 2, 5, 5}));
    out.push_back(locus(21, 1, "Q8", 8, 4, 0, {2, 4, 4, 4}));
    out.push_back(locus(22, 1, "C6", 6, 2, 0, {2, 6, 6, 6}));
    out.push_back(locus(23, 1, "C5", 5, 1, 0, {5, 5, 5, 5}));
    out.push_back(locus(24, 2, "D6", 12, 4, 0, {2, 2, 2, 2, 2}));
    out.push_back(locus(25, 2, "D4", 8, 3, 0, {2, 2, 2, 2, 4}));
    out.push_back(locus(26, 2, "D4", 8, 3, 0, {2, 2, 2, 2, 4}));
    out.push_back(locus(27, 2, "C6", 6, 2, 0, {2, 2, 2, 3, 6}));
    out.push_back(locus(28, 2, "C6", 6, 2, 0, {2, 2, 3, 3, 3}));
    out.push_back(locus(29, 2, "S3", 6, 1, 0, {2, 2, 3, 3, 3}));
    out.push_back(locus(30, 2, "C4", 4, 1, 0, {2, 4, 4, 4, 4}));
    out.push_back(locus(31, 3, "S3", 6, 1, 0, {2, 2, 2, 2, 2, 2}));
    out.push_back(locus(32, 3, "V4", 4, 2, 1, {2, 2, 2}));
    out.push_back(locus(33, 3, "C4", 4, 1, 0, {2, 2, 2, 2, 4, 4}));
    out.push_back(locus(34, 3, "C3", 3, 1, 0, {3, 3, 3, 3, 3, 3}));
    out.push_back(locus(35, 3, "C3", 3, 1, 0, {3, 3, 3, 3, 3, 3}));
    out.push_back(locus(36, 3, "C3", 3, 1, 1, {3, 3, 3}));
    out.push_back(locus(37, 4, "V4", 4, 2, 0, {2, 2, 2, 2, 2, 2, 2}));
    out.push_back(locus(38, 4, "V4", 4, 2, 0, {2, 2, 2, 2, 2, 2, 2}));
    out.push_back(locus(39, 5, "C2", 2, 1, 2, {2, 2}));
    out.push_back(locus(40, 6, "C2", 2, 1, 1, {2, 2, 2, 2, 2, 2}));
    out.push_back(locus(41, 7, "C2", 2, 1, 0, std::vector<int>(10, 2)));

    // genus 3 superelliptic groups in characteristic 0, ids only
    const std::pair<int, int> ids[] = {{2, 1},  {4, 2},   {3, 1},   {4, 1},   {8, 2},  {14, 2},
                                       {6, 2},  {9, 1},   {8, 5},   {16, 11}, {32, 9}, {12, 4},
                                       {16, 13}, {24, 5}, {48, 33}, {48, 48}, {96, 64}};
    int k = 0;
    for (auto id : ids) {
        AutRecord r;
        r.source = S::genus3_ids;
        r.genus = 3;
        r.row = ++k;
        r.group_id = id;
        r.order = id.first;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

const std::vector<AutRecord>& atlas_records()
{
    static const std::vector<AutRecord> records = build_records();
    return records;
}

std::vector<AutRecord> aut_lookup(int g, const AutFilter& f)
{
    if (g < 2 || g > 10) fail(Errc::not_in_atlas, "genus " + std::to_string(g) + " is not in the atlas (2..10)");
    std::vector<AutRecord> out;
    for (const auto& r : atlas_records()) {
        if (r.genus != g) continue;
        if (f.n && r.n != f.n) continue;
        if (f.m && r.m != f.m) continue;
        if (f.row && r.row != *f.row) continue;
        if (f.reduced_group && r.reduced_group != *f.reduced_group) continue;
        if (f.source && r.source != *f.source) continue;
        out.push_back(r);
    }
    return out;
}

bool hurwitz_ok(const AutRecord& r) { return r.order >= 1 && r.order <= 84 * (r.genus - 1); }

bool riemann_hurwitz_ok(const AutRecord& r)
{
    if (r.signature.empty()) return true;
    // 2g - 2 = |G| (2h - 2) + sum |G| (c - 1) / c, each term must be integral
    long rhs = static_cast<long>(r.order) * (2 * r.quotient_genus - 2);
    for (int c : r.signature) {
        if (c < 2 || r.order % c != 0) return false;
        rhs += static_cast<long>(r.order) / c * (c - 1);
    }
    return rhs == 2L * r.genus - 2;
}

namespace {

Poly build(Field F, std::initializer_list<std::pair<int, long>> terms)
{
    Poly p(F);
    for (auto [e, c] : terms) p += Poly::monomial(Scalar(F, c), e);
    return p;
}

Scalar sqrt_minus_three(Field F)
{
    if (F.is_rational()) fail(Errc::unsupported, "cases 11 and 14 need sqrt(-3), which is not rational");
    Poly t = build(F, {{2, 1}, {0, 3}});
    auto r = roots_mod_p(t);
    if (r.empty()) fail(Errc::unsupported, "-3 is not a square in " + F.name());
    return r.front();
}

}  // namespace

SuperellipticCurve family_equation(int case_id, int n, int m, const std::vector<Scalar>& params, Field F)
{
    if (case_id >= 32 && case_id <= 45)
        fail(Errc::unsupported, "case " + std::to_string(case_id) + " lives in positive characteristic only");
    if (case_id < 1 || case_id > 45) fail(Errc::domain, "case must be in 1..31");
    if (case_id <= 9 && m < 1) fail(Errc::domain, "m must be positive");
    for (const auto& s : params)
        if (!(s.field() == F)) fail(Errc::domain, "parameters must lie in " + F.name());
    if (!F.is_rational() && F.characteristic() <= 5)
        fail(Errc::characteristic, "family equations need characteristic 0 or p > 5");

    const Poly X = Poly::x(F);
    const Poly one = Poly::constant(Scalar(F, 1L));
    const int delta = static_cast<int>(params.size());

    auto product = [&](auto&& factor) {
        Poly p = one;
        for (const auto& l : params) p *= factor(l);
        return p;
    };
    const Poly octahedral = build(F, {{8, 1}, {4, 14}, {0, 1}});
    const Poly tetra_face = build(F, {{12, 1}, {8, -33}, {4, -33}, {0, 1}});
    const Poly x_x4 = build(F, {{5, 1}, {1, -1}});
    const Poly ico12 = build(F, {{11, 1}, {6, 11}, {1, -1}});
    const Poly ico20 = build(F, {{20, 1}, {15, -228}, {10, 494}, {5, 228}, {0, 1}});
    const Poly ico30 = build(F, {{30, 1}, {25, 522}, {20, -10005}, {10, -10005}, {5, -522}, {0, 1}});

    Poly f(F);
    if (case_id <= 3) {
        f = Poly::monomial(Scalar(F, 1L), m * (delta + 1)) + one;
        for (int i = 0; i < delta; ++i) f += Poly::monomial(params[i], m * (delta - i));
        if (case_id == 3) f *= X;
    } else if (case_id <= 9) {
        Poly D = product([&](const Scalar& l) {
            return Poly::monomial(Scalar(F, 1L), 2 * m) + Poly::monomial(l, m) + one;
        });
        Poly xm1 = Poly::monomial(Scalar(F, 1L), m) - one;
        Poly x2m1 = Poly::monomial(Scalar(F, 1L), 2 * m) - one;
        switch (case_id) {
        case 4: f = D; break;
        case 5: f = xm1 * D; break;
        case 6: f = X * D; break;
        case 7: f = x2m1 * D; break;
        case 8: f = X * xm1 * D; break;
        case 9: f = X * x2m1 * D; break;
        }
    } else if (case_id <= 15) {
        Poly G = product([&](const Scalar& l) {
            return build(F, {{12, 1}, {8, -33}, {4, -33}, {0, 1}}) +
                   (build(F, {{6, 2}}) - build(F, {{10, 1}, {2, 1}})).scaled(l);
        });
        auto edge = [&] {
            return build(F, {{4, 1}, {0, 1}}) + Poly::monomial(Scalar(F, 2L) * sqrt_minus_three(F), 2);
        };
        switch (case_id) {
        case 10: f = G; break;
        case 11: f = edge() * G; break;
        case 12: f = octahedral * G; break;
        case 13: f = x_x4 * G; break;
        case 14: f = x_x4 * edge() * G; break;
        case 15: f = x_x4 * octahedral * G; break;
        }
    } else if (case_id <= 23) {
        Poly M = product([&](const Scalar& l) {
            Poly fixed = build(F, {{24, 1}, {16, 759}, {12, 2456}, {8, 759}, {0, 1}});
            Poly slope = build(F, {{20, 1}, {16, -4}, {12, 6}, {8, -4}, {4, 1}});
            return fixed + slope.scaled(l);
        });
        Poly T = (case_id >= 20) ? tetra_face : one;
        switch ((case_id - 16) % 4) {
        case 0: f = T * M; break;
        case 1: f = T * octahedral * M; break;
        case 2: f = T * x_x4 * M; break;
        case 3: f = T * octahedral * x_x4 * M; break;
        }
    } else {
        Poly L = product([&](const Scalar& l) {
            Poly e20 = ico20 * ico20 * ico20;
            Poly e12 = ico12 * ico12 * ico12 * ico12 * ico12;
            return -(e20 + e12.scaled(l));
        });
        switch (case_id) {
        case 24: f = L; break;
        case 25: f = ico12 * L; break;
        case 26: f = ico20 * ico12 * L; break;
        case 27: f = ico20 * L; break;
        case 28: f = ico30 * L; break;
        case 29: f = ico12 * ico30 * L; break;
        case 30: f = ico20 * ico30 * L; break;
        case 31: f = ico20 * ico12 * ico30 * L; break;
        }
    }
    if (f.degree() < 1) fail(Errc::domain, "the specialization is constant");
    if (!is_squarefree(f)) fail(Errc::domain, "degenerate parameters: f has a repeated root");
    return SuperellipticCurve(n, f);
}

SplitCheck split_jacobian(int n, int m, int delta)
{
    if (n < 2 || m < 2 || delta < 1) fail(Errc::domain, "split_jacobian needs n >= 2, m >= 2, delta >= 1");
    SplitCheck s;
    s.lhs = static_cast<long>(delta) * (n - 1) * (m - 2);
    s.rhs = 1 - (std::gcd(delta + 1, n) + std::gcd(delta, n) - std::gcd(delta * m, n));
    s.decomposes = s.lhs == s.rhs;
    return s;
}

Quotients quotient_equations(const SuperellipticCurve& C, int m)
{
    const auto& c = C.f.coeffs();
    int span = 0;
    for (int i = 1; i < static_cast<int>(c.size()); ++i)
        if (!c[i].is_zero()) span = std::gcd(span, i);
    if (m == 0) m = span;
    if (m < 2 || span % m != 0)
        fail(Errc::domain, "f is not a polynomial in x^" + std::to_string(std::max(m, 2)));
    std::vector<Scalar> g;
    for (int i = 0; i < static_cast<int>(c.size()); i += m) g.push_back(c[i]);
    Poly G(C.field(), std::move(g));
    Poly U = Poly::x(C.field());
    return Quotients{m, SuperellipticCurve(C.n, G), SuperellipticCurve(C.n, U * G)};
}

}  // namespace supell
