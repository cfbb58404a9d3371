#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supell/curve.hpp"

namespace supell {

// 2g - 2 = nd - n - d - gcd(n, d)
int genus(int n, int d);

struct GapBasis {
    std::vector<std::pair<int, int>> S;  // (a, b), sorted by a n + b
    int d_q = 0;
};

// Exponents (a, b) of (x - alpha)^a y^b (dx / y^(n-1))^q spanning the q-differentials.
GapBasis weierstrass_gap_basis(int n, int d, int q);

// q-Weierstrass weight of an affine branch point.
long branch_weight(int n, int d, int q);

enum class AtlasSource {
    formula,       // signature/dimension rows 1-31 evaluated at (g, n, m)
    genus3_table,
    genus4_table,
    genus4_locus,  // all genus 4 curves, not only superelliptic ones
    genus3_ids,    // group ids only
};

const char* source_name(AtlasSource s);

struct AutRecord {
    AtlasSource source = AtlasSource::formula;
    int genus = 0;
    int row = 0;  // case id for formula rows
    std::string reduced_group;
    std::string group;  // empty when the data does not name it
    std::optional<std::pair<int, int>> group_id;
    int order = 0;
    std::optional<int> n, m;
    int quotient_genus = 0;
    std::vector<int> signature;  // empty for id-only records
    std::optional<int> delta;
};

struct AutFilter {
    std::optional<int> n, m, row;
    std::optional<std::string> reduced_group;
    std::optional<AtlasSource> source;
};

// Every record with 2 <= g <= 10.
const std::vector<AutRecord>& atlas_records();

// Throws not_in_atlas outside 2 <= g <= 10.
std::vector<AutRecord> aut_lookup(int g, const AutFilter& filter = {});

bool hurwitz_ok(const AutRecord& r);
// 2g - 2 = |G| (2h - 2 + sum (1 - 1/c)); true when no signature is stored.
bool riemann_hurwitz_ok(const AutRecord& r);

// y^n = f(x) for cases 1-31; delta = params.size(). m is ignored from case 10 on.
SuperellipticCurve family_equation(int case_id, int n, int m, const std::vector<Scalar>& params,
                                   Field F = Field());

struct SplitCheck {
    bool decomposes = false;
    long lhs = 0, rhs = 0;
};

SplitCheck split_jacobian(int n, int m, int delta);

struct Quotients {
    int m = 0;
    SuperellipticCurve first;   // y^n = g(u)
    SuperellipticCurve second;  // y^n = u g(u)
};

// For f(x) = g(x^m); m = 0 picks the largest such m.
Quotients quotient_equations(const SuperellipticCurve& C, int m = 0);

}  // namespace supell
