#include "supell/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "supell/error.hpp"
#include "supell/integer.hpp"
#include "supell/poly.hpp"

namespace supell {

WeightedPoint::WeightedPoint(std::vector<Scalar> c, std::vector<int> w) : coords(std::move(c)), weights(std::move(w))
{
    if (coords.empty() || coords.size() != weights.size()) fail(Errc::domain, "coordinate and weight lengths differ");
    for (int q : weights)
        if (q < 1) fail(Errc::domain, "weights must be positive");
    for (auto& x : coords)
        if (!(x.field() == coords.front().field())) fail(Errc::domain, "coordinate field mismatch");
    if (std::all_of(coords.begin(), coords.end(), [](const Scalar& x) { return x.is_zero(); }))
        fail(Errc::domain, "the zero tuple is not a weighted point");
}

std::string WeightedPoint::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? " : " : "") + coords[i].str();
    s += "] w=(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    return s + ")";
}

WeightedPoint star_act(const Scalar& lambda, const WeightedPoint& p)
{
    if (lambda.is_zero()) fail(Errc::domain, "lambda must be nonzero");
    WeightedPoint out = p;
    for (std::size_t i = 0; i < p.size(); ++i) out.coords[i] = p.coords[i] * lambda.pow(static_cast<long>(p.weights[i]));
    return out;
}

mpz_class wgcd(const WeightedPoint& p) { return wgcd(p, p.weights); }

mpz_class wgcd(const WeightedPoint& p, const std::vector<int>& weights)
{
    if (!p.field().is_rational()) fail(Errc::domain, "wgcd needs rational coordinates");
    mpz_class g = 0;
    for (auto& x : p.coords) {
        if (!x.is_integer()) fail(Errc::domain, "wgcd needs integral coordinates");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.rational().get_num_mpz_t());
    }
    mpz_class out = 1;
    if (g == 1) return out;
    for (auto& [prime, e] : factor(g)) {
        (void)e;
        unsigned best = ~0u;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.coords[i].is_zero()) continue;
            best = std::min(best, valuation(p.coords[i].rational().get_num(), prime) / static_cast<unsigned>(weights[i]));
        }
        out *= pow(prime, best);
    }
    return out;
}

WeightedPoint normalize(const WeightedPoint& p)
{
    Field Q = p.field();
    if (!Q.is_rational()) fail(Errc::domain, "normalization is defined over Q");
    // Smallest lambda clearing all denominators.
    mpz_class den = 1;
    for (auto& x : p.coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
    mpz_class lambda = 1;
    if (den != 1) {
        for (auto& [prime, e] : factor(den)) {
            (void)e;
            unsigned need = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (p.coords[i].is_zero()) continue;
                unsigned v = valuation(p.coords[i].rational().get_den(), prime);
                unsigned q = static_cast<unsigned>(p.weights[i]);
                need = std::max(need, (v + q - 1) / q);
            }
            lambda *= pow(prime, need);
        }
    }
    WeightedPoint out = star_act(Scalar(Q, lambda), p);
    mpz_class w = wgcd(out);
    if (w != 1) out = star_act(Scalar(Q, mpq_class(1, w)), out);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out.coords[i].is_zero() || out.weights[i] % 2 == 0) continue;
        if (out.coords[i].rational() < 0) out = star_act(Scalar(Q, -1L), out);
        break;
    }
    return out;
}

namespace {

Height reduce_root(mpz_class a, int q)
{
    Height h;
    for (int k = q; k >= 1; --k) {
        if (q % k) continue;
        mpz_class r;
        if (exact_root(a, static_cast<unsigned>(k), r)) {
            h.radicand = r;
            h.root = q / k;
            break;
        }
    }
    h.approx = std::pow(h.radicand.get_d(), 1.0 / h.root);
    return h;
}

}  // namespace

bool height_le(const Height& a, const Height& b)
{
    return pow(a.radicand, static_cast<unsigned long>(b.root)) <= pow(b.radicand, static_cast<unsigned long>(a.root));
}

bool height_le(const Height& h, const mpq_class& bound)
{
    // radicand <= bound^root
    mpz_class num = pow(bound.get_num(), static_cast<unsigned long>(h.root));
    mpz_class den = pow(bound.get_den(), static_cast<unsigned long>(h.root));
    return h.radicand * den <= num;
}

Height weighted_height(const WeightedPoint& p)
{
    WeightedPoint n = normalize(p);
    Height best;
    best.radicand = 0;
    bool first = true;
    for (std::size_t i = 0; i < n.size(); ++i) {
        Height h = reduce_root(abs(n.coords[i].rational().get_num()), n.weights[i]);
        if (first || !height_le(h, best)) best = h;
        first = false;
    }
    if (best.radicand == 0) best = reduce_root(1, 1);
    return best;
}

std::optional<Scalar> wpoint_equal(const WeightedPoint& p, const WeightedPoint& q)
{
    if (p.weights != q.weights) fail(Errc::domain, "weight tuples differ");
    if (!(p.field() == q.field())) fail(Errc::domain, "field mismatch");
    Field F = p.field();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.coords[i].is_zero() != q.coords[i].is_zero()) return std::nullopt;
        if (!p.coords[i].is_zero()) support.push_back(i);
    }
    // Combine ratios by extended gcd on the weights: mu = lambda^g.
    long g = 0;
    Scalar mu(F, 1L);
    for (std::size_t i : support) {
        long w = p.weights[i];
        Scalar rho = q.coords[i] / p.coords[i];
        if (g == 0) {
            g = w;
            mu = rho;
            continue;
        }
        mpz_class gg, s, t;
        mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), mpz_class(g).get_mpz_t(), mpz_class(w).get_mpz_t());
        mu = mu.pow(s) * rho.pow(t);
        g = gg.get_si();
    }
    std::vector<Scalar> candidates;
    if (F.is_rational()) {
        const mpq_class& m = mu.rational();
        mpz_class rn, rd;
        if (exact_root(m.get_num(), static_cast<unsigned>(g), rn) && exact_root(m.get_den(), static_cast<unsigned>(g), rd)) {
            mpq_class r(rn, rd);
            r.canonicalize();
            if (g % 2 == 0) r = abs(r);
            candidates.emplace_back(F, r);
            if (g % 2 == 0) candidates.emplace_back(F, mpq_class(-r));
        }
    } else {
        Poly eq = Poly::monomial(Scalar(F, 1L), static_cast<int>(g)) - Poly::constant(mu);
        candidates = roots_mod_p(eq);
    }
    for (auto& lam : candidates)
        if (star_act(lam, p) == q) return lam;
    return std::nullopt;
}

std::vector<WeightedPoint> enumerate_bounded_height(const std::vector<int>& weights, const mpq_class& bound)
{
    std::vector<WeightedPoint> out;
    if (bound < 1 || weights.empty()) return out;
    Field Q = Field::rationals();
    std::vector<long> box;
    for (int q : weights) {
        mpz_class lim;
        mpz_class num = pow(bound.get_num(), static_cast<unsigned long>(q));
        mpz_class den = pow(bound.get_den(), static_cast<unsigned long>(q));
        mpz_fdiv_q(lim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (!lim.fits_slong_p() || lim > 1000000) fail(Errc::unsupported, "enumeration box too large");
        box.push_back(lim.get_si());
    }
    std::vector<long> cur(weights.size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = -box[i];
    for (;;) {
        if (std::any_of(cur.begin(), cur.end(), [](long v) { return v != 0; })) {
            std::vector<Scalar> c;
            for (long v : cur) c.emplace_back(Q, v);
            WeightedPoint p(std::move(c), weights);
            if (normalize(p) == p) out.push_back(std::move(p));
        }
        std::size_t k = cur.size();
        while (k > 0) {
            --k;
            if (cur[k] < box[k]) {
                ++cur[k];
                break;
            }
            cur[k] = -box[k];
            if (k == 0) return out;
        }
    }
}

}  // namespace supell
