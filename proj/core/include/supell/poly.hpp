#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "supell/scalar.hpp"

namespace supell {

// Dense univariate polynomial, coefficients ascending, no trailing zeros.
class Poly {
public:
    explicit Poly(Field F = Field()) : F_(F) {}
    Poly(Field F, std::vector<Scalar> coeffs);
    Poly(Field F, std::initializer_list<long> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, int degree);
    static Poly x(Field F) { return monomial(Scalar(F, 1L), 1); }

    const Field& field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(int i) const;
    Scalar lead() const;

    Scalar operator()(const Scalar& x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly scaled(const Scalar& s) const;
    // f(x) -> f(c x)
    Poly dilate(const Scalar& c) const;
    // f(x) -> f(x^k)
    Poly inflate(int k) const;

    std::string str() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);  // quotient
    friend Poly operator%(const Poly& a, const Poly& b);  // remainder
    friend bool operator==(const Poly& a, const Poly& b) { return a.F_ == b.F_ && a.c_ == b.c_; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

private:
    void trim();
    Field F_;
    std::vector<Scalar> c_;
};

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);

// Exact division; throws domain error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

// gcd(f, f') = 1, with a modular shortcut over Q.
bool is_squarefree(const Poly& f);

// g = s a + t b with g monic gcd.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod);

// Determinant of the Sylvester matrix.
Scalar resultant(const Poly& a, const Poly& b);

// Yun's decomposition f = c * prod P_i^i; entry (P_i, i) for nonconstant P_i.
// Requires characteristic 0 or p > deg f.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Roots in the base field of a polynomial over GF(p) (distinct, ascending residues).
std::vector<Scalar> roots_mod_p(const Poly& f, std::uint64_t seed = 1);

// Lagrange interpolation through (x_i, y_i), distinct x_i.
Poly interpolate(const std::vector<std::pair<Scalar, Scalar>>& pts, Field F);

// Solve by Gaussian elimination: determinant of a square matrix.
Scalar determinant(std::vector<std::vector<Scalar>> m, Field F);

}  // namespace supell
