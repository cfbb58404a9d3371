#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supell {

// Q when characteristic() == 0, otherwise GF(p) for an odd prime p < 2^62.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);
    static Field parse(std::string_view s);  // "Q" or "GF(p)"

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

private:
    std::uint64_t p_ = 0;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(Field F, long v);
    Scalar(Field F, const mpz_class& v);
    Scalar(Field F, const mpq_class& v);

    static Scalar parse(Field F, std::string_view s);

    const Field& field() const { return F_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_integer() const;

    const mpq_class& rational() const;  // Q only
    std::uint64_t residue() const;      // GF(p) only

    Scalar inverse() const;
    Scalar pow(long e) const;
    Scalar pow(const mpz_class& e) const;

    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

private:
    Field F_;
    std::uint64_t r_ = 0;
    mpq_class q_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace supell
