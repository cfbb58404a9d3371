#pragma once

#include <string>
#include <vector>

#include "supell/poly.hpp"
#include "supell/scalar.hpp"

namespace supell {

struct Mat2 {
    Scalar a, b, c, d;

    Scalar det() const { return a * d - b * c; }
    static Mat2 identity(Field F);
    friend Mat2 operator*(const Mat2& m, const Mat2& n);
};

// a_0 X^d + a_1 X^{d-1} Y + ... + a_d Y^d. The zero form is allowed so that
// transvectants which vanish identically can be represented.
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(Field F, std::vector<Scalar> coeffs);
    BinaryForm(Field F, std::initializer_list<long> coeffs);

    static BinaryForm constant(const Scalar& c) { return BinaryForm(c.field(), {c}); }
    // Homogenize f to degree d (d >= deg f): a_i = coefficient of x^{d-i}.
    static BinaryForm from_poly(const Poly& f, int d);

    const Field& field() const { return F_; }
    int degree() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return a_; }
    const Scalar& operator[](int i) const { return a_[i]; }
    bool is_zero() const;
    // Value of a degree-0 form.
    const Scalar& value() const;

    // f(x, 1)
    Poly dehomogenize() const;
    // d^s/dX^s d^t/dY^t
    BinaryForm partial(int s, int t) const;

    std::string str() const;

    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(const Scalar& s, const BinaryForm& f);
    friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.F_ == g.F_ && f.a_ == g.a_; }

private:
    Field F_;
    std::vector<Scalar> a_;
};

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

// f(aX + bY, cX + dY); substitute(substitute(f, M), N) == substitute(f, M * N).
BinaryForm substitute(const BinaryForm& f, const Mat2& M);

Scalar discriminant(const BinaryForm& f);

// Discriminant of f as a polynomial of its own degree.
Scalar discriminant(const Poly& f);

}  // namespace supell
