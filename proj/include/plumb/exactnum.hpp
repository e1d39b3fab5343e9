#pragma once

// Exact integers, rationals and small dense integer linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plumb {

using Integer = mpz_class;

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);
std::string to_string(const Integer& n);

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : q_(Integer(static_cast<long>(n))) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);

    /// Parses "a", "-a" or "a/b".
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Integer floor() const;
    Integer ceil() const;
    Rational reciprocal() const;
    Rational abs() const;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Square integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, Integer(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t dim() const { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const;
    IntMatrix negated() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    std::size_t n_ = 0;
    std::vector<Integer> a_;
};

struct SNFResult {
    std::vector<Integer> invariant_factors;

    std::size_t corank() const;
    /// True when every nonzero invariant factor is 1 (torsion-free cokernel).
    bool free_cokernel() const;
};

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Fraction-free (Bareiss) determinant. The empty matrix has determinant 1.
Integer det(const IntMatrix& m);

/// Leading principal minor test. Throws std::invalid_argument on non-symmetric input.
bool is_negative_definite(const IntMatrix& m);

SNFResult smith_normal_form(const IntMatrix& m);

/// Signature data by symmetric elimination over the rationals.
Inertia inertia(const IntMatrix& m);

}  // namespace plumb
