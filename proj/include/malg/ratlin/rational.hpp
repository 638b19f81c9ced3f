#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals backed by GMP.
 *
 * Values are always in lowest terms with a positive denominator, so equality
 * is structural. Text form is "p/q" (q > 1) or the bare integer "p".
 */

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace malg::ratlin {

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p", "-p", "p/q", "-p/q". Non-reduced input is reduced;
    /// a zero or signed denominator is rejected with InputError.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

using Vector = std::vector<Rational>;

Vector make_vector(std::initializer_list<long> entries);
Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace malg::ratlin
