#include "malg/ratlin/rational.hpp"

#include "malg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace malg::ratlin {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part))
        throw InputError("malformed rational '" + original + "'");
    mpz_class num(std::string(num_part), 10);
    mpz_class den(std::string(den_part), 10);
    if (den == 0) throw InputError("rational '" + original + "' has a zero denominator");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

Vector make_vector(std::initializer_list<long> entries) {
    return Vector(entries.begin(), entries.end());
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different dimensions");
    Rational sum;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].to_string();
    }
    return out + ")";
}

}  // namespace malg::ratlin
