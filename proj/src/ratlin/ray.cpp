#include "malg/ratlin/ray.hpp"

#include "malg/errors.hpp"

#include <algorithm>

namespace malg::ratlin {

Ray Ray::of(const Vector& v) {
    mpz_class common = 1;
    for (const auto& x : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) ints.push_back(x.numerator() * (common / x.denominator()));
    return of_integers(std::move(ints));
}

Ray Ray::of_integers(std::vector<mpz_class> v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return Ray(std::move(v));
    const auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return Ray(std::move(v));
}

Ray Ray::parse(std::string_view text, std::size_t dim) {
    const std::string original(text);
    if (text == "0") return zero(dim);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw InputError("malformed ray '" + original + "'");
    text = text.substr(1, text.size() - 2);
    Vector v;
    while (true) {
        const auto comma = text.find(',');
        v.push_back(Rational::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (v.size() != dim)
        throw InputError("ray '" + original + "' has dimension " + std::to_string(v.size()) + ", expected " +
                         std::to_string(dim));
    Ray r = of(v);
    if (r.is_zero()) throw InputError("zero ray must be written as '0'");
    return r;
}

bool Ray::is_zero() const {
    return std::all_of(dir_.begin(), dir_.end(), [](const mpz_class& x) { return x == 0; });
}

Vector Ray::vector() const {
    Vector v;
    v.reserve(dir_.size());
    for (const auto& x : dir_) v.emplace_back(x, mpz_class(1));
    return v;
}

std::string Ray::to_string() const {
    if (is_zero()) return "0";
    std::string out = "(";
    for (std::size_t i = 0; i < dir_.size(); ++i) {
        if (i) out += ',';
        out += dir_[i].get_str();
    }
    return out + ")";
}

std::strong_ordering operator<=>(const Ray& a, const Ray& b) {
    const std::size_t n = std::min(a.dir_.size(), b.dir_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.dir_[i], b.dir_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.dir_.size() <=> b.dir_.size();
}

}  // namespace malg::ratlin
