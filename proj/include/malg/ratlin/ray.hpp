#pragma once

#include "malg/ratlin/rational.hpp"

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace malg::ratlin {

/// A one- or zero-dimensional subspace of Q^n, stored by a canonical
/// direction: a primitive integer vector whose first non-zero entry is
/// positive. The zero ray is the all-zero vector. Equality is therefore
/// syntactic, and the ordering is lexicographic on the direction (the zero
/// ray sorts first).
class Ray {
public:
    Ray() = default;

    static Ray of(const Vector& v);
    static Ray of_integers(std::vector<mpz_class> v);
    static Ray zero(std::size_t dim) { return Ray(std::vector<mpz_class>(dim)); }

    /// "(1,-1)" or "0"; the dimension is needed to build the zero ray.
    static Ray parse(std::string_view text, std::size_t dim);

    std::size_t dimension() const { return dir_.size(); }
    bool is_zero() const;
    const std::vector<mpz_class>& direction() const { return dir_; }
    Vector vector() const;

    std::string to_string() const;

    friend bool operator==(const Ray& a, const Ray& b) { return a.dir_ == b.dir_; }
    friend std::strong_ordering operator<=>(const Ray& a, const Ray& b);

private:
    explicit Ray(std::vector<mpz_class> dir) : dir_(std::move(dir)) {}
    std::vector<mpz_class> dir_;
};

}  // namespace malg::ratlin
