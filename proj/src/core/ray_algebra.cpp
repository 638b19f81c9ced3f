#include "malg/core/ray_algebra.hpp"

#include "malg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace malg::core {

using ratlin::Matrix;
using ratlin::Ray;
using ratlin::Subspace;

namespace {

constexpr double kMaxSampleCandidates = 2e6;

// Calls fn on every integer vector sum(c_i * basis_i) with c_i in [-h, h].
template <class Fn>
void for_each_combination(const std::vector<std::vector<mpz_class>>& basis, std::size_t dim, int h, Fn fn) {
    const std::size_t k = basis.size();
    std::vector<long> coeff(k, -h);
    while (true) {
        std::vector<mpz_class> v(dim, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < dim; ++j) v[j] += coeff[i] * basis[i][j];
        fn(std::move(v));
        std::size_t i = 0;
        while (i < k && coeff[i] == h) coeff[i++] = -h;
        if (i == k) break;
        ++coeff[i];
    }
}

}  // namespace

RayAlgebra::RayAlgebra(std::size_t dimension, std::vector<NamedSubspace> subspaces, bool full_lattice,
                       int sample_height)
    : dimension_(dimension), subspaces_(std::move(subspaces)), full_lattice_(full_lattice), height_(sample_height) {
    if (dimension_ == 0) throw InputError("dimension must be positive");
    if (height_ < 1) throw InputError("sample height must be at least 1");
    std::sort(subspaces_.begin(), subspaces_.end(),
              [](const NamedSubspace& a, const NamedSubspace& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
        const auto& s = subspaces_[i];
        if (s.subspace.ambient_dim() != dimension_)
            throw InputError("subspace '" + s.name + "' does not live in dimension " + std::to_string(dimension_));
        if (i > 0 && subspaces_[i - 1].name == s.name) throw InputError("duplicate subspace name '" + s.name + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (subspaces_[j].subspace == s.subspace)
                throw InputError("subspaces '" + subspaces_[j].name + "' and '" + s.name + "' are equal");
        measurements_.push_back({s.name, s.subspace.projection()});
    }
    if (!full_lattice_) validate_closure();
    sample_ = sample(dimension_, subspaces_, height_);
}

void RayAlgebra::validate_closure() const {
    auto listed = [&](const Subspace& s) {
        return std::any_of(subspaces_.begin(), subspaces_.end(),
                           [&](const NamedSubspace& n) { return n.subspace == s; });
    };
    for (const auto& s : subspaces_) {
        const Subspace perp = ratlin::orthocomplement(s.subspace);
        if (!listed(perp))
            throw InputError("subspace list is not closed: orthocomplement of '" + s.name + "' (" +
                             perp.to_string() + ") is missing");
    }
    for (std::size_t i = 0; i < subspaces_.size(); ++i) {
        for (std::size_t j = i + 1; j < subspaces_.size(); ++j) {
            const auto& a = subspaces_[i];
            const auto& b = subspaces_[j];
            if (!commutes(a.subspace.projection(), b.subspace.projection())) continue;
            const Subspace meet = ratlin::intersect(a.subspace, b.subspace);
            if (!listed(meet))
                throw InputError("subspace list is not closed: composition of commuting '" + a.name + "' and '" +
                                 b.name + "' (" + meet.to_string() + ") is missing");
        }
    }
}

std::vector<Ray> RayAlgebra::sample(std::size_t dimension, const std::vector<NamedSubspace>& subspaces, int height) {
    if (height < 1) throw InputError("sample height must be at least 1");
    if (std::pow(2.0 * height + 1, static_cast<double>(dimension)) > kMaxSampleCandidates)
        throw BudgetExceeded("ray sample of height " + std::to_string(height) + " in dimension " +
                             std::to_string(dimension) + " is too large");
    std::set<Ray> found;
    found.insert(Ray::zero(dimension));
    auto add = [&](std::vector<mpz_class> v) { found.insert(Ray::of_integers(std::move(v))); };

    std::vector<std::vector<mpz_class>> unit(dimension, std::vector<mpz_class>(dimension, 0));
    for (std::size_t i = 0; i < dimension; ++i) unit[i][i] = 1;
    for_each_combination(unit, dimension, height, add);
    for (const auto& s : subspaces) for_each_combination(s.subspace.integer_basis(), dimension, height, add);
    return {found.begin(), found.end()};
}

RayAlgebra RayAlgebra::resampled(int height) const {
    RayAlgebra copy = *this;
    if (height < 1) throw InputError("sample height must be at least 1");
    copy.height_ = height;
    copy.sample_ = sample(dimension_, subspaces_, height);
    return copy;
}

RayAlgebra::Measurement RayAlgebra::measurement(std::string_view name) const {
    if (auto i = index_of(name)) return measurements_[*i];
    if (full_lattice_ && (name == "{0}" || name.starts_with("span{"))) {
        std::vector<ratlin::Vector> gens;
        if (name != "{0}") {
            if (!name.ends_with("}")) throw InputError("malformed subspace name '" + std::string(name) + "'");
            std::string_view body = name.substr(5, name.size() - 6);
            while (!body.empty()) {
                const auto close = body.find(')');
                if (close == std::string_view::npos)
                    throw InputError("malformed subspace name '" + std::string(name) + "'");
                gens.push_back(Ray::parse(body.substr(0, close + 1), dimension_).vector());
                body.remove_prefix(close + 1);
                if (!body.empty()) {
                    if (body.front() != ',') throw InputError("malformed subspace name '" + std::string(name) + "'");
                    body.remove_prefix(1);
                }
            }
        }
        return *resolve(Subspace::span(dimension_, gens).projection());
    }
    throw InputError("unknown measurement '" + std::string(name) + "'");
}

std::optional<std::size_t> RayAlgebra::index_of(std::string_view name) const {
    auto it = std::lower_bound(measurements_.begin(), measurements_.end(), name,
                               [](const Measurement& m, std::string_view n) { return m.name < n; });
    if (it == measurements_.end() || it->name != name) return std::nullopt;
    return static_cast<std::size_t>(it - measurements_.begin());
}

Ray RayAlgebra::apply(const Map& m, const State& x) const {
    if (x.is_zero()) return x;
    return Ray::of(m * x.vector());
}

std::optional<RayAlgebra::Measurement> RayAlgebra::resolve(const Map& m) const {
    for (const auto& listed : measurements_)
        if (listed.map == m) return listed;
    if (full_lattice_ && m.rows() == dimension_ && m.cols() == dimension_ && m.is_symmetric() && m.is_idempotent())
        return Measurement{Subspace::column_space(m).to_string(), m};
    return std::nullopt;
}

std::optional<RayAlgebra::Measurement> RayAlgebra::negation(const Measurement& m) const {
    return resolve(Map::identity(dimension_) - m.map);
}

bool RayAlgebra::preserves(const Map& a, const Map& b) const {
    const Subspace image = Subspace::column_space(a * b);
    const Subspace meet = ratlin::intersect(Subspace::column_space(a), Subspace::column_space(b));
    return meet.contains(image);
}

bool RayAlgebra::fp_is_meet(const Map& c, const Map& a, const Map& b) const {
    return Subspace::column_space(c) == ratlin::intersect(Subspace::column_space(a), Subspace::column_space(b));
}

std::optional<RayAlgebra::Measurement> RayAlgebra::point_measurement(const State& x) const {
    if (x.is_zero()) return std::nullopt;
    return resolve(Subspace::span(dimension_, {x.vector()}).projection());
}

std::optional<Ray> RayAlgebra::parse_state(std::string_view label) const {
    try {
        return Ray::parse(label, dimension_);
    } catch (const InputError&) {
        return std::nullopt;
    }
}

}  // namespace malg::core
