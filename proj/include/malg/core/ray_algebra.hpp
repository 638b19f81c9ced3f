#pragma once

#include "malg/core/measurement.hpp"
#include "malg/ratlin/matrix.hpp"
#include "malg/ratlin/ray.hpp"
#include "malg/ratlin/subspace.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace malg::core {

struct NamedSubspace {
    std::string name;
    ratlin::Subspace subspace;
};

/**
 * Rays of Q^n measured by orthogonal projections.
 *
 * The state space is infinite, so states() is a deterministic finite sample:
 * the zero ray, every primitive integer direction with entries in [-H, H],
 * and every integer combination (coefficients in [-H, H]) of the integer
 * basis of each listed subspace. Pairwise facts about measurements
 * (preservation, commutation, inclusion) are decided exactly on the
 * projection matrices rather than on the sample.
 *
 * With full_lattice, every symmetric idempotent matrix counts as a member of
 * M; unlisted members are named by their subspace, e.g. "span{(1,1)}".
 * Without it, the listed subspaces must be closed under orthocomplement and
 * under intersection of commuting pairs.
 */
class RayAlgebra {
public:
    using State = ratlin::Ray;
    using Map = ratlin::Matrix;
    using Measurement = core::Measurement<ratlin::Matrix>;

    /// Throws InputError on dimension mismatch, duplicate names or subspaces,
    /// a height below 1, or (without full_lattice) a closure gap.
    RayAlgebra(std::size_t dimension, std::vector<NamedSubspace> subspaces, bool full_lattice, int sample_height);

    Backend backend() const { return Backend::ray; }
    bool exhaustive() const { return false; }

    std::size_t dimension() const { return dimension_; }
    bool full_lattice() const { return full_lattice_; }
    int sample_height() const { return height_; }

    /// Same algebra over the sample of a different height.
    RayAlgebra resampled(int height) const;

    const std::vector<State>& states() const { return sample_; }
    State zero() const { return State::zero(dimension_); }
    bool is_zero(const State& s) const { return s.is_zero(); }

    /// Sorted by name.
    const std::vector<Measurement>& measurements() const { return measurements_; }
    const std::vector<NamedSubspace>& subspaces() const { return subspaces_; }

    /// Listed names; with full_lattice also "span{...}" and "{0}".
    Measurement measurement(std::string_view name) const;
    std::optional<std::size_t> index_of(std::string_view name) const;

    State apply(const Map& m, const State& x) const;
    /// x -> second(first(x)), i.e. the matrix second * first.
    Map compose(const Map& first, const Map& second) const { return second * first; }
    bool same(const Map& a, const Map& b) const { return a == b; }

    std::optional<Measurement> resolve(const Map& m) const;
    std::optional<Measurement> negation(const Measurement& m) const;

    /// a maps FP(b) into FP(b): the image of B under P_a lies in A ∩ B.
    bool preserves(const Map& a, const Map& b) const;
    bool commutes(const Map& a, const Map& b) const { return a * b == b * a; }
    bool fp_subset(const Map& a, const Map& b) const { return b * a == a; }
    bool z_subset(const Map& a, const Map& b) const { return b * a == b; }
    bool fp_is_meet(const Map& c, const Map& a, const Map& b) const;
    bool fp_is_everything(const Map& a) const { return a == Map::identity(dimension_); }

    /// Projection onto the line through x (full lattice) or the listed
    /// measurement whose subspace is that line.
    std::optional<Measurement> point_measurement(const State& x) const;

    std::string label(const State& s) const { return s.to_string(); }
    std::optional<State> parse_state(std::string_view label) const;

    static std::vector<State> sample(std::size_t dimension, const std::vector<NamedSubspace>& subspaces, int height);

private:
    std::size_t dimension_;
    std::vector<NamedSubspace> subspaces_;
    bool full_lattice_;
    int height_;
    std::vector<Measurement> measurements_;
    std::vector<State> sample_;

    void validate_closure() const;
};

}  // namespace malg::core
