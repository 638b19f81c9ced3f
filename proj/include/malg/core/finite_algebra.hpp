#pragma once

#include "malg/core/measurement.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace malg::core {

using StateId = std::uint32_t;

/// Extensional map on a finite state space: image[x] is the image of state x.
struct FiniteMap {
    std::vector<StateId> image;

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;
};

struct FiniteMapHash {
    std::size_t operator()(const FiniteMap& m) const noexcept;
};

/**
 * An M-algebra candidate over an explicitly enumerated state space.
 *
 * Used by both the table and the propositional backends. States are
 * identified by their position in the declared state list, which is also the
 * canonical witness order; measurements are kept sorted by name. Nothing
 * about the axioms is assumed at construction.
 */
class FiniteAlgebra {
public:
    using State = StateId;
    using Map = FiniteMap;
    using Measurement = core::Measurement<FiniteMap>;

    /// Throws InputError on duplicate names, out-of-range images, a zero
    /// outside the state list or negation entries naming unknown measurements.
    FiniteAlgebra(Backend backend, std::vector<std::string> state_names, StateId zero,
                  std::vector<Measurement> measurements, std::map<std::string, std::string> negations = {});

    Backend backend() const { return backend_; }
    bool exhaustive() const { return true; }

    const std::vector<State>& states() const { return states_; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    State zero() const { return zero_; }
    bool is_zero(State s) const { return s == zero_; }

    const std::vector<Measurement>& measurements() const { return measurements_; }
    const Measurement& measurement(std::string_view name) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    const std::map<std::string, std::string>& explicit_negations() const { return negations_; }

    State apply(const Map& m, State x) const { return m.image[x]; }

    /// x -> second(first(x)).
    Map compose(const Map& first, const Map& second) const;
    bool same(const Map& a, const Map& b) const { return a == b; }

    /// The member of M extensionally equal to the map, if any.
    std::optional<Measurement> resolve(const Map& m) const;

    /// The declared negation when one was given, otherwise the member whose
    /// fixpoints are exactly the zeros of m and vice versa.
    std::optional<Measurement> negation(const Measurement& m) const;

    /// a maps FP(b) into FP(b).
    bool preserves(const Map& a, const Map& b) const;
    bool commutes(const Map& a, const Map& b) const;
    bool fp_subset(const Map& a, const Map& b) const;
    bool z_subset(const Map& a, const Map& b) const;
    /// FP(c) == FP(a) ∩ FP(b).
    bool fp_is_meet(const Map& c, const Map& a, const Map& b) const;
    bool fp_is_everything(const Map& a) const;

    /// The member whose fixpoint set is exactly {0, x}.
    std::optional<Measurement> point_measurement(State x) const;

    std::string label(State s) const { return state_names_[s]; }
    std::optional<State> parse_state(std::string_view label) const;

private:
    Backend backend_;
    std::vector<std::string> state_names_;
    std::vector<State> states_;
    StateId zero_;
    std::vector<Measurement> measurements_;
    std::map<std::string, std::string> negations_;
    std::unordered_map<FiniteMap, std::size_t, FiniteMapHash> by_map_;
};

}  // namespace malg::core
