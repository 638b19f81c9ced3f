#include "malg/core/finite_algebra.hpp"

#include "malg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace malg::core {

std::size_t FiniteMapHash::operator()(const FiniteMap& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.image) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

FiniteAlgebra::FiniteAlgebra(Backend backend, std::vector<std::string> state_names, StateId zero,
                             std::vector<Measurement> measurements, std::map<std::string, std::string> negations)
    : backend_(backend),
      state_names_(std::move(state_names)),
      zero_(zero),
      measurements_(std::move(measurements)),
      negations_(std::move(negations)) {
    const std::size_t n = state_names_.size();
    if (n == 0) throw InputError("state space is empty");
    if (zero_ >= n) throw InputError("zero state is not in the state list");
    std::set<std::string> seen;
    for (const auto& s : state_names_)
        if (!seen.insert(s).second) throw InputError("duplicate state id '" + s + "'");
    states_.resize(n);
    std::iota(states_.begin(), states_.end(), StateId{0});

    std::sort(measurements_.begin(), measurements_.end(),
              [](const Measurement& a, const Measurement& b) { return a.name < b.name; });
    for (std::size_t i = 0; i < measurements_.size(); ++i) {
        const auto& m = measurements_[i];
        if (i > 0 && measurements_[i - 1].name == m.name)
            throw InputError("duplicate measurement name '" + m.name + "'");
        if (m.map.image.size() != n)
            throw InputError("measurement '" + m.name + "' is not total over the state space");
        for (auto y : m.map.image)
            if (y >= n) throw InputError("measurement '" + m.name + "' maps outside the state space");
        by_map_.emplace(m.map, i);
    }
    for (const auto& [from, to] : negations_) {
        if (!index_of(from)) throw InputError("negation entry names unknown measurement '" + from + "'");
        if (!index_of(to)) throw InputError("negation entry names unknown measurement '" + to + "'");
    }
}

const FiniteAlgebra::Measurement& FiniteAlgebra::measurement(std::string_view name) const {
    if (auto i = index_of(name)) return measurements_[*i];
    throw InputError("unknown measurement '" + std::string(name) + "'");
}

std::optional<std::size_t> FiniteAlgebra::index_of(std::string_view name) const {
    auto it = std::lower_bound(measurements_.begin(), measurements_.end(), name,
                               [](const Measurement& m, std::string_view n) { return m.name < n; });
    if (it == measurements_.end() || it->name != name) return std::nullopt;
    return static_cast<std::size_t>(it - measurements_.begin());
}

FiniteMap FiniteAlgebra::compose(const Map& first, const Map& second) const {
    FiniteMap out;
    out.image.resize(first.image.size());
    for (std::size_t x = 0; x < first.image.size(); ++x) out.image[x] = second.image[first.image[x]];
    return out;
}

std::optional<FiniteAlgebra::Measurement> FiniteAlgebra::resolve(const Map& m) const {
    if (auto it = by_map_.find(m); it != by_map_.end()) return measurements_[it->second];
    return std::nullopt;
}

std::optional<FiniteAlgebra::Measurement> FiniteAlgebra::negation(const Measurement& m) const {
    if (auto it = negations_.find(m.name); it != negations_.end()) return measurement(it->second);
    for (const auto& candidate : measurements_) {
        bool ok = true;
        for (State x : states_) {
            const bool fixed = candidate.map.image[x] == x;
            const bool zeroed = candidate.map.image[x] == zero_;
            if (fixed != (m.map.image[x] == zero_) || zeroed != (m.map.image[x] == x)) {
                ok = false;
                break;
            }
        }
        if (ok) return candidate;
    }
    return std::nullopt;
}

bool FiniteAlgebra::preserves(const Map& a, const Map& b) const {
    for (State x : states_) {
        if (b.image[x] != x) continue;
        const State y = a.image[x];
        if (b.image[y] != y) return false;
    }
    return true;
}

bool FiniteAlgebra::commutes(const Map& a, const Map& b) const {
    for (State x : states_)
        if (a.image[b.image[x]] != b.image[a.image[x]]) return false;
    return true;
}

bool FiniteAlgebra::fp_subset(const Map& a, const Map& b) const {
    for (State x : states_)
        if (a.image[x] == x && b.image[x] != x) return false;
    return true;
}

bool FiniteAlgebra::z_subset(const Map& a, const Map& b) const {
    for (State x : states_)
        if (a.image[x] == zero_ && b.image[x] != zero_) return false;
    return true;
}

bool FiniteAlgebra::fp_is_meet(const Map& c, const Map& a, const Map& b) const {
    for (State x : states_)
        if ((c.image[x] == x) != (a.image[x] == x && b.image[x] == x)) return false;
    return true;
}

bool FiniteAlgebra::fp_is_everything(const Map& a) const {
    for (State x : states_)
        if (a.image[x] != x) return false;
    return true;
}

std::optional<FiniteAlgebra::Measurement> FiniteAlgebra::point_measurement(State x) const {
    if (x == zero_) return std::nullopt;
    for (const auto& m : measurements_) {
        bool ok = true;
        for (State y : states_) {
            const bool want = (y == x || y == zero_);
            if ((m.map.image[y] == y) != want) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    return std::nullopt;
}

std::optional<StateId> FiniteAlgebra::parse_state(std::string_view label) const {
    for (std::size_t i = 0; i < state_names_.size(); ++i)
        if (state_names_[i] == label) return static_cast<StateId>(i);
    return std::nullopt;
}

}  // namespace malg::core
