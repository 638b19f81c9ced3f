#pragma once

#include "malg/core/finite_algebra.hpp"
#include "malg/core/ray_algebra.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace malg::core {

/// An M-algebra candidate over one of the two state-space backends. Generic
/// code is written against either backend and dispatched with visit().
class MAlgebra {
public:
    MAlgebra(FiniteAlgebra a) : impl_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    MAlgebra(RayAlgebra a) : impl_(std::move(a)) {}     // NOLINT(google-explicit-constructor)

    template <class F>
    decltype(auto) visit(F&& f) const {
        return std::visit(std::forward<F>(f), impl_);
    }

    Backend backend() const {
        return visit([](const auto& a) { return a.backend(); });
    }
    bool exhaustive() const {
        return visit([](const auto& a) { return a.exhaustive(); });
    }
    std::size_t state_count() const {
        return visit([](const auto& a) { return a.states().size(); });
    }
    std::size_t measurement_count() const {
        return visit([](const auto& a) { return a.measurements().size(); });
    }
    std::vector<std::string> measurement_names() const;
    std::vector<std::string> state_labels() const;

    const FiniteAlgebra* finite() const { return std::get_if<FiniteAlgebra>(&impl_); }
    const RayAlgebra* ray() const { return std::get_if<RayAlgebra>(&impl_); }

    /// For the ray backend, the same algebra over a sample of the given
    /// height; finite algebras are returned unchanged.
    MAlgebra with_height(std::optional<int> height) const;

private:
    std::variant<FiniteAlgebra, RayAlgebra> impl_;
};

}  // namespace malg::core
