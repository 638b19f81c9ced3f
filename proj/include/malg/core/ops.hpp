#pragma once

// Name-based operations on an MAlgebra. States are given and returned as
// labels: a table state id, a valuation set such as "{v10,v11}", or a ray
// such as "(1,-1)" / "0".

#include "malg/core/algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace malg::core {

/// An extensional map not yet known to be a member of M.
using RawMap = std::variant<FiniteMap, ratlin::Matrix>;

/// Throws InputError for an unknown measurement or state.
std::string apply(const MAlgebra& alg, std::string_view m, std::string_view x);

struct Extent {
    std::vector<std::string> fp;
    std::vector<std::string> z;
    std::vector<std::string> def;
    // False when the lists are a sample of an infinite set.
    bool complete = true;
    // Ray backend: the subspaces FP and Z exactly.
    std::optional<std::string> fp_subspace;
    std::optional<std::string> z_subspace;
};

Extent extent(const MAlgebra& alg, std::string_view m);

/// a preserves b: a maps FP(b) into FP(b).
bool preserves(const MAlgebra& alg, std::string_view a, std::string_view b);
bool commutes(const MAlgebra& alg, std::string_view a, std::string_view b);

/// x -> b(a(x)), without asking whether it belongs to M.
RawMap compose_raw(const MAlgebra& alg, std::string_view a, std::string_view b);

/// Name of the member extensionally equal to the map, if any.
std::optional<std::string> membership(const MAlgebra& alg, const RawMap& map);

/// The member swapping fixpoints and zeros with m. Throws AxiomViolation
/// (Negation) when there is none.
std::string negation_of(const MAlgebra& alg, std::string_view m);

/// The member whose fixpoints are exactly {0, x}, if any.
std::optional<std::string> point_measurement(const MAlgebra& alg, std::string_view x);

}  // namespace malg::core
