#pragma once

#include "malg/core/algebra.hpp"
#include "malg/ratlin/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace malg::models {

/// Measurements given extensionally: name -> (state id -> state id).
struct TableModelSpec {
    std::vector<std::string> states;
    std::string zero;
    std::map<std::string, std::map<std::string, std::string>> measurements;
    // Optional; inferred by fixpoint/zero matching when empty.
    std::map<std::string, std::string> negations;

    friend bool operator==(const TableModelSpec&, const TableModelSpec&) = default;
};

enum class Variant { all_theories, maximal_theories };

/**
 * Classical propositional logic over a few atoms.
 *
 * A theory is represented by its set of models (valuations), so the
 * inconsistent theory is the EMPTY set and larger theories have smaller
 * model sets. all_theories takes every set of valuations as a state;
 * maximal_theories takes the singletons plus the empty set. Each measurement
 * is one class of equivalent formulas, acting by intersecting with its model
 * set, and is named by a shortest formula for the class ("p&q", "~p"), with
 * "top" and "bot" for the valid and the unsatisfiable class.
 *
 * Valuations are listed all-true first and labelled by their bits in atom
 * order: with atoms p, q the order is v11, v10, v01, v00.
 */
struct PropositionalModelSpec {
    std::vector<std::string> atoms;
    Variant variant = Variant::all_theories;

    friend bool operator==(const PropositionalModelSpec&, const PropositionalModelSpec&) = default;
};

inline constexpr std::size_t kMaxAtoms = 3;

struct RayModelSpec {
    std::size_t dimension = 0;
    // name -> generators; generators may be dependent.
    std::vector<std::pair<std::string, std::vector<ratlin::Vector>>> subspaces;
    bool full_lattice = false;
    int sample_height = 3;

    friend bool operator==(const RayModelSpec&, const RayModelSpec&) = default;
};

using ModelSpec = std::variant<TableModelSpec, PropositionalModelSpec, RayModelSpec>;

/// Throws InputError naming the offending state or measurement.
core::MAlgebra build_table(const TableModelSpec& spec);
/// Throws InputError for more than kMaxAtoms atoms or bad atom names.
core::MAlgebra build_propositional(const PropositionalModelSpec& spec);
/// Throws InputError on a closure gap (without full_lattice) or bad generators.
core::MAlgebra build_ray(const RayModelSpec& spec);
core::MAlgebra build(const ModelSpec& spec);

/// The ray sample at height h, as labels. Throws InputError for a finite
/// algebra.
std::vector<std::string> sample_states(const core::MAlgebra& alg, int height);

/// Shortest formula over the atoms whose models are the given valuation
/// indices (bit j = valuation j in the order above).
std::string class_name(const std::vector<std::string>& atoms, std::uint64_t models);

/// "v10" style label of valuation j.
std::string valuation_label(std::size_t atom_count, std::size_t j);

}  // namespace malg::models
