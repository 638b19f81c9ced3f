#pragma once

#include "malg/connectives/connectives.hpp"
#include "malg/core/check_result.hpp"
#include "malg/core/kernels.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace malg::logic {

inline constexpr int kMaxSlots = 6;

/**
 * Enumerates every formula of depth <= max_depth over max_slots slots
 * ("a", "b", ...) and evaluates it under every assignment of slots to
 * members of cs. For each assignment:
 *  - a truth-table tautology must evaluate to a measurement fixing every state;
 *  - formulas with the same truth table must evaluate to the same measurement;
 *  - if f entails g by truth table, FP(f) must be contained in FP(g).
 * Truth tables come from the propositional oracle, never from the algebra.
 * Throws BudgetExceeded past 10^6 formulas or budget.max_cells evaluations.
 */
core::CheckResult verify_tautology_theorem(const connectives::CommutingSet& cs, int max_depth, int max_slots,
                                           const core::Budget& budget = {});

inline constexpr std::array<std::string_view, 6> scheme_ids = {
    "modus_ponens",              // FP(a) = X and FP(a -> b) = X imply FP(b) = X
    "scheme_weakening",          // a -> (b -> a)
    "scheme_distribution",       // (a -> (b -> c)) -> ((a -> b) -> (a -> c))
    "scheme_contraposition",     // (~b -> ~a) -> ((~b -> a) -> b)
    "conjunction_definability",  // a & b = ~(a -> ~b)
    "disjunction_definability",  // a | b = ~a -> b
};

/// The schemes as formulas over a, b, c, for the oracle sanity check.
std::vector<Formula> scheme_formulas();

/// Instantiates each scheme over all pairs or triples drawn from the
/// connective closure of cs.
std::vector<core::CheckResult> verify_schemes(const connectives::CommutingSet& cs, const core::Budget& budget = {});

}  // namespace malg::logic
