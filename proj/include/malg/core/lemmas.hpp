#pragma once

#include "malg/core/algebra.hpp"
#include "malg/core/check_result.hpp"
#include "malg/core/kernels.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace malg::core {

// Consequences of the six axioms, in the order lemma_suite() reports them.
inline constexpr std::array<std::string_view, 12> lemma_ids = {
    "fixpoints_determine_measurement",   // FP(a) = FP(b) implies a = b
    "double_negation",                   // ~~a = a
    "definiteness",                      // b(x) = x, b(a(x)) = 0 implies a(x) = 0
    "definiteness_dual",                 // b(x) = 0, b(a(x)) = a(x) implies a(x) = 0
    "fixpoint_zero_duality",             // FP(a) in FP(b) iff Z(b) in Z(a)
    "preservation_symmetry",             // a preserves b iff b preserves a
    "composition_fixpoints",             // a.b in M implies FP(a.b) = FP(a) & FP(b)
    "composition_implies_preservation",  // a.b in M implies b preserves a
    "composition_iff_preservation",      // a.b in M iff b preserves a
    "composition_order_independence",    // a.b in M iff b.a in M
    "composition_iff_commutation",       // a.b in M iff a, b commute
    "inclusion_absorption",              // FP(a) in FP(b) implies a.b = b.a = a
};

/// Runs every lemma over all measurement pairs and, for the pointwise ones,
/// all (sampled) states. Results are advisory when a defining axiom fails;
/// a failure on an algebra that passes all six axioms is flagged in the note
/// as an implementation bug.
std::vector<CheckResult> lemma_suite(const MAlgebra& alg, const Budget& budget = {});

struct TopBot {
    std::string top;
    std::string bot;
};

/// bot = a.~a for the first measurement a, top = ~bot. Throws AxiomViolation
/// naming Composition or Negation when either step leaves M, and InputError
/// when M is empty.
TopBot top_bot(const MAlgebra& alg);

}  // namespace malg::core
