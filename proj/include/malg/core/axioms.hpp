#pragma once

#include "malg/core/algebra.hpp"
#include "malg/core/check_result.hpp"
#include "malg/core/kernels.hpp"

#include <string>
#include <vector>

namespace malg::core {

/**
 * Decides one of the nine properties.
 *
 * Finite algebras are checked exhaustively. On the ray backend, pointwise
 * properties run over the sample (status sampled_pass), while Composition and
 * Negation are decided on the projection matrices. A failing result lists up
 * to budget.max_witnesses witnesses, lexicographically first.
 */
CheckResult check_axiom(const MAlgebra& alg, Property property, const Budget& budget = {});

/// Runs the requested properties in the given order. Optional properties are
/// marked advisory when one of the six defining axioms fails.
std::vector<CheckResult> check_axioms(const MAlgebra& alg, const std::vector<Property>& properties,
                                      const Budget& budget = {});

/// True when evaluating the witness again reproduces the violation.
bool replays(const MAlgebra& alg, Property property, const Witness& witness);

/// "Idempotence", "Strong separability", ...
std::string display_name(Property property);

}  // namespace malg::core
