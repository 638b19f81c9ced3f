#pragma once

/**
 * @file order.hpp
 * @brief The order a <= b iff FP(a) in FP(b), its bounds, orthocomplement
 * laws and the point-measurement decomposition theorems.
 *
 * Bounds exist only for commuting pairs. They are built with the
 * connectives and then confirmed extremal by scanning the listed
 * measurements; a non-commuting pair is never asked for a bound.
 */

#include "malg/core/algebra.hpp"
#include "malg/core/check_result.hpp"
#include "malg/core/kernels.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace malg::order {

/// FP(a) in FP(b).
bool leq(const core::MAlgebra& alg, std::string_view a, std::string_view b);
/// Z(b) in Z(a); agrees with leq() on every M-algebra.
bool leq_by_zeros(const core::MAlgebra& alg, std::string_view a, std::string_view b);

/// a & b and a | b, or nothing when a and b do not commute. Throws
/// AxiomViolation when the connective leaves M.
std::optional<std::string> glb(const core::MAlgebra& alg, std::string_view a, std::string_view b);
std::optional<std::string> lub(const core::MAlgebra& alg, std::string_view a, std::string_view b);

/// The order relation over the listed measurements, in name order.
class PosetView {
public:
    explicit PosetView(const core::MAlgebra& alg);

    const core::MAlgebra& algebra() const { return *alg_; }
    const std::vector<std::string>& names() const { return names_; }
    bool leq(std::size_t i, std::size_t j) const { return rel_[i][j]; }
    /// Throws InputError for unknown names.
    bool leq(std::string_view a, std::string_view b) const;

private:
    const core::MAlgebra* alg_;
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> rel_;
};

/**
 * Partial-order laws over the listed measurements, as one result
 * "partial_order_bounds": both orders agree, reflexivity, antisymmetry,
 * transitivity, bot <= a <= top, a <= b implies commutation, and for every
 * commuting pair a & b is the greatest lower bound and a | b the least upper
 * bound among the listed measurements. The note counts the non-commuting
 * pairs for which no bound is required.
 */
core::CheckResult bounds_check(const core::MAlgebra& alg, const core::Budget& budget = {});

inline constexpr std::array<std::string_view, 5> orthocomplement_ids = {
    "double_negation",     // ~~a = a
    "order_inversion",     // a <= b implies ~b <= ~a
    "meet_with_negation",  // a & ~a = bot
    "join_with_negation",  // a | ~a = top
    "orthomodular_law",    // a <= b implies b = a | (~a & b)
};

std::vector<core::CheckResult> orthomodular_check(const core::MAlgebra& alg, const core::Budget& budget = {});

inline constexpr std::array<std::string_view, 3> strong_separability_ids = {
    "projection_dependence",    // a(x) != 0 implies x in FP(a -> e_a(x))
    "projection_uniqueness",    // a(x) != 0, y in FP(a): x in FP(a -> e_y) iff y = a(x)
    "orthogonal_decomposition", // a(x), ~a(x) != 0 implies x in FP(e_a(x) | e_~a(x))
};

/**
 * Quantifies over every non-zero (sampled) state x and listed measurement a.
 * Uniqueness on a ray algebra is checked among the sampled y only. Throws
 * PreconditionError naming the first non-zero state without a point
 * measurement.
 */
std::vector<core::CheckResult> strong_sep_check(const core::MAlgebra& alg, const core::Budget& budget = {});

/**
 * "classical_iff_central": on a separable algebra, m is classical (every
 * state is a fixpoint or a zero) iff m commutes with every measurement;
 * vacuous when separability fails.
 * "classical_closure": ~a of a classical a, and a & b, a | b, a -> b of
 * classical commuting a, b, are classical.
 */
std::vector<core::CheckResult> classical_checks(const core::MAlgebra& alg, const core::Budget& budget = {});

}  // namespace malg::order
