#pragma once

/**
 * @file connectives.hpp
 * @brief Negation, conjunction, disjunction and implication of measurements.
 *
 * Binary connectives exist only for commuting pairs: a & b is the composite
 * a.b, a | b is ~(~a & ~b) and a -> b is ~(a & ~b). A non-commuting pair is
 * refused with NonCommutingPair; there is no fallback to lattice bounds. A
 * composite that should be a measurement but is not in M is reported as an
 * AxiomViolation.
 */

#include "malg/core/algebra.hpp"
#include "malg/core/check_result.hpp"
#include "malg/errors.hpp"
#include "malg/logic/formula.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace malg::connectives {

template <class A>
using MeasurementOf = typename A::Measurement;

template <class A>
MeasurementOf<A> negate(const A& alg, const MeasurementOf<A>& m) {
    if (auto n = alg.negation(m)) return *n;
    throw core::AxiomViolation(core::Property::negation, core::Witness{{}, {m.name}, ""},
                               "no measurement swaps the fixpoints and zeros of '" + m.name + "'");
}

template <class A>
MeasurementOf<A> conjoin(const A& alg, const MeasurementOf<A>& a, const MeasurementOf<A>& b) {
    if (!alg.commutes(a.map, b.map)) throw NonCommutingPair(a.name, b.name);
    if (auto c = alg.resolve(alg.compose(a.map, b.map))) return *c;
    throw core::AxiomViolation(core::Property::composition, core::Witness{{}, {a.name, b.name}, ""},
                               "the composite of commuting '" + a.name + "' and '" + b.name + "' is not in M");
}

template <class A>
MeasurementOf<A> disjoin(const A& alg, const MeasurementOf<A>& a, const MeasurementOf<A>& b) {
    if (!alg.commutes(a.map, b.map)) throw NonCommutingPair(a.name, b.name);
    return negate(alg, conjoin(alg, negate(alg, a), negate(alg, b)));
}

template <class A>
MeasurementOf<A> implies(const A& alg, const MeasurementOf<A>& a, const MeasurementOf<A>& b) {
    if (!alg.commutes(a.map, b.map)) throw NonCommutingPair(a.name, b.name);
    return negate(alg, conjoin(alg, a, negate(alg, b)));
}

/// Every checked state is a fixpoint or a zero of m.
template <class A>
bool classical(const A& alg, const MeasurementOf<A>& m) {
    for (const auto& x : alg.states()) {
        const auto y = alg.apply(m.map, x);
        if (y != x && !alg.is_zero(y)) return false;
    }
    return true;
}

std::string conjunction(const core::MAlgebra& alg, std::string_view a, std::string_view b);
std::string disjunction(const core::MAlgebra& alg, std::string_view a, std::string_view b);
std::string implication(const core::MAlgebra& alg, std::string_view a, std::string_view b);
bool is_classical(const core::MAlgebra& alg, std::string_view m);

/// Measurements certified pairwise commuting at construction. The algebra
/// must outlive the set.
class CommutingSet {
public:
    /// Throws NonCommutingPair for the first offending pair and InputError
    /// for unknown or empty member lists.
    CommutingSet(const core::MAlgebra& alg, std::vector<std::string> members);

    const core::MAlgebra& algebra() const { return *alg_; }
    const std::vector<std::string>& members() const { return members_; }
    bool contains(std::string_view name) const;

private:
    const core::MAlgebra* alg_;
    std::vector<std::string> members_;
};

/**
 * Evaluates f with each slot replaced by its bound member. Every slot must
 * be bound to a member of cs (InputError otherwise). With verify_closure,
 * each intermediate result is also checked to commute with every member;
 * a failure there is an InternalError.
 */
std::string eval_formula(const CommutingSet& cs, const logic::Formula& f,
                         const std::map<std::string, std::string>& binding, bool verify_closure = false);

}  // namespace malg::connectives
