#pragma once

#include "malg/errors.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace malg::logic {

enum class Op { slot, negation, conjunction, disjunction, implication };

/**
 * Immutable propositional formula over named slots.
 *
 * Nodes are shared, so copying is cheap. Text syntax: identifiers, ~, &, |,
 * ->, parentheses. ~ binds tightest, then &, then |, then ->; & and | are
 * left-associative and -> is right-associative.
 */
class Formula {
public:
    static Formula slot(std::string name);
    static Formula negation(Formula f);
    static Formula conjunction(Formula f, Formula g);
    static Formula disjunction(Formula f, Formula g);
    static Formula implication(Formula f, Formula g);

    Op op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    const Formula& lhs() const { return *node_->lhs; }
    const Formula& rhs() const { return *node_->rhs; }

    /// Bare slot has depth 1.
    int depth() const;
    /// Distinct slot names, sorted.
    std::vector<std::string> slots() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Op op;
        std::string name;
        std::shared_ptr<const Formula> lhs;
        std::shared_ptr<const Formula> rhs;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Op op, std::string name, const Formula* lhs, const Formula* rhs);
    std::shared_ptr<const Node> node_;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

Formula parse_formula(std::string_view text);

/// Prints with the fewest parentheses that reparse to the same tree.
std::string to_string(const Formula& f);

/// Value of f when slot i of `slots` has the value of bit i of `assignment`.
/// Slots missing from the list raise InputError.
bool evaluate(const Formula& f, const std::vector<std::string>& slots, std::uint64_t assignment);

/// Bit a of the result is evaluate(f, slots, a). At most 6 slots.
std::uint64_t truth_table(const Formula& f, const std::vector<std::string>& slots);

struct TautologyVerdict {
    Formula formula;
    bool is_tautology = false;
    // Present exactly when is_tautology is false.
    std::optional<std::map<std::string, bool>> falsifying;
};

inline constexpr std::size_t kMaxTautologySlots = 20;

/// Exhaustive truth-table check; more than 20 slots is an InputError.
TautologyVerdict is_tautology(const Formula& f);

/**
 * Every formula over `slots` of depth at most max_depth, each once up to the
 * order of & and | operands. Children precede parents, so a single pass over
 * nodes() can evaluate them all.
 */
class FormulaSet {
public:
    struct Node {
        Op op;
        std::uint32_t lhs;  // slot index when op == slot
        std::uint32_t rhs;
    };

    /// Throws BudgetExceeded when the set would exceed `cap` formulas.
    FormulaSet(std::vector<std::string> slots, int max_depth, std::size_t cap = 1'000'000);

    const std::vector<std::string>& slots() const { return slots_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    const Formula& formula(std::size_t i) const { return formulas_[i]; }

    /// Number of formulas the constructor would produce.
    static std::uint64_t count(std::size_t slot_count, int max_depth);

private:
    std::vector<std::string> slots_;
    std::vector<Node> nodes_;
    std::vector<Formula> formulas_;
};

}  // namespace malg::logic
