#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace malg::core {

enum class Status { pass, fail, vacuous, sampled_pass };

std::string_view to_string(Status s);

/// A counterexample tuple. States and measurements are listed in the order
/// the violated property quantifies over them; `detail` carries extra text
/// such as a formula.
struct Witness {
    std::vector<std::string> states;
    std::vector<std::string> measurements;
    std::string detail;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
    std::string property;
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    std::uint64_t checked_count = 0;
    // Set when a prerequisite defining axiom failed on the same algebra.
    bool advisory = false;
    std::string note;

    bool passed() const { return status != Status::fail; }

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

enum class Property {
    illegitimate,
    idempotence,
    composition,
    interference,
    cumulativity,
    negation,
    separability,
    strong_separability,
    l_cumulativity,
};

inline constexpr std::array<Property, 6> defining_axioms = {
    Property::illegitimate, Property::idempotence,  Property::composition,
    Property::interference, Property::cumulativity, Property::negation,
};

inline constexpr std::array<Property, 9> all_properties = {
    Property::illegitimate, Property::idempotence,  Property::composition,
    Property::interference, Property::cumulativity, Property::negation,
    Property::separability, Property::strong_separability, Property::l_cumulativity,
};

std::string_view property_id(Property p);
std::optional<Property> parse_property(std::string_view id);
bool is_defining(Property p);

/// Raised when an operation that must produce a member of M cannot, e.g. a
/// synthesized connective on a finite algebra that breaks Composition.
class AxiomViolation : public std::runtime_error {
public:
    AxiomViolation(Property property, Witness witness, const std::string& what)
        : std::runtime_error(what), property_(property), witness_(std::move(witness)) {}

    Property property() const noexcept { return property_; }
    const Witness& witness() const noexcept { return witness_; }

private:
    Property property_;
    Witness witness_;
};

}  // namespace malg::core
