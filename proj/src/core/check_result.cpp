#include "malg/core/check_result.hpp"

#include <algorithm>

namespace malg::core {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
        case Status::sampled_pass: return "sampled_pass";
    }
    return "unknown";
}

std::string_view property_id(Property p) {
    switch (p) {
        case Property::illegitimate: return "illegitimate";
        case Property::idempotence: return "idempotence";
        case Property::composition: return "composition";
        case Property::interference: return "interference";
        case Property::cumulativity: return "cumulativity";
        case Property::negation: return "negation";
        case Property::separability: return "separability";
        case Property::strong_separability: return "strong_separability";
        case Property::l_cumulativity: return "l_cumulativity";
    }
    return "unknown";
}

std::optional<Property> parse_property(std::string_view id) {
    for (auto p : all_properties)
        if (property_id(p) == id) return p;
    return std::nullopt;
}

bool is_defining(Property p) {
    return std::find(defining_axioms.begin(), defining_axioms.end(), p) != defining_axioms.end();
}

}  // namespace malg::core
