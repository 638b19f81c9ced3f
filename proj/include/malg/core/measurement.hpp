#pragma once

#include <string>

namespace malg::core {

enum class Backend { table, ray, propositional };

inline const char* to_string(Backend b) {
    switch (b) {
        case Backend::table: return "table";
        case Backend::ray: return "ray";
        case Backend::propositional: return "propositional";
    }
    return "unknown";
}

/// A named self-map of the state space. Equality of measurements is
/// extensional (the map); the name is only a label.
template <class Map>
struct Measurement {
    std::string name;
    Map map;
};

}  // namespace malg::core
