#include "malg/models/fixtures.hpp"

namespace malg::models::fixtures {

using ratlin::make_vector;

TableModelSpec f1() {
    TableModelSpec s;
    s.states = {"0", "a"};
    s.zero = "0";
    s.measurements["top"] = {{"0", "0"}, {"a", "a"}};
    s.measurements["bot"] = {{"0", "0"}, {"a", "0"}};
    return s;
}

PropositionalModelSpec t2() { return {{"p", "q"}, Variant::all_theories}; }

PropositionalModelSpec t2_maximal() { return {{"p", "q"}, Variant::maximal_theories}; }

RayModelSpec r2() {
    RayModelSpec s;
    s.dimension = 2;
    s.subspaces = {
        {"bot", {}},
        {"px", {make_vector({1, 0})}},
        {"py", {make_vector({0, 1})}},
        {"pd", {make_vector({1, 1})}},
        {"pdperp", {make_vector({1, -1})}},
        {"top", {make_vector({1, 0}), make_vector({0, 1})}},
    };
    return s;
}

RayModelSpec r3() {
    RayModelSpec s;
    s.dimension = 3;
    const auto x = make_vector({1, 0, 0});
    const auto y = make_vector({0, 1, 0});
    const auto z = make_vector({0, 0, 1});
    s.subspaces = {
        {"bot", {}},
        {"px", {x}},
        {"py", {y}},
        {"pz", {z}},
        {"pxy", {x, y}},
        {"pxz", {x, z}},
        {"pyz", {y, z}},
        {"pd", {make_vector({1, 1, 0})}},
        {"pdperp", {make_vector({1, -1, 0}), z}},
        {"pdm", {make_vector({1, -1, 0})}},
        {"pdmperp", {make_vector({1, 1, 0}), z}},
        {"top", {x, y, z}},
    };
    return s;
}

RayModelSpec r2_full() {
    auto s = r2();
    s.full_lattice = true;
    return s;
}

RayModelSpec r3_full() {
    auto s = r3();
    s.full_lattice = true;
    return s;
}

std::vector<std::pair<std::string, ModelSpec>> all() {
    return {{"f1", f1()},   {"t2", t2()},           {"t2_maximal", t2_maximal()}, {"r2", r2()},
            {"r2_full", r2_full()}, {"r3", r3()}, {"r3_full", r3_full()}};
}

}  // namespace malg::models::fixtures
