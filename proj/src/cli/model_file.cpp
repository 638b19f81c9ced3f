#include "malg/cli/model_file.hpp"

#include "malg/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace malg::cli {

using nlohmann::ordered_json;

namespace {

class Reader {
public:
    explicit Reader(std::string_view origin) : origin_(origin) {}

    [[noreturn]] void fail(const std::string& where, const std::string& what) const {
        throw InputError(origin_ + ": " + (where.empty() ? "/" : where) + ": " + what);
    }

    const ordered_json& field(const ordered_json& obj, const std::string& where, const char* key) const {
        auto it = obj.find(key);
        if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
        return *it;
    }

    void only(const ordered_json& obj, const std::string& where, std::set<std::string> allowed) const {
        for (auto it = obj.begin(); it != obj.end(); ++it)
            if (!allowed.count(it.key())) fail(where, "unknown field \"" + it.key() + "\"");
    }

    const ordered_json& object(const ordered_json& j, const std::string& where) const {
        if (!j.is_object()) fail(where, "expected an object");
        return j;
    }

    const ordered_json& array(const ordered_json& j, const std::string& where) const {
        if (!j.is_array()) fail(where, "expected an array");
        return j;
    }

    std::string string(const ordered_json& j, const std::string& where) const {
        if (!j.is_string()) fail(where, "expected a string");
        return j.get<std::string>();
    }

    // Table state ids may be written as numbers.
    std::string id(const ordered_json& j, const std::string& where) const {
        if (j.is_number_integer()) return std::to_string(j.get<long long>());
        if (!j.is_string()) fail(where, "expected a state id");
        return j.get<std::string>();
    }

    long long integer(const ordered_json& j, const std::string& where) const {
        if (!j.is_number_integer()) fail(where, "expected an integer");
        return j.get<long long>();
    }

    ratlin::Rational rational(const ordered_json& j, const std::string& where) const {
        if (j.is_number_integer()) return ratlin::Rational(j.get<long>());
        if (!j.is_string()) fail(where, "expected a rational string such as \"-3/4\"");
        try {
            return ratlin::Rational::parse(j.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
        }
    }

private:
    std::string origin_;
};

std::string key_path(const std::string& base, const std::string& key) {
    std::string escaped;
    for (char c : key) {
        if (c == '~') escaped += "~0";
        else if (c == '/') escaped += "~1";
        else escaped += c;
    }
    return base + "/" + escaped;
}

std::string index_path(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

models::TableModelSpec parse_table(const Reader& r, const ordered_json& doc) {
    r.only(doc, "", {"kind", "states", "zero", "measurements", "negations"});
    models::TableModelSpec s;
    const auto& states = r.array(r.field(doc, "", "states"), "/states");
    for (std::size_t i = 0; i < states.size(); ++i) s.states.push_back(r.id(states[i], index_path("/states", i)));
    s.zero = r.id(r.field(doc, "", "zero"), "/zero");
    const auto& ms = r.object(r.field(doc, "", "measurements"), "/measurements");
    for (auto it = ms.begin(); it != ms.end(); ++it) {
        const auto where = key_path("/measurements", it.key());
        auto& table = s.measurements[it.key()];
        const auto& body = r.object(it.value(), where);
        for (auto e = body.begin(); e != body.end(); ++e) table[e.key()] = r.id(e.value(), key_path(where, e.key()));
    }
    if (auto it = doc.find("negations"); it != doc.end()) {
        const auto& negs = r.object(*it, "/negations");
        for (auto e = negs.begin(); e != negs.end(); ++e)
            s.negations[e.key()] = r.string(e.value(), key_path("/negations", e.key()));
    }
    return s;
}

models::PropositionalModelSpec parse_propositional(const Reader& r, const ordered_json& doc) {
    r.only(doc, "", {"kind", "atoms", "variant"});
    models::PropositionalModelSpec s;
    const auto& atoms = r.array(r.field(doc, "", "atoms"), "/atoms");
    for (std::size_t i = 0; i < atoms.size(); ++i) s.atoms.push_back(r.string(atoms[i], index_path("/atoms", i)));
    if (auto it = doc.find("variant"); it != doc.end()) {
        const auto v = r.string(*it, "/variant");
        if (v == "all_theories") s.variant = models::Variant::all_theories;
        else if (v == "maximal_theories") s.variant = models::Variant::maximal_theories;
        else r.fail("/variant", "expected \"all_theories\" or \"maximal_theories\"");
    }
    return s;
}

models::RayModelSpec parse_ray(const Reader& r, const ordered_json& doc) {
    r.only(doc, "", {"kind", "dimension", "full_lattice", "subspaces", "sample_height"});
    models::RayModelSpec s;
    const auto dim = r.integer(r.field(doc, "", "dimension"), "/dimension");
    if (dim < 1) r.fail("/dimension", "must be positive");
    s.dimension = static_cast<std::size_t>(dim);
    if (auto it = doc.find("full_lattice"); it != doc.end()) {
        if (!it->is_boolean()) r.fail("/full_lattice", "expected true or false");
        s.full_lattice = it->get<bool>();
    }
    if (auto it = doc.find("sample_height"); it != doc.end()) {
        const auto h = r.integer(*it, "/sample_height");
        if (h < 0 || h > 1000) r.fail("/sample_height", "must be between 0 and 1000");
        s.sample_height = static_cast<int>(h);
    }
    const auto& subs = r.object(r.field(doc, "", "subspaces"), "/subspaces");
    for (auto it = subs.begin(); it != subs.end(); ++it) {
        const auto where = key_path("/subspaces", it.key());
        const auto& gens = r.array(it.value(), where);
        std::vector<ratlin::Vector> vs;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const auto gw = index_path(where, g);
            const auto& entries = r.array(gens[g], gw);
            if (entries.size() != s.dimension)
                r.fail(gw, "expected " + std::to_string(s.dimension) + " entries, got " + std::to_string(entries.size()));
            ratlin::Vector v;
            for (std::size_t e = 0; e < entries.size(); ++e) v.push_back(r.rational(entries[e], index_path(gw, e)));
            vs.push_back(std::move(v));
        }
        s.subspaces.emplace_back(it.key(), std::move(vs));
    }
    return s;
}

}  // namespace

models::ModelSpec parse_model(const ordered_json& doc, std::string_view origin) {
    const Reader r(origin);
    r.object(doc, "");
    const auto kind = r.string(r.field(doc, "", "kind"), "/kind");
    if (kind == "table") return parse_table(r, doc);
    if (kind == "propositional") return parse_propositional(r, doc);
    if (kind == "ray") return parse_ray(r, doc);
    r.fail("/kind", "expected \"table\", \"ray\" or \"propositional\", got \"" + kind + "\"");
}

models::ModelSpec parse_model_text(std::string_view text, std::string_view origin) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string(origin) + ": invalid JSON at byte " + std::to_string(e.byte));
    }
    return parse_model(doc, origin);
}

models::ModelSpec load_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str(), path);
}

ordered_json to_json(const models::ModelSpec& spec) {
    ordered_json j;
    j["kind"] = std::string(kind_name(spec));
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, models::TableModelSpec>) {
                j["states"] = s.states;
                j["zero"] = s.zero;
                ordered_json ms = ordered_json::object();
                for (const auto& [name, table] : s.measurements) {
                    ordered_json t = ordered_json::object();
                    // Entries follow the declared state order.
                    for (const auto& x : s.states)
                        if (auto it = table.find(x); it != table.end()) t[x] = it->second;
                    for (const auto& [x, y] : table)
                        if (!t.contains(x)) t[x] = y;
                    ms[name] = std::move(t);
                }
                j["measurements"] = std::move(ms);
                if (!s.negations.empty()) {
                    ordered_json n = ordered_json::object();
                    for (const auto& [a, b] : s.negations) n[a] = b;
                    j["negations"] = std::move(n);
                }
            } else if constexpr (std::is_same_v<S, models::PropositionalModelSpec>) {
                j["atoms"] = s.atoms;
                j["variant"] = s.variant == models::Variant::all_theories ? "all_theories" : "maximal_theories";
            } else {
                j["dimension"] = s.dimension;
                j["full_lattice"] = s.full_lattice;
                ordered_json subs = ordered_json::object();
                for (const auto& [name, gens] : s.subspaces) {
                    ordered_json g = ordered_json::array();
                    for (const auto& v : gens) {
                        ordered_json row = ordered_json::array();
                        for (const auto& q : v) row.push_back(q.to_string());
                        g.push_back(std::move(row));
                    }
                    subs[name] = std::move(g);
                }
                j["subspaces"] = std::move(subs);
                j["sample_height"] = s.sample_height;
            }
        },
        spec);
    return j;
}

std::string serialize_model(const models::ModelSpec& spec) { return to_json(spec).dump(2) + "\n"; }

std::string_view kind_name(const models::ModelSpec& spec) {
    switch (spec.index()) {
        case 0: return "table";
        case 1: return "propositional";
        default: return "ray";
    }
}

}  // namespace malg::cli
