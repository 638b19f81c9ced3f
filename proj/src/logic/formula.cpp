#include "malg/logic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace malg::logic {

Formula Formula::make(Op op, std::string name, const Formula* lhs, const Formula* rhs) {
    return Formula(std::make_shared<const Node>(Node{op, std::move(name),
                                                     lhs ? std::make_shared<const Formula>(*lhs) : nullptr,
                                                     rhs ? std::make_shared<const Formula>(*rhs) : nullptr}));
}

Formula Formula::slot(std::string name) { return make(Op::slot, std::move(name), nullptr, nullptr); }
Formula Formula::negation(Formula f) { return make(Op::negation, "", &f, nullptr); }
Formula Formula::conjunction(Formula f, Formula g) { return make(Op::conjunction, "", &f, &g); }
Formula Formula::disjunction(Formula f, Formula g) { return make(Op::disjunction, "", &f, &g); }
Formula Formula::implication(Formula f, Formula g) { return make(Op::implication, "", &f, &g); }

int Formula::depth() const {
    switch (op()) {
        case Op::slot: return 1;
        case Op::negation: return lhs().depth() + 1;
        default: return std::max(lhs().depth(), rhs().depth()) + 1;
    }
}

std::vector<std::string> Formula::slots() const {
    std::set<std::string> found;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        if (f.op() == Op::slot) {
            found.insert(f.name());
            return;
        }
        walk(f.lhs());
        if (f.op() != Op::negation) walk(f.rhs());
    };
    walk(*this);
    return {found.begin(), found.end()};
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    if (a.op() == Op::slot) return a.name() == b.name();
    if (!(a.lhs() == b.lhs())) return false;
    return a.op() == Op::negation || a.rhs() == b.rhs();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula run() {
        skip();
        if (pos_ == text_.size()) throw ParseError("empty formula", pos_);
        Formula f = implication();
        skip();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (accept("->")) return Formula::implication(std::move(lhs), implication());
        return lhs;
    }

    Formula disjunction() {
        Formula f = conjunction();
        while (accept("|")) f = Formula::disjunction(std::move(f), conjunction());
        return f;
    }

    Formula conjunction() {
        Formula f = unary();
        while (accept("&")) f = Formula::conjunction(std::move(f), unary());
        return f;
    }

    Formula unary() {
        skip();
        if (pos_ == text_.size()) throw ParseError("unexpected end of formula", pos_);
        const char c = text_[pos_];
        if (c == '~') {
            ++pos_;
            return Formula::negation(unary());
        }
        if (c == '(') {
            const std::size_t open = pos_++;
            Formula f = implication();
            if (!accept(")")) {
                skip();
                throw ParseError("missing ')' for '(' at position " + std::to_string(open), pos_);
            }
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Formula::slot(std::string(text_.substr(start, pos_ - start)));
        }
        if (c == ')' || c == '&' || c == '|' || (c == '-' && text_.substr(pos_, 2) == "->"))
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        throw ParseError(std::string("unknown character '") + c + "'", pos_);
    }
};

int precedence(Op op) {
    switch (op) {
        case Op::implication: return 1;
        case Op::disjunction: return 2;
        case Op::conjunction: return 3;
        case Op::negation: return 4;
        case Op::slot: return 5;
    }
    return 0;
}

std::string print(const Formula& f, int min_prec) {
    std::string out;
    const int p = precedence(f.op());
    switch (f.op()) {
        case Op::slot: return f.name();
        case Op::negation: out = "~" + print(f.lhs(), 4); break;
        case Op::conjunction: out = print(f.lhs(), 3) + "&" + print(f.rhs(), 4); break;
        case Op::disjunction: out = print(f.lhs(), 2) + "|" + print(f.rhs(), 3); break;
        case Op::implication: out = print(f.lhs(), 2) + "->" + print(f.rhs(), 1); break;
    }
    return p < min_prec ? "(" + out + ")" : out;
}

bool eval(const Formula& f, const std::map<std::string, int, std::less<>>& index, std::uint64_t assignment) {
    switch (f.op()) {
        case Op::slot: {
            auto it = index.find(f.name());
            if (it == index.end()) throw InputError("slot '" + f.name() + "' has no value");
            return (assignment >> it->second) & 1u;
        }
        case Op::negation: return !eval(f.lhs(), index, assignment);
        case Op::conjunction: return eval(f.lhs(), index, assignment) && eval(f.rhs(), index, assignment);
        case Op::disjunction: return eval(f.lhs(), index, assignment) || eval(f.rhs(), index, assignment);
        case Op::implication: return !eval(f.lhs(), index, assignment) || eval(f.rhs(), index, assignment);
    }
    return false;
}

std::map<std::string, int, std::less<>> index_slots(const std::vector<std::string>& slots) {
    std::map<std::string, int, std::less<>> index;
    for (std::size_t i = 0; i < slots.size(); ++i) index.emplace(slots[i], static_cast<int>(i));
    return index;
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Formula& f) { return print(f, 0); }

bool evaluate(const Formula& f, const std::vector<std::string>& slots, std::uint64_t assignment) {
    const auto index = index_slots(slots);
    for (const auto& s : f.slots())
        if (!index.count(s)) throw InputError("slot '" + s + "' has no value");
    return eval(f, index, assignment);
}

std::uint64_t truth_table(const Formula& f, const std::vector<std::string>& slots) {
    if (slots.size() > 6) throw InputError("truth tables are limited to 6 slots");
    const auto index = index_slots(slots);
    std::uint64_t table = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << slots.size()); ++a)
        if (eval(f, index, a)) table |= std::uint64_t{1} << a;
    return table;
}

TautologyVerdict is_tautology(const Formula& f) {
    const auto slots = f.slots();
    if (slots.size() > kMaxTautologySlots)
        throw InputError("formula has " + std::to_string(slots.size()) + " slots, the limit is " +
                         std::to_string(kMaxTautologySlots));
    const auto index = index_slots(slots);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << slots.size()); ++a) {
        if (eval(f, index, a)) continue;
        std::map<std::string, bool> witness;
        for (std::size_t i = 0; i < slots.size(); ++i) witness[slots[i]] = (a >> i) & 1u;
        return {f, false, witness};
    }
    return {f, true, std::nullopt};
}

std::uint64_t FormulaSet::count(std::size_t slot_count, int max_depth) {
    if (max_depth < 1) return 0;
    // Saturates at 2^62 so callers can compare against a cap.
    const std::uint64_t limit = std::uint64_t{1} << 62;
    std::uint64_t all = slot_count;
    for (int d = 1; d < max_depth; ++d) {
        if (all > (std::uint64_t{1} << 30)) return limit;
        const std::uint64_t pairs = all * (all + 1) / 2;
        all = slot_count + all + 2 * pairs + all * all;
        if (all > limit) return limit;
    }
    return all;
}

FormulaSet::FormulaSet(std::vector<std::string> slots, int max_depth, std::size_t cap) : slots_(std::move(slots)) {
    if (max_depth < 1) throw InputError("formula depth must be at least 1");
    if (slots_.empty()) throw InputError("at least one slot is needed");
    const std::uint64_t total = count(slots_.size(), max_depth);
    if (total > cap)
        throw BudgetExceeded("depth " + std::to_string(max_depth) + " over " + std::to_string(slots_.size()) +
                             " slots gives " + std::to_string(total) + " formulas, budget is " + std::to_string(cap));
    nodes_.reserve(total);
    formulas_.reserve(total);
    std::vector<int> depth;
    for (std::uint32_t i = 0; i < slots_.size(); ++i) {
        nodes_.push_back({Op::slot, i, 0});
        formulas_.push_back(Formula::slot(slots_[i]));
        depth.push_back(1);
    }
    for (int d = 1; d < max_depth; ++d) {
        const auto n = static_cast<std::uint32_t>(nodes_.size());
        auto add = [&](Op op, std::uint32_t l, std::uint32_t r) {
            nodes_.push_back({op, l, r});
            const Formula& f = formulas_[l];
            switch (op) {
                case Op::negation: formulas_.push_back(Formula::negation(f)); break;
                case Op::conjunction: formulas_.push_back(Formula::conjunction(f, formulas_[r])); break;
                case Op::disjunction: formulas_.push_back(Formula::disjunction(f, formulas_[r])); break;
                case Op::implication: formulas_.push_back(Formula::implication(f, formulas_[r])); break;
                case Op::slot: break;
            }
            depth.push_back(d + 1);
        };
        for (std::uint32_t i = 0; i < n; ++i)
            if (depth[i] == d) add(Op::negation, i, 0);
        for (Op op : {Op::conjunction, Op::disjunction})
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i; j < n; ++j)
                    if (depth[i] == d || depth[j] == d) add(op, i, j);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                if (depth[i] == d || depth[j] == d) add(Op::implication, i, j);
    }
}

}  // namespace malg::logic
