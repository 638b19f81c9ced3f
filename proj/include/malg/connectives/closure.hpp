#pragma once

#include "malg/connectives/connectives.hpp"
#include "malg/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace malg::connectives {

/**
 * The closure of a pairwise commuting family under ~ and &, with the
 * connective tables precomputed so formulas over it evaluate by lookup.
 *
 * Members are distinct measurements; the first generator_count() members are
 * the generators in the given order (duplicates merged). | and -> are read
 * off the ~ and & tables through their definitions.
 */
template <class A>
class PropClosure {
public:
    using Measurement = typename A::Measurement;

    /// Throws BudgetExceeded past `cap` members and InternalError if two
    /// members fail to commute.
    PropClosure(const A& alg, const std::vector<Measurement>& generators, std::size_t cap = 4096) : alg_(alg) {
        for (const auto& g : generators) generator_index_.push_back(intern(g, cap));
        std::size_t done = 0;
        while (done < members_.size()) {
            const std::size_t i = done++;
            const auto n = intern(negate(alg, members_[i]), cap);
            neg_.resize(members_.size());
            neg_[i] = n;
            grow();
            for (std::size_t j = 0; j <= i; ++j) {
                if (!alg.commutes(members_[i].map, members_[j].map))
                    throw InternalError("closure members '" + members_[i].name + "' and '" + members_[j].name +
                                        "' do not commute");
                const auto c = intern(conjoin(alg, members_[i], members_[j]), cap);
                grow();
                conj_[i][j] = conj_[j][i] = c;
            }
        }
        const std::size_t n = members_.size();
        fp_all_.resize(n);
        leq_.assign(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i) {
            fp_all_[i] = alg.fp_is_everything(members_[i].map);
            for (std::size_t j = 0; j < n; ++j) leq_[i][j] = alg.fp_subset(members_[i].map, members_[j].map);
        }
    }

    std::size_t size() const { return members_.size(); }
    const Measurement& member(std::uint32_t i) const { return members_[i]; }
    const std::vector<std::uint32_t>& generators() const { return generator_index_; }

    std::uint32_t neg(std::uint32_t i) const { return neg_[i]; }
    std::uint32_t conj(std::uint32_t i, std::uint32_t j) const { return conj_[i][j]; }
    std::uint32_t disj(std::uint32_t i, std::uint32_t j) const { return neg_[conj_[neg_[i]][neg_[j]]]; }
    std::uint32_t impl(std::uint32_t i, std::uint32_t j) const { return neg_[conj_[i][neg_[j]]]; }
    bool fp_all(std::uint32_t i) const { return fp_all_[i]; }
    bool leq(std::uint32_t i, std::uint32_t j) const { return leq_[i][j]; }

private:
    static constexpr std::uint32_t kNone = ~std::uint32_t{0};
    const A& alg_;
    std::vector<Measurement> members_;
    std::vector<std::uint32_t> generator_index_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::vector<std::uint32_t>> conj_;
    std::vector<bool> fp_all_;
    std::vector<std::vector<bool>> leq_;

    // Keeps the conjunction table square as members are added.
    void grow() {
        const std::size_t n = members_.size();
        if (conj_.size() == n) return;
        conj_.resize(n);
        for (auto& row : conj_) row.resize(n, kNone);
    }

    std::uint32_t intern(const Measurement& m, std::size_t cap) {
        for (std::size_t i = 0; i < members_.size(); ++i)
            if (alg_.same(members_[i].map, m.map)) return static_cast<std::uint32_t>(i);
        if (members_.size() >= cap)
            throw BudgetExceeded("connective closure exceeds " + std::to_string(cap) + " measurements");
        members_.push_back(m);
        return static_cast<std::uint32_t>(members_.size() - 1);
    }
};

}  // namespace malg::connectives
