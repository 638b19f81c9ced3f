#pragma once

/**
 * @file kernels.hpp
 * @brief Cell sweeps shared by every pointwise check.
 *
 * A check is a loop over (state, measurement tuple) cells. sweep() runs the
 * outer state loop either serially or with OpenMP; each thread collects into
 * its own Tally and the tallies are merged and sorted at the end, so the
 * reported witnesses do not depend on scheduling. The serial path is the
 * reference the parallel one is tested against.
 */

#include "malg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace malg::core {

enum class Exec { serial, parallel };

struct Budget {
    // Ray sample height; the algebra's own height when unset.
    std::optional<int> height;
    // Longest measurement cycle for L-Cumulativity (number of measurements).
    int loop_length = 3;
    Exec exec = Exec::parallel;
    std::size_t max_witnesses = 8;
    std::uint64_t max_cells = 200'000'000;
};

/// Witness by position: indices into a Snapshot's states and into the
/// measurement list. Ordered lexicographically, states first.
struct RawWitness {
    std::vector<std::uint32_t> states;
    std::vector<std::uint32_t> measurements;

    friend auto operator<=>(const RawWitness&, const RawWitness&) = default;
};

struct Tally {
    std::uint64_t checked = 0;
    std::vector<RawWitness> witnesses;

    void trim(std::size_t keep) {
        std::sort(witnesses.begin(), witnesses.end());
        witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
        if (witnesses.size() > keep) witnesses.resize(keep);
    }

    void add(RawWitness w, std::size_t keep) {
        witnesses.push_back(std::move(w));
        if (witnesses.size() >= 2 * keep + 16) trim(keep);
    }

    void merge(Tally&& other) {
        checked += other.checked;
        witnesses.insert(witnesses.end(), std::make_move_iterator(other.witnesses.begin()),
                         std::make_move_iterator(other.witnesses.end()));
    }
};

/// Runs body(i, tally) for i in [0, n) and returns the merged tally with at
/// most `keep` witnesses, the lexicographically smallest ones.
template <class Body>
Tally sweep(std::size_t n, Exec exec, std::size_t keep, Body&& body) {
    Tally total;
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i, total);
        total.trim(keep);
        return total;
    }
    std::exception_ptr failure;
#pragma omp parallel
    {
        Tally local;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i), local);
            } catch (...) {
#pragma omp critical(malg_sweep_error)
                if (!failure) failure = std::current_exception();
            }
        }
        local.trim(keep);
#pragma omp critical(malg_sweep_merge)
        total.merge(std::move(local));
    }
    if (failure) std::rethrow_exception(failure);
    total.trim(keep);
    return total;
}

/// Runs fn(i) for i in [0, n), in parallel when asked.
template <class Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(malg_for_error)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

inline void charge(std::uint64_t cells, const Budget& budget, const char* what) {
    if (cells > budget.max_cells)
        throw BudgetExceeded(std::string(what) + " needs " + std::to_string(cells) + " cells, budget is " +
                             std::to_string(budget.max_cells));
}

/**
 * Images of states under a fixed list of measurements, as indices.
 *
 * The first root_count() states are the roots in canonical order. For a ray
 * algebra, images of roots are generally not roots, so they are appended to
 * the registry level by level; images are computed for every state reached
 * in fewer than `depth` steps. image() of a state at the last level is
 * kUnknown. For a finite algebra every state is a root and all images exist.
 */
template <class A>
class Snapshot {
public:
    using State = typename A::State;
    using Measurement = typename A::Measurement;
    static constexpr std::uint32_t kUnknown = std::numeric_limits<std::uint32_t>::max();

    Snapshot(const A& alg, const std::vector<Measurement>& ms, int depth, Exec exec)
        : alg_(alg), measurement_count_(ms.size()) {
        for (const auto& s : alg.states()) intern(s);
        root_count_ = states_.size();
        zero_ = intern(alg.zero());
        image_.assign(ms.size(), {});
        std::size_t begin = 0;
        for (int level = 0; level < depth && begin < states_.size(); ++level) {
            const std::size_t end = states_.size();
            std::vector<State> images((end - begin) * ms.size());
            parallel_for(end - begin, exec, [&](std::size_t k) {
                for (std::size_t m = 0; m < ms.size(); ++m)
                    images[k * ms.size() + m] = alg.apply(ms[m].map, states_[begin + k]);
            });
            for (auto& row : image_) row.resize(end, kUnknown);
            for (std::size_t k = 0; k < end - begin; ++k)
                for (std::size_t m = 0; m < ms.size(); ++m)
                    image_[m][begin + k] = intern(std::move(images[k * ms.size() + m]));
            begin = end;
        }
        for (auto& row : image_) row.resize(states_.size(), kUnknown);
    }

    std::size_t root_count() const { return root_count_; }
    std::size_t size() const { return states_.size(); }
    std::size_t measurement_count() const { return measurement_count_; }
    std::uint32_t zero() const { return zero_; }
    const State& state(std::uint32_t i) const { return states_[i]; }
    std::string label(std::uint32_t i) const { return alg_.label(states_[i]); }

    std::uint32_t image(std::size_t m, std::uint32_t i) const {
        const std::uint32_t y = image_[m][i];
        if (y == kUnknown) throw InternalError("snapshot image requested beyond its depth");
        return y;
    }
    bool fixed(std::size_t m, std::uint32_t i) const { return image(m, i) == i; }
    bool zeroed(std::size_t m, std::uint32_t i) const { return image(m, i) == zero_; }

private:
    const A& alg_;
    std::size_t measurement_count_;
    std::size_t root_count_ = 0;
    std::uint32_t zero_ = 0;
    std::vector<State> states_;
    std::map<State, std::uint32_t> index_;
    std::vector<std::vector<std::uint32_t>> image_;

    std::uint32_t intern(State s) {
        auto [it, inserted] = index_.try_emplace(s, static_cast<std::uint32_t>(states_.size()));
        if (inserted) states_.push_back(std::move(s));
        return it->second;
    }
};

}  // namespace malg::core
