#include "wprn/dedicators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace wprn {

std::size_t DedicatorSet::count() const {
    return static_cast<std::size_t>(std::count(indicator.begin(), indicator.end(), true));
}

std::vector<std::size_t> DedicatorSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < indicator.size(); ++i)
        if (indicator[i])
            out.push_back(i);
    return out;
}

std::vector<double> apply_dedicators(const NetworkInstance& inst, const DedicatorSet& set) {
    if (set.size() != inst.num_pairs)
        throw std::invalid_argument("dedicator set size mismatch");
    std::vector<double> powers(inst.num_pairs, 0.0);
    for (std::size_t i = 0; i < inst.num_pairs; ++i)
        if (set[i])
            powers[i] = inst.params.source_power_cap;
    return powers;
}

std::vector<std::size_t> sources_by_gain(const NetworkInstance& inst) {
    std::vector<std::size_t> order(inst.num_pairs);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&inst](std::size_t a, std::size_t b) {
        return inst.source_relay_gains[a] > inst.source_relay_gains[b];
    });
    return order;
}

std::vector<DedicatorSet> candidate_sets(const NetworkInstance& inst, EnumerationMode mode) {
    const std::size_t n = inst.num_pairs;
    std::vector<DedicatorSet> sets;
    if (mode == EnumerationMode::pruned) {
        const auto order = sources_by_gain(inst);
        sets.reserve(n);
        for (std::size_t k = n; k >= 1; --k) {
            DedicatorSet set;
            set.indicator.assign(n, false);
            for (std::size_t r = 0; r < k; ++r)
                set.indicator[order[r]] = true;
            sets.push_back(std::move(set));
        }
        return sets;
    }
    if (n > 10)
        throw std::invalid_argument("exhaustive enumeration supported for N <= 10 only");
    sets.reserve((std::size_t{1} << n) - 1);
    for (std::size_t k = n; k >= 1; --k) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k)
                continue;
            DedicatorSet set;
            set.indicator.assign(n, false);
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t{1} << i))
                    set.indicator[i] = true;
            sets.push_back(std::move(set));
        }
    }
    return sets;
}

bool dedicator_ordering_check(const NetworkInstance& inst, std::size_t i, std::size_t j,
                              const Strategy& shared) {
    if (i >= inst.num_pairs || j >= inst.num_pairs || i == j)
        throw std::invalid_argument("need two distinct pair indices");
    const double alpha = shared.max_harvest_fraction();

    auto with_dedicator = [&](std::size_t ded, std::size_t enj) {
        Strategy s = shared;
        s.energy_power[ded] = inst.params.source_power_cap;
        s.harvest_fraction[ded] = alpha;
        s.energy_power[enj] = 0.0;
        s.harvest_fraction[enj] = 0.0;
        return nash_product(inst, s);
    };

    const auto phi_i = with_dedicator(i, j);
    const auto phi_j = with_dedicator(j, i);
    if (!phi_i.has_value() || !phi_j.has_value())
        throw std::domain_error("both swap configurations must be feasible");
    return *phi_i >= *phi_j;
}

} // namespace wprn
