#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace wprn {

constexpr double kInfeasiblePhi = -std::numeric_limits<double>::infinity();

// Compressed rise/fall pattern of first differences with a relative plateau
// tolerance. Infeasible samples are represented as -inf; a step out of or
// into -inf counts as a rise/fall.
inline std::string difference_pattern(std::span<const double> values, double plateau_rel_tol) {
    std::string compressed;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        const double a = values[k];
        const double b = values[k + 1];
        char c = '0';
        if (std::isinf(a) && std::isinf(b)) {
            c = '0';
        } else if (std::isinf(a)) {
            c = '+';
        } else if (std::isinf(b)) {
            c = '-';
        } else {
            const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
            const double d = b - a;
            c = d > plateau_rel_tol * scale ? '+' : (d < -plateau_rel_tol * scale ? '-' : '0');
        }
        if (c != '0' && (compressed.empty() || compressed.back() != c))
            compressed.push_back(c);
    }
    return compressed;
}

// Local maxima of the sampled values, boundaries included; an all-plateau
// scan counts zero.
inline std::size_t count_local_maxima(std::span<const double> values, double plateau_rel_tol) {
    const std::string s = difference_pattern(values, plateau_rel_tol);
    if (s.empty())
        return 0;
    std::size_t count = 0;
    if (s.front() == '-')
        ++count;
    if (s.back() == '+')
        ++count;
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
        if (s[k] == '+' && s[k + 1] == '-')
            ++count;
    return count;
}

// Index of the largest finite sample, lowest index on ties; values.size()
// when everything is infeasible.
inline std::size_t argmax_index(std::span<const double> values) {
    std::size_t best = values.size();
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::isinf(values[k]) || std::isnan(values[k]))
            continue;
        if (best == values.size() || values[k] > values[best])
            best = k;
    }
    return best;
}

} // namespace wprn
