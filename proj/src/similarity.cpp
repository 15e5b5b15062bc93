#include "rdslink/similarity.hpp"

#include <vector>

namespace rdslink {

double jaro_winkler(std::string_view a, std::string_view b) {
    if (a == b) return 1.0;
    if (a.empty() || b.empty()) return 0.0;

    const std::size_t la = a.size();
    const std::size_t lb = b.size();
    const std::size_t window = std::max(la, lb) / 2 == 0 ? 0 : std::max(la, lb) / 2 - 1;

    std::vector<bool> matched_a(la, false);
    std::vector<bool> matched_b(lb, false);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < la; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(lb, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (matched_b[j] || a[i] != b[j]) continue;
            matched_a[i] = true;
            matched_b[j] = true;
            ++matches;
            break;
        }
    }
    if (matches == 0) return 0.0;

    std::size_t transpositions = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < la; ++i) {
        if (!matched_a[i]) continue;
        while (!matched_b[j]) ++j;
        if (a[i] != b[j]) ++transpositions;
        ++j;
    }
    transpositions /= 2;

    const double m = static_cast<double>(matches);
    const double jaro = (m / static_cast<double>(la) + m / static_cast<double>(lb) +
                         (m - static_cast<double>(transpositions)) / m) /
                        3.0;

    std::size_t prefix = 0;
    const std::size_t max_prefix = std::min<std::size_t>({4, la, lb});
    while (prefix < max_prefix && a[prefix] == b[prefix]) ++prefix;

    return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

}  // namespace rdslink
