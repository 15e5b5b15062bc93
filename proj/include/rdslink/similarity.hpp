#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace rdslink {

// Jaro similarity with the Winkler prefix boost (prefix capped at 4,
// scaling factor 0.1). Symmetric, 1.0 on equal strings, in [0, 1].
double jaro_winkler(std::string_view a, std::string_view b);

namespace detail {

// |A ∩ B| by merging two sorted sets.
template <class T>
std::size_t intersection_size(const std::set<T>& a, const std::set<T>& b) {
    std::size_t n = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++n;
            ++ia;
            ++ib;
        }
    }
    return n;
}

}  // namespace detail

// Contrast model: lambda·|A∩B| − alpha·|A−B| − beta·|B−A|, with the
// scale function fixed to set cardinality.
template <class T>
double tversky(const std::set<T>& a, const std::set<T>& b, double lambda, double alpha,
               double beta) {
    const auto common = static_cast<double>(detail::intersection_size(a, b));
    const auto only_a = static_cast<double>(a.size()) - common;
    const auto only_b = static_cast<double>(b.size()) - common;
    return lambda * common - alpha * only_a - beta * only_b;
}

// |A∩B| − |A−B|/|A∪B|, with 0/0 defined as 0. The difference term is
// computed as a reciprocal product so it matches the contrast model
// with lambda=1, alpha=1/|A∪B| on A−B, beta=0 bit-for-bit.
template <class T>
double set_sim(const std::set<T>& a, const std::set<T>& b) {
    const std::size_t common = detail::intersection_size(a, b);
    const std::size_t united = a.size() + b.size() - common;
    if (united == 0) return 0.0;
    const auto only_a = static_cast<double>(a.size() - common);
    return static_cast<double>(common) - (1.0 / static_cast<double>(united)) * only_a;
}

// |A∩B| / |A∪B|, 0 for two empty sets.
template <class T>
double jaccard(const std::set<T>& a, const std::set<T>& b) {
    const std::size_t common = detail::intersection_size(a, b);
    const std::size_t united = a.size() + b.size() - common;
    if (united == 0) return 0.0;
    return static_cast<double>(common) / static_cast<double>(united);
}

}  // namespace rdslink
