#include "rdslink/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "rdslink/errors.hpp"
#include "rdslink/text.hpp"

namespace rdslink {

double entropy(const std::vector<std::string>& values) {
    if (values.empty()) throw std::invalid_argument("entropy over an empty multiset");
    std::map<std::string, std::size_t> counts;
    for (const auto& v : values) ++counts[v];
    const auto n = static_cast<double>(values.size());
    double h = 0.0;
    for (const auto& [value, count] : counts) {
        const double p = static_cast<double>(count) / n;
        h -= p * std::log2(p);
    }
    return h;
}

namespace {

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

struct PredicateBucket {
    std::vector<std::string> values;  // sampled literal lexical forms
    std::set<std::string> subjects;
    std::size_t seen = 0;  // full stream length, pre-sampling
    bool has_long_value = false;
};

}  // namespace

ProfileReport build_label_profile_report(const Dataset& dataset,
                                         const std::vector<Term>& subjects,
                                         const ProfileOptions& options) {
    std::vector<Term> ordered(subjects);
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    std::map<std::string, PredicateBucket> buckets;
    std::map<std::string, std::mt19937_64> rngs;
    for (const auto& subject : ordered) {
        for (const auto& [predicate, object] : dataset.description(subject).statements) {
            if (!object.is_literal()) continue;
            auto& bucket = buckets[predicate.value()];
            bucket.subjects.insert(subject.key());
            if (utf8_length(object.value()) >= options.max_label_len) {
                bucket.has_long_value = true;
                continue;
            }
            // Reservoir sampling, per-predicate RNG for reproducibility.
            if (options.sample_cap == 0 || bucket.values.size() < options.sample_cap) {
                bucket.values.push_back(object.value());
            } else {
                auto [it, inserted] = rngs.try_emplace(
                    predicate.value(), std::mt19937_64(options.seed ^ fnv1a(predicate.value())));
                std::uniform_int_distribution<std::size_t> pick(0, bucket.seen);
                const std::size_t j = pick(it->second);
                if (j < options.sample_cap) bucket.values[j] = object.value();
            }
            ++bucket.seen;
        }
    }

    ProfileReport report;
    double entropy_sum = 0.0;
    for (const auto& [predicate_iri, bucket] : buckets) {
        if (bucket.has_long_value || bucket.values.empty()) continue;
        if (bucket.subjects.size() < options.min_subjects) continue;
        PredicateCensusRow row;
        row.predicate = Term::uri(predicate_iri);
        row.entropy = entropy(bucket.values);
        row.subject_count = bucket.subjects.size();
        report.considered.push_back(std::move(row));
        entropy_sum += report.considered.back().entropy;
    }
    if (report.considered.empty()) return report;

    const double omega = entropy_sum / static_cast<double>(report.considered.size());
    report.profile.omega_threshold = omega;
    std::sort(report.considered.begin(), report.considered.end(), [](const auto& a, const auto& b) {
        return a.entropy != b.entropy ? a.entropy > b.entropy
                                      : a.predicate.value() < b.predicate.value();
    });
    for (auto& row : report.considered) {
        row.qualifies = row.entropy >= omega;
        if (row.qualifies) report.profile.ranked.push_back({row.predicate, row.entropy});
    }
    return report;
}

LabelProfile build_label_profile(const Dataset& dataset, const std::vector<Term>& subjects,
                                 const ProfileOptions& options) {
    auto report = build_label_profile_report(dataset, subjects, options);
    if (report.profile.ranked.empty()) throw NoLabelPropertyError();
    return std::move(report.profile);
}

std::optional<std::string> label_of(const Dataset& dataset, const Term& subject,
                                    const LabelProfile& profile, std::size_t rank) {
    if (rank >= profile.ranked.size()) return std::nullopt;
    const auto& predicate = profile.ranked[rank].predicate;
    std::optional<std::string> best;
    for (const auto& [p, o] : dataset.description(subject).statements) {
        if (p != predicate || !o.is_literal()) continue;
        if (!best || o.value() < *best) best = o.value();
    }
    return best;
}

}  // namespace rdslink
