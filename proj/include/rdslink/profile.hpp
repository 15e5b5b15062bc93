#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdslink/dataset.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

struct ProfileOptions {
    std::size_t max_label_len = 200;  // strict upper bound, Unicode scalars
    std::size_t sample_cap = 0;       // per-predicate value sample; 0 = keep all
    uint64_t seed = 0;
    std::size_t min_subjects = 2;
};

struct LabelPredicate {
    Term predicate;
    double entropy = 0.0;
};

// Entity-label predicates ranked by entropy (descending, ties by IRI).
// omega_threshold is the mean entropy over every predicate considered.
struct LabelProfile {
    std::vector<LabelPredicate> ranked;
    double omega_threshold = 0.0;

    std::vector<Term> predicates() const {
        std::vector<Term> out;
        out.reserve(ranked.size());
        for (const auto& r : ranked) out.push_back(r.predicate);
        return out;
    }
};

struct PredicateCensusRow {
    Term predicate;
    double entropy = 0.0;
    std::size_t subject_count = 0;
    bool qualifies = false;
};

struct ProfileReport {
    std::vector<PredicateCensusRow> considered;  // sorted like the profile
    LabelProfile profile;
};

// Shannon entropy in bits over the empirical value distribution.
// Throws std::invalid_argument on an empty multiset.
double entropy(const std::vector<std::string>& values);

// Considers every predicate whose literal objects on the given subjects
// all stay under max_label_len and that appears on at least
// min_subjects subjects. Report keeps the full census for inspection.
ProfileReport build_label_profile_report(const Dataset& dataset,
                                         const std::vector<Term>& subjects,
                                         const ProfileOptions& options = {});

// Same, but throws NoLabelPropertyError when nothing qualifies.
LabelProfile build_label_profile(const Dataset& dataset, const std::vector<Term>& subjects,
                                 const ProfileOptions& options = {});

// One label value of the rank-th profiled predicate on the subject; the
// lexicographically smallest wins when there are several. nullopt when
// the subject lacks that predicate (caller advances the rank).
std::optional<std::string> label_of(const Dataset& dataset, const Term& subject,
                                    const LabelProfile& profile, std::size_t rank);

}  // namespace rdslink
