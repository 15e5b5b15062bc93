#include "rdslink/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rdslink/similarity.hpp"

namespace rdslink {

namespace {

// Scores are grouped after rounding so "the subject resource(s) with a
// maximum Jaro-Winkler" keeps every tie.
double round_score(double score) { return std::round(score * 1e9) / 1e9; }

}  // namespace

PseudoHomonymSet build_pseudo_homonyms(const Term& source_subject,
                                       const LabelProfile& source_profile,
                                       const Dataset& source_ds,
                                       const LabelProfile& target_profile, TargetHandle& target,
                                       double jw_floor, std::size_t pool_cap) {
    PseudoHomonymSet result;
    result.source = source_subject;
    const auto target_predicates = target_profile.predicates();

    for (std::size_t rank = 0; rank < source_profile.ranked.size(); ++rank) {
        const auto label = label_of(source_ds, source_subject, source_profile, rank);
        if (!label) continue;  // subject lacks this predicate, try the next

        const auto hits = target.search_literals(*label, target_predicates, pool_cap);
        std::map<Term, double> best_per_subject;
        for (const auto& hit : hits) {
            if (!hit.subject.is_uri()) continue;  // links must dereference
            const double score = round_score(jaro_winkler(*label, hit.literal));
            auto [it, inserted] = best_per_subject.try_emplace(hit.subject, score);
            if (!inserted) it->second = std::max(it->second, score);
        }
        if (best_per_subject.empty()) continue;  // nothing retrieved, next label

        double max_score = 0.0;
        for (const auto& [subject, score] : best_per_subject)
            max_score = std::max(max_score, score);

        result.query_label = *label;
        result.label_rank_used = rank;
        result.max_score = max_score;
        if (max_score >= jw_floor) {
            for (const auto& [subject, score] : best_per_subject)
                if (score == max_score) result.members.push_back(subject);
        }
        return result;  // hits existed: stop here either way
    }
    result.label_rank_used = source_profile.ranked.size();
    return result;
}

PseudoHomonymSet build_pseudo_homonyms(const Term& source_subject,
                                       const LabelProfile& source_profile,
                                       const Dataset& source_ds,
                                       const LabelProfile& target_profile,
                                       const Dataset& target_ds, double jw_floor,
                                       std::size_t pool_cap) {
    LocalTarget target(target_ds);
    return build_pseudo_homonyms(source_subject, source_profile, source_ds, target_profile,
                                 target, jw_floor, pool_cap);
}

}  // namespace rdslink
