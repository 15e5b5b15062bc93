#pragma once

#include <string>
#include <vector>

#include "rdslink/dataset.hpp"
#include "rdslink/profile.hpp"
#include "rdslink/target.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

// The target resources sharing a label with one source resource. All
// members attained the pool's maximum Jaro-Winkler score against
// query_label; blank nodes are never members. members stays empty when
// the best score fell under the floor or no label produced a hit;
// label_rank_used == ranks_exhausted() marks a source without a single
// usable label value.
struct PseudoHomonymSet {
    Term source;
    std::string query_label;
    std::vector<Term> members;  // sorted by IRI
    double max_score = 0.0;
    std::size_t label_rank_used = 0;

    bool empty() const { return members.empty(); }
};

// Walks source label predicates from the highest entropy down: a rank
// whose label finds no hits advances to the next; the first rank with
// hits decides (max Jaro-Winkler kept only at or above jw_floor).
PseudoHomonymSet build_pseudo_homonyms(const Term& source_subject,
                                       const LabelProfile& source_profile,
                                       const Dataset& source_ds,
                                       const LabelProfile& target_profile, TargetHandle& target,
                                       double jw_floor = 0.70, std::size_t pool_cap = 500);

PseudoHomonymSet build_pseudo_homonyms(const Term& source_subject,
                                       const LabelProfile& source_profile,
                                       const Dataset& source_ds,
                                       const LabelProfile& target_profile,
                                       const Dataset& target_ds, double jw_floor = 0.70,
                                       std::size_t pool_cap = 500);

}  // namespace rdslink
