#include "rdslink/dataset.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "rdslink/text.hpp"

namespace rdslink {

Dataset Dataset::load(std::vector<Triple> triples) {
    Dataset ds;
    ds.triples_.reserve(triples.size());
    std::set<Triple> seen;
    for (auto& t : triples) {
        if (!seen.insert(t).second) continue;
        const auto idx = static_cast<uint32_t>(ds.triples_.size());
        ds.by_subject_[t.subject.key()].push_back(idx);
        auto& stats = ds.by_predicate_[t.predicate.value()];
        ++stats.triple_count;
        if (t.predicate.value() == vocab::kRdfType && t.object.is_uri())
            ds.type_index_[t.object.value()].push_back(idx);
        if (t.object.is_literal()) {
            for (const auto& token : normalize_tokens(t.object.value()))
                ds.literal_index_[token].push_back(idx);
        }
        ds.triples_.push_back(std::move(t));
    }
    // Distinct-object census per predicate.
    std::map<std::string, std::set<std::string>> distinct;
    for (const auto& t : ds.triples_) distinct[t.predicate.value()].insert(t.object.key());
    for (auto& [pred, objs] : distinct) ds.by_predicate_[pred].distinct_objects = objs.size();
    return ds;
}

Description Dataset::description(const Term& subject) const {
    Description d{subject, {}};
    const auto it = by_subject_.find(subject.key());
    if (it == by_subject_.end()) return d;
    d.statements.reserve(it->second.size());
    for (const auto idx : it->second)
        d.statements.emplace_back(triples_[idx].predicate, triples_[idx].object);
    return d;
}

std::vector<Description> Dataset::df(const std::vector<Term>& subjects) const {
    std::vector<Description> out;
    out.reserve(subjects.size());
    for (const auto& s : subjects) out.push_back(description(s));
    return out;
}

std::vector<Term> Dataset::instances_of_class(const Term& class_uri) const {
    std::set<Term> subjects;
    const auto it = type_index_.find(class_uri.value());
    if (it != type_index_.end())
        for (const auto idx : it->second) subjects.insert(triples_[idx].subject);
    return {subjects.begin(), subjects.end()};
}

std::vector<std::pair<std::string, std::size_t>> Dataset::class_census() const {
    std::vector<std::pair<std::string, std::size_t>> census;
    census.reserve(type_index_.size());
    for (const auto& [class_iri, indexes] : type_index_) {
        std::set<std::string> subjects;
        for (const auto idx : indexes) subjects.insert(triples_[idx].subject.key());
        census.emplace_back(class_iri, subjects.size());
    }
    std::sort(census.begin(), census.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return census;
}

std::vector<Term> Dataset::literal_bearing_subjects() const {
    std::set<Term> subjects;
    for (const auto& t : triples_)
        if (t.object.is_literal()) subjects.insert(t.subject);
    return {subjects.begin(), subjects.end()};
}

std::vector<SearchHit> trim_search_pool(
    std::vector<std::pair<SearchHit, std::size_t>> hits_with_overlap, std::size_t pool_cap) {
    // Best shared-token count per subject.
    std::map<std::string, std::size_t> subject_overlap;
    for (const auto& [hit, overlap] : hits_with_overlap) {
        auto& best = subject_overlap[hit.subject.key()];
        best = std::max(best, overlap);
    }
    if (subject_overlap.size() > pool_cap) {
        std::vector<std::pair<std::string, std::size_t>> ranked(subject_overlap.begin(),
                                                                subject_overlap.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
        ranked.resize(pool_cap);
        std::unordered_set<std::string> keep;
        for (const auto& [key, overlap] : ranked) keep.insert(key);
        std::erase_if(hits_with_overlap,
                      [&](const auto& h) { return !keep.contains(h.first.subject.key()); });
    }
    std::set<SearchHit> out;
    for (auto& [hit, overlap] : hits_with_overlap) out.insert(std::move(hit));
    return {out.begin(), out.end()};
}

std::vector<SearchHit> Dataset::search_literals(const std::string& query,
                                                const std::vector<Term>& predicates,
                                                std::size_t pool_cap) const {
    const auto query_tokens = normalize_tokens(query);
    std::unordered_set<std::string> wanted_predicates;
    for (const auto& p : predicates) wanted_predicates.insert(p.value());

    std::set<uint32_t> candidate_triples;
    for (const auto& token : query_tokens) {
        const auto it = literal_index_.find(token);
        if (it == literal_index_.end()) continue;
        candidate_triples.insert(it->second.begin(), it->second.end());
    }

    std::vector<std::pair<SearchHit, std::size_t>> hits;
    for (const auto idx : candidate_triples) {
        const auto& t = triples_[idx];
        if (!wanted_predicates.contains(t.predicate.value())) continue;
        const auto literal_tokens = normalize_tokens(t.object.value());
        std::size_t overlap = 0;
        for (const auto& token : query_tokens)
            if (std::binary_search(literal_tokens.begin(), literal_tokens.end(), token)) ++overlap;
        if (overlap == 0) continue;
        hits.push_back({SearchHit{t.subject, t.object.value()}, overlap});
    }
    return trim_search_pool(std::move(hits), pool_cap);
}

}  // namespace rdslink
