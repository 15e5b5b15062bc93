#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdslink/term.hpp"

namespace rdslink {

// All statements of one subject, in dataset order.
struct Description {
    Term subject;
    std::vector<std::pair<Term, Term>> statements;
};

struct SearchHit {
    Term subject;
    std::string literal;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
    friend auto operator<=>(const SearchHit&, const SearchHit&) = default;
};

struct PredicateStats {
    std::size_t triple_count = 0;
    std::size_t distinct_objects = 0;
};

// In-memory indexed RDF dataset. Immutable once loaded; all queries are
// safe to run concurrently.
class Dataset {
public:
    Dataset() = default;

    // Deduplicates exact repeats (a graph is a set of triples) and
    // builds the subject, predicate, type, and literal-token indexes.
    static Dataset load(std::vector<Triple> triples);

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    const std::vector<Triple>& triples() const { return triples_; }

    Description description(const Term& subject) const;
    std::vector<Description> df(const std::vector<Term>& subjects) const;

    // Subjects s of (s, rdf:type, class_uri), sorted, blank nodes included.
    std::vector<Term> instances_of_class(const Term& class_uri) const;

    // rdf:type objects with instance counts, descending (ties by IRI).
    std::vector<std::pair<std::string, std::size_t>> class_census() const;

    // Subject/literal pairs sharing at least one normalized token with
    // the query, restricted to the given predicates. When more than
    // pool_cap subjects match, the ones sharing the most query tokens
    // win (ties by subject key). Sorted by (subject key, literal).
    std::vector<SearchHit> search_literals(const std::string& query,
                                           const std::vector<Term>& predicates,
                                           std::size_t pool_cap) const;

    const std::map<std::string, PredicateStats>& predicate_stats() const { return by_predicate_; }

    // Distinct subjects with at least one literal-valued statement, sorted.
    std::vector<Term> literal_bearing_subjects() const;

private:
    std::vector<Triple> triples_;
    std::unordered_map<std::string, std::vector<uint32_t>> by_subject_;
    std::map<std::string, PredicateStats> by_predicate_;
    std::unordered_map<std::string, std::vector<uint32_t>> literal_index_;
    std::map<std::string, std::vector<uint32_t>> type_index_;
};

// Shared by the local index and the endpoint client so both trim
// oversized candidate pools identically: rank subjects by shared-token
// count (desc), then subject key (asc), keep pool_cap subjects.
std::vector<SearchHit> trim_search_pool(
    std::vector<std::pair<SearchHit, std::size_t>> hits_with_overlap, std::size_t pool_cap);

}  // namespace rdslink
