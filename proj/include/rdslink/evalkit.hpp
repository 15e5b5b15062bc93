#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rdslink {

// Source/target IRI pairs: either a produced link set or a reference
// alignment. Set semantics, duplicates collapse.
struct AlignmentSet {
    std::set<std::pair<std::string, std::string>> pairs;

    void add(std::string source, std::string target) {
        pairs.emplace(std::move(source), std::move(target));
    }
    std::size_t size() const { return pairs.size(); }
};

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    bool precision_undefined = false;  // 0/0, reported as 0
    bool recall_undefined = false;
};

// Reference alignments: TSV (source \t target) or OAEI Alignment XML
// (Cell/entity1/entity2). Format by extension, then content sniffing.
AlignmentSet load_reference(const std::string& path);

// Produced links: links.tsv (first two columns) or an N-Triples file of
// sameAs statements.
AlignmentSet load_found(const std::string& path);

// IRI comparison is exact string equality.
Metrics score(const AlignmentSet& found, const AlignmentSet& reference);

// Plain-text report; notes undefined 0/0 metrics.
std::string format_report(const Metrics& m);
// Machine-readable single line: precision=x recall=y f1=z (3 decimals).
std::string format_key_values(const Metrics& m);

}  // namespace rdslink
