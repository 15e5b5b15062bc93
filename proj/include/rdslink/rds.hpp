#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdslink/dataset.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

// Set index plugged into the resource-description score. SetSim is the
// production choice; Jaccard exists for the index-comparison experiment.
enum class SetIndexKind { SetSim, Jaccard };

// Items of measurement over one resource set: predicates, literal
// lexical forms, object IRIs, and predicate/object pairs. p_set is
// unfiltered; d/o/t come from triples surviving the cardinality noise
// filter C(s,p) <= max(eta, 5).
struct Measurement {
    std::set<std::string> p_set;
    std::set<std::string> d_set;
    std::set<std::string> o_set;
    std::set<std::pair<std::string, std::string>> t_set;
};

Measurement measure(const Dataset& dataset, const std::vector<Term>& subjects);

// Sum of the four per-item set similarities, equally weighted.
double rds(const Measurement& a, const Measurement& b,
           SetIndexKind kind = SetIndexKind::SetSim);

// Memoizes measure() per subject set. Thread-safe.
class MeasurementCache {
public:
    explicit MeasurementCache(const Dataset& dataset) : dataset_(&dataset) {}

    const Measurement& get(const std::vector<Term>& subjects);
    const Measurement& get(const Term& subject);

private:
    const Dataset* dataset_;
    std::mutex mutex_;
    std::map<std::string, Measurement> cache_;
};

// Raw cross-set score: sum over every other nonempty set S' not
// containing the resource (pivot singletons included) of
// rds({r}, S') / |S'|, clamped below at zero.
double urds(const Term& resource, std::size_t home_index,
            const std::vector<std::vector<Term>>& sets, MeasurementCache& cache,
            const std::vector<Term>& pivots, SetIndexKind kind = SetIndexKind::SetSim);

struct ScoreRow {
    Term resource;
    std::size_t set_index = 0;
    double urds = 0.0;
    std::optional<double> delta;
    bool eliminated = false;
};

struct ScoreTable {
    std::vector<ScoreRow> rows;  // grouped by set, members in IRI order
    std::size_t set_count = 0;
    double phi = 0.0;
    double sigma = 0.0;
    std::vector<std::optional<double>> delta_m;  // filled by the delta_m policy
};

// One row per member of each nonempty set. threads == 0 uses the
// hardware concurrency.
ScoreTable score_sets(const Dataset& dataset, const std::vector<std::vector<Term>>& sets,
                      const std::vector<Term>& pivots,
                      SetIndexKind kind = SetIndexKind::SetSim, std::size_t threads = 1);

// Drops rows under phi = mean - sigma when the score spread is wide
// enough (population sigma > 0.13); otherwise leaves the table alone.
void eliminate_outliers(ScoreTable& table);

// Per home set, delta = urds / max surviving urds (all zero stays zero).
void crds_normalize(ScoreTable& table);

struct SelectionPolicy {
    enum class Kind { DeltaM, Fixed, TopK };
    Kind kind = Kind::DeltaM;
    double threshold = 0.0;  // Fixed
    std::size_t k = 1;       // TopK

    static SelectionPolicy delta_m() { return {}; }
    static SelectionPolicy fixed(double threshold) { return {Kind::Fixed, threshold, 1}; }
    static SelectionPolicy top_k(std::size_t k) { return {Kind::TopK, 0.0, k}; }

    // "delta-m" | "fixed:<x>" | "top-k:<k>"; nullopt when unparseable.
    static std::optional<SelectionPolicy> parse(const std::string& text);
    std::string describe() const;
};

// Chosen row indexes per set, ordered by (delta desc, urds desc, IRI).
std::vector<std::vector<std::size_t>> select(ScoreTable& table, const SelectionPolicy& policy);

}  // namespace rdslink
