#pragma once

// Naive re-implementation of the disambiguation math for testing: every
// score is enumerated straight from the raw triple list with plain set
// algebra. No indexes, no caching, no shared code with the library path.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rdslink/rds.hpp"
#include "rdslink/term.hpp"

namespace rds_oracle {

struct Items {
    std::set<std::string> p, d, o;
    std::set<std::pair<std::string, std::string>> t;
};

inline std::string object_key(const rdslink::Term& term) {
    if (term.is_blank()) return "_:" + term.value();
    return term.value();
}

inline Items items_of(const std::vector<rdslink::Triple>& graph,
                      const std::vector<rdslink::Term>& subjects) {
    std::vector<const rdslink::Triple*> description;
    for (const auto& triple : graph)
        for (const auto& subject : subjects)
            if (triple.subject == subject) {
                description.push_back(&triple);
                break;
            }

    std::map<std::pair<std::string, std::string>, std::size_t> cardinality;
    for (const auto* triple : description)
        ++cardinality[{object_key(triple->subject), triple->predicate.value()}];
    double eta = 0.0;
    for (const auto& [key, count] : cardinality) eta += static_cast<double>(count);
    if (!cardinality.empty()) eta /= static_cast<double>(cardinality.size());
    const double cap = std::max(eta, 5.0);

    Items items;
    for (const auto* triple : description) {
        items.p.insert(triple->predicate.value());
        if (static_cast<double>(
                cardinality[{object_key(triple->subject), triple->predicate.value()}]) > cap)
            continue;
        if (triple->object.is_literal()) items.d.insert(triple->object.value());
        if (triple->object.is_uri()) items.o.insert(triple->object.value());
        items.t.insert({triple->predicate.value(), object_key(triple->object)});
    }
    return items;
}

template <class T>
double setsim(const std::set<T>& a, const std::set<T>& b) {
    std::vector<T> inter, only_a, united;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(united));
    if (united.empty()) return 0.0;
    return static_cast<double>(inter.size()) -
           static_cast<double>(only_a.size()) / static_cast<double>(united.size());
}

template <class T>
double jacc(const std::set<T>& a, const std::set<T>& b) {
    std::vector<T> inter, united;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(united));
    if (united.empty()) return 0.0;
    return static_cast<double>(inter.size()) / static_cast<double>(united.size());
}

inline double rds_score(const Items& a, const Items& b, rdslink::SetIndexKind kind) {
    if (kind == rdslink::SetIndexKind::Jaccard)
        return jacc(a.p, b.p) + jacc(a.d, b.d) + jacc(a.o, b.o) + jacc(a.t, b.t);
    return setsim(a.p, b.p) + setsim(a.d, b.d) + setsim(a.o, b.o) + setsim(a.t, b.t);
}

struct Row {
    std::size_t set_index;
    rdslink::Term resource;
    double urds = 0.0;
    bool eliminated = false;
    std::optional<double> delta;
};

struct Result {
    std::vector<Row> rows;
    double sigma = 0.0;
    double phi = 0.0;
    std::vector<std::vector<rdslink::Term>> selected;  // delta_m policy
};

inline Result score(const std::vector<rdslink::Triple>& graph,
                    const std::vector<std::vector<rdslink::Term>>& sets_in,
                    const std::vector<rdslink::Term>& pivots, rdslink::SetIndexKind kind) {
    Result result;
    result.selected.resize(sets_in.size());

    // member lists are sets
    std::vector<std::vector<rdslink::Term>> sets(sets_in);
    for (auto& members : sets) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (const auto& member : sets[i]) {
            Row row{i, member};
            const Items own = items_of(graph, {member});
            double sum = 0.0;
            for (std::size_t j = 0; j < sets.size(); ++j) {
                if (j == i || sets[j].empty()) continue;
                if (std::find(sets[j].begin(), sets[j].end(), member) != sets[j].end()) continue;
                sum += rds_score(own, items_of(graph, sets[j]), kind) /
                       static_cast<double>(sets[j].size());
            }
            for (const auto& pivot : pivots) {
                if (pivot == member) continue;
                sum += rds_score(own, items_of(graph, {pivot}), kind);
            }
            row.urds = std::max(sum, 0.0);
            result.rows.push_back(std::move(row));
        }
    }

    if (!result.rows.empty()) {
        double mean = 0.0;
        for (const auto& row : result.rows) mean += row.urds;
        mean /= static_cast<double>(result.rows.size());
        double variance = 0.0;
        for (const auto& row : result.rows) variance += (row.urds - mean) * (row.urds - mean);
        variance /= static_cast<double>(result.rows.size());
        result.sigma = std::sqrt(variance);
        result.phi = mean - result.sigma;
        if (result.sigma > 0.13)
            for (auto& row : result.rows)
                if (row.urds < result.phi) row.eliminated = true;
    }

    for (std::size_t i = 0; i < sets.size(); ++i) {
        double max_urds = 0.0;
        for (const auto& row : result.rows)
            if (row.set_index == i && !row.eliminated) max_urds = std::max(max_urds, row.urds);
        for (auto& row : result.rows)
            if (row.set_index == i && !row.eliminated)
                row.delta = max_urds > 0.0 ? row.urds / max_urds : 0.0;
    }

    // delta_m selection: threshold = max(mean, median) of surviving deltas.
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<double> deltas;
        for (const auto& row : result.rows)
            if (row.set_index == i && row.delta) deltas.push_back(*row.delta);
        if (deltas.empty()) continue;
        std::sort(deltas.begin(), deltas.end());
        double mean = 0.0;
        for (const auto d : deltas) mean += d;
        mean /= static_cast<double>(deltas.size());
        const double median = deltas.size() % 2 == 1
                                  ? deltas[deltas.size() / 2]
                                  : (deltas[deltas.size() / 2 - 1] + deltas[deltas.size() / 2]) / 2.0;
        const double threshold = std::max(mean, median);
        for (const auto& row : result.rows)
            if (row.set_index == i && row.delta && *row.delta >= threshold)
                result.selected[i].push_back(row.resource);
        std::sort(result.selected[i].begin(), result.selected[i].end());
    }
    return result;
}

}  // namespace rds_oracle
