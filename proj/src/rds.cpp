#include "rdslink/rds.hpp"

#include <algorithm>
#include <cmath>

#include "rdslink/parallel.hpp"
#include "rdslink/similarity.hpp"

namespace rdslink {

Measurement measure(const Dataset& dataset, const std::vector<Term>& subjects_in) {
    Measurement m;
    // DF ranges over a subject set: repeats must not double statements.
    std::vector<Term> subjects(subjects_in);
    std::sort(subjects.begin(), subjects.end());
    subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
    const auto descriptions = dataset.df(subjects);

    // Per-(subject, predicate) cardinalities over the whole description set.
    std::map<std::pair<std::string, std::string>, std::size_t> cardinality;
    std::size_t triple_count = 0;
    for (const auto& d : descriptions) {
        for (const auto& [p, o] : d.statements) {
            ++cardinality[{d.subject.key(), p.value()}];
            ++triple_count;
        }
    }
    if (triple_count == 0) return m;

    double eta = 0.0;
    for (const auto& [key, count] : cardinality) eta += static_cast<double>(count);
    eta /= static_cast<double>(cardinality.size());
    const double cap = std::max(eta, 5.0);

    for (const auto& d : descriptions) {
        for (const auto& [p, o] : d.statements) {
            m.p_set.insert(p.value());
            if (static_cast<double>(cardinality[{d.subject.key(), p.value()}]) > cap)
                continue;  // noisy predicate on this subject: out of d/o/t
            if (o.is_literal()) m.d_set.insert(o.value());
            if (o.is_uri()) m.o_set.insert(o.value());
            m.t_set.insert({p.value(), o.key()});
        }
    }
    return m;
}

double rds(const Measurement& a, const Measurement& b, SetIndexKind kind) {
    if (kind == SetIndexKind::Jaccard) {
        return jaccard(a.p_set, b.p_set) + jaccard(a.d_set, b.d_set) +
               jaccard(a.o_set, b.o_set) + jaccard(a.t_set, b.t_set);
    }
    return set_sim(a.p_set, b.p_set) + set_sim(a.d_set, b.d_set) + set_sim(a.o_set, b.o_set) +
           set_sim(a.t_set, b.t_set);
}

namespace {

std::string cache_key(const std::vector<Term>& subjects) {
    std::vector<std::string> keys;
    keys.reserve(subjects.size());
    for (const auto& s : subjects) keys.push_back(s.key());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::string joined;
    for (const auto& k : keys) {
        joined += k;
        joined.push_back('\x1f');
    }
    return joined;
}

}  // namespace

const Measurement& MeasurementCache::get(const std::vector<Term>& subjects) {
    const auto key = cache_key(subjects);
    {
        std::lock_guard lock(mutex_);
        const auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Measurement m = measure(*dataset_, subjects);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(m)).first->second;
}

const Measurement& MeasurementCache::get(const Term& subject) {
    return get(std::vector<Term>{subject});
}

double urds(const Term& resource, std::size_t home_index,
            const std::vector<std::vector<Term>>& sets, MeasurementCache& cache,
            const std::vector<Term>& pivots, SetIndexKind kind) {
    const Measurement& own = cache.get(resource);
    double sum = 0.0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& other = sets[i];
        if (i == home_index || other.empty()) continue;
        if (std::find(other.begin(), other.end(), resource) != other.end()) continue;
        sum += rds(own, cache.get(other), kind) / static_cast<double>(other.size());
    }
    for (const auto& pivot : pivots) {
        if (pivot == resource) continue;
        sum += rds(own, cache.get(pivot), kind);
    }
    return std::max(sum, 0.0);
}

ScoreTable score_sets(const Dataset& dataset, const std::vector<std::vector<Term>>& sets,
                      const std::vector<Term>& pivots, SetIndexKind kind, std::size_t threads) {
    ScoreTable table;
    table.set_count = sets.size();
    table.delta_m.resize(sets.size());
    // Member lists are sets: canonicalize once so cardinalities and row
    // order do not depend on caller ordering.
    std::vector<std::vector<Term>> clean(sets);
    for (auto& members : clean) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
    for (std::size_t i = 0; i < clean.size(); ++i)
        for (const auto& member : clean[i]) table.rows.push_back({member, i});

    MeasurementCache cache(dataset);
    // Warm every measurement first so the scoring loop stays read-mostly.
    std::vector<const std::vector<Term>*> keys;
    for (const auto& s : clean)
        if (!s.empty()) keys.push_back(&s);
    parallel_for(keys.size(), threads, [&](std::size_t i) { cache.get(*keys[i]); });
    std::vector<Term> singles;
    for (const auto& row : table.rows) singles.push_back(row.resource);
    for (const auto& pivot : pivots) singles.push_back(pivot);
    parallel_for(singles.size(), threads, [&](std::size_t i) { cache.get(singles[i]); });

    parallel_for(table.rows.size(), threads, [&](std::size_t i) {
        auto& row = table.rows[i];
        row.urds = urds(row.resource, row.set_index, clean, cache, pivots, kind);
    });
    return table;
}

void eliminate_outliers(ScoreTable& table) {
    if (table.rows.empty()) return;
    double mean = 0.0;
    for (const auto& row : table.rows) mean += row.urds;
    mean /= static_cast<double>(table.rows.size());
    double variance = 0.0;
    for (const auto& row : table.rows) {
        const double d = row.urds - mean;
        variance += d * d;
    }
    variance /= static_cast<double>(table.rows.size());
    table.sigma = std::sqrt(variance);
    table.phi = mean - table.sigma;
    if (table.sigma <= 0.13) return;  // narrow spread has no bell curve to cut
    for (auto& row : table.rows)
        if (row.urds < table.phi) row.eliminated = true;
}

void crds_normalize(ScoreTable& table) {
    for (std::size_t set = 0; set < table.set_count; ++set) {
        double max_urds = 0.0;
        for (const auto& row : table.rows)
            if (row.set_index == set && !row.eliminated) max_urds = std::max(max_urds, row.urds);
        for (auto& row : table.rows) {
            if (row.set_index != set || row.eliminated) continue;
            row.delta = max_urds > 0.0 ? row.urds / max_urds : 0.0;
        }
    }
}

namespace {

double median_of_sorted(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

std::optional<SelectionPolicy> SelectionPolicy::parse(const std::string& text) {
    if (text == "delta-m") return delta_m();
    const auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const auto name = text.substr(0, colon);
    const auto arg = text.substr(colon + 1);
    try {
        std::size_t used = 0;
        if (name == "fixed") {
            const double t = std::stod(arg, &used);
            if (used != arg.size()) return std::nullopt;
            return fixed(t);
        }
        if (name == "top-k") {
            const long k = std::stol(arg, &used);
            if (used != arg.size() || k < 1) return std::nullopt;
            return top_k(static_cast<std::size_t>(k));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::string SelectionPolicy::describe() const {
    switch (kind) {
        case Kind::DeltaM: return "delta-m";
        case Kind::Fixed: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "fixed:%g", threshold);
            return buf;
        }
        case Kind::TopK: return "top-k:" + std::to_string(k);
    }
    return {};
}

std::vector<std::vector<std::size_t>> select(ScoreTable& table, const SelectionPolicy& policy) {
    std::vector<std::vector<std::size_t>> chosen(table.set_count);
    for (std::size_t set = 0; set < table.set_count; ++set) {
        std::vector<std::size_t> survivors;
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            if (table.rows[i].set_index == set && !table.rows[i].eliminated &&
                table.rows[i].delta)
                survivors.push_back(i);
        if (survivors.empty()) continue;

        std::sort(survivors.begin(), survivors.end(), [&](std::size_t a, std::size_t b) {
            const auto& ra = table.rows[a];
            const auto& rb = table.rows[b];
            if (*ra.delta != *rb.delta) return *ra.delta > *rb.delta;
            if (ra.urds != rb.urds) return ra.urds > rb.urds;
            return ra.resource < rb.resource;
        });

        switch (policy.kind) {
            case SelectionPolicy::Kind::DeltaM: {
                std::vector<double> deltas;
                deltas.reserve(survivors.size());
                for (const auto i : survivors) deltas.push_back(*table.rows[i].delta);
                std::vector<double> sorted(deltas);
                std::sort(sorted.begin(), sorted.end());
                double mean = 0.0;
                for (const auto d : sorted) mean += d;
                mean /= static_cast<double>(sorted.size());
                const double threshold = std::max(mean, median_of_sorted(sorted));
                table.delta_m[set] = threshold;
                for (const auto i : survivors)
                    if (*table.rows[i].delta >= threshold) chosen[set].push_back(i);
                break;
            }
            case SelectionPolicy::Kind::Fixed:
                for (const auto i : survivors)
                    if (*table.rows[i].delta >= policy.threshold) chosen[set].push_back(i);
                break;
            case SelectionPolicy::Kind::TopK:
                for (std::size_t n = 0; n < std::min(policy.k, survivors.size()); ++n)
                    chosen[set].push_back(survivors[n]);
                break;
        }
    }
    return chosen;
}

}  // namespace rdslink
