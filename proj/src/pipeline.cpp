#include "rdslink/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <fstream>
#include <set>

#include "rdslink/errors.hpp"
#include "rdslink/ntriples.hpp"
#include "rdslink/parallel.hpp"

namespace rdslink {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Pivot {
    Term term;
    std::vector<Triple> triples;
};

}  // namespace

RunResult run(const Dataset& source_ds, TargetHandle& target, const PipelineConfig& config) {
    if (config.mu < 2) throw Error("chunk size mu must be at least 2");
    const auto t_total = Clock::now();
    RunResult result;

    const Term class_uri = Term::uri(config.class_of_interest);
    std::vector<Term> instances;
    for (auto& s : source_ds.instances_of_class(class_uri))
        if (s.is_uri()) instances.push_back(std::move(s));  // blank nodes never link
    if (instances.empty()) throw NoInstancesError(config.class_of_interest);
    result.stats.instances = instances.size();

    const auto t_profile = Clock::now();
    const ProfileOptions source_options{config.max_label_len, 0, config.sampling_seed};
    const LabelProfile source_profile = build_label_profile(source_ds, instances, source_options);
    const ProfileOptions target_options{config.max_label_len, config.profile_sample_cap,
                                        config.sampling_seed};
    const LabelProfile target_profile = target.profile(target_options);
    result.stats.profile_ms = ms_since(t_profile);

    std::deque<Pivot> pivots;
    for (std::size_t chunk_start = 0; chunk_start < instances.size(); chunk_start += config.mu) {
        ++result.stats.chunks;
        const std::size_t chunk_end = std::min(chunk_start + config.mu, instances.size());
        const std::size_t chunk_size = chunk_end - chunk_start;

        const auto t_candidates = Clock::now();
        std::vector<PseudoHomonymSet> ph_sets(chunk_size);
        parallel_for(chunk_size, config.threads, [&](std::size_t i) {
            ph_sets[i] =
                build_pseudo_homonyms(instances[chunk_start + i], source_profile, source_ds,
                                      target_profile, target, config.jw_floor, config.pool_cap);
        });
        result.stats.candidates_ms += ms_since(t_candidates);
        result.stats.candidate_sets += chunk_size;

        std::set<Term> member_union;
        for (const auto& ph : ph_sets) {
            if (!ph.empty()) ++result.stats.nonempty_sets;
            member_union.insert(ph.members.begin(), ph.members.end());
        }
        if (member_union.empty()) continue;

        const auto t_scoring = Clock::now();
        std::vector<Triple> chunk_triples =
            target.describe({member_union.begin(), member_union.end()});
        for (const auto& pivot : pivots)
            chunk_triples.insert(chunk_triples.end(), pivot.triples.begin(),
                                 pivot.triples.end());
        const Dataset chunk_ds = Dataset::load(std::move(chunk_triples));

        std::vector<std::vector<Term>> sets;
        sets.reserve(ph_sets.size());
        for (const auto& ph : ph_sets) sets.push_back(ph.members);
        std::vector<Term> pivot_terms;
        pivot_terms.reserve(pivots.size());
        for (const auto& pivot : pivots) pivot_terms.push_back(pivot.term);

        ScoreTable table =
            score_sets(chunk_ds, sets, pivot_terms, config.set_index, config.threads);
        eliminate_outliers(table);
        crds_normalize(table);
        const auto chosen = select(table, config.policy);
        result.stats.scoring_ms += ms_since(t_scoring);

        for (std::size_t i = 0; i < ph_sets.size(); ++i) {
            if (chosen[i].empty()) continue;
            for (const auto row_index : chosen[i]) {
                const auto& row = table.rows[row_index];
                result.links.push_back({ph_sets[i].source.value(), row.resource.value(),
                                        row.delta.value_or(0.0), row.urds});
            }
            if (config.pivot_mode == PivotMode::Off) continue;
            // chosen[i] is ordered best-first; its head becomes the pivot.
            const auto& best = table.rows[chosen[i].front()];
            Pivot pivot{best.resource, {}};
            for (const auto& [p, o] : chunk_ds.description(best.resource).statements)
                pivot.triples.emplace_back(best.resource, p, o);
            pivots.push_back(std::move(pivot));
            if (config.pivot_mode == PivotMode::FifoMu)
                while (pivots.size() > config.mu) pivots.pop_front();
        }
    }

    std::sort(result.links.begin(), result.links.end(), [](const auto& a, const auto& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.delta != b.delta) return a.delta > b.delta;
        return a.target < b.target;
    });
    result.stats.links = result.links.size();
    result.stats.total_ms = ms_since(t_total);
    return result;
}

void emit_links(const std::vector<AlignmentLink>& links_in,
                const std::filesystem::path& nt_path, const std::filesystem::path& tsv_path) {
    std::vector<AlignmentLink> links(links_in);
    std::sort(links.begin(), links.end(), [](const auto& a, const auto& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.delta != b.delta) return a.delta > b.delta;
        return a.target < b.target;
    });
    std::ofstream nt(nt_path, std::ios::binary);
    if (!nt) throw Error("cannot write " + nt_path.string());
    const Term same_as = Term::uri(vocab::kOwlSameAs);
    for (const auto& link : links)
        nt << to_ntriples(Triple(Term::uri(link.source), same_as, Term::uri(link.target)))
           << "\n";

    std::ofstream tsv(tsv_path, std::ios::binary);
    if (!tsv) throw Error("cannot write " + tsv_path.string());
    char buf[64];
    for (const auto& link : links) {
        std::snprintf(buf, sizeof(buf), "%.6f\t%.6f", link.delta, link.urds);
        tsv << link.source << "\t" << link.target << "\t" << buf << "\n";
    }
}

}  // namespace rdslink
