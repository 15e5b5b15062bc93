#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rdslink/candidates.hpp"
#include "rdslink/dataset.hpp"
#include "rdslink/rds.hpp"
#include "rdslink/target.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

// How accepted matches feed later chunks as pivot singletons.
enum class PivotMode { FifoMu, Cumulative, Off };

struct PipelineConfig {
    std::string class_of_interest;
    std::size_t mu = 20;  // chunk size, >= 2
    double jw_floor = 0.70;
    std::size_t max_label_len = 200;
    SelectionPolicy policy = SelectionPolicy::delta_m();
    std::size_t pool_cap = 500;
    uint64_t sampling_seed = 0;
    std::size_t profile_sample_cap = 100000;
    SetIndexKind set_index = SetIndexKind::SetSim;
    PivotMode pivot_mode = PivotMode::FifoMu;
    std::size_t threads = 1;
};

struct AlignmentLink {
    std::string source;
    std::string target;
    double delta = 0.0;
    double urds = 0.0;

    friend bool operator==(const AlignmentLink&, const AlignmentLink&) = default;
};

struct RunStats {
    std::size_t instances = 0;
    std::size_t chunks = 0;
    std::size_t candidate_sets = 0;
    std::size_t nonempty_sets = 0;
    std::size_t links = 0;
    long long profile_ms = 0;
    long long candidates_ms = 0;
    long long scoring_ms = 0;
    long long total_ms = 0;
};

struct RunResult {
    std::vector<AlignmentLink> links;  // source asc, delta desc, target asc
    RunStats stats;
};

// Full interlinking run: pick the instances of the class of interest,
// profile both sides, then walk IRI-ordered chunks of size mu building
// pseudo-homonym sets, scoring them, and selecting matches. Selected
// matches feed later chunks as pivots per config.pivot_mode.
RunResult run(const Dataset& source_ds, TargetHandle& target, const PipelineConfig& config);

// links.nt (owl:sameAs statements) and links.tsv
// (source \t target \t delta \t urds).
void emit_links(const std::vector<AlignmentLink>& links, const std::filesystem::path& nt_path,
                const std::filesystem::path& tsv_path);

}  // namespace rdslink
