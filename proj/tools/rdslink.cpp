#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "rdslink/dataset.hpp"
#include "rdslink/endpoint.hpp"
#include "rdslink/errors.hpp"
#include "rdslink/evalkit.hpp"
#include "rdslink/log.hpp"
#include "rdslink/ntriples.hpp"
#include "rdslink/pipeline.hpp"
#include "rdslink/profile.hpp"
#include "rdslink/target.hpp"
#include "rdslink/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

namespace fs = std::filesystem;
using namespace rdslink;

Dataset load_dataset(const std::string& path, bool lenient, std::size_t* skipped = nullptr) {
    std::size_t local_skipped = 0;
    auto triples = parse_ntriples_file(path, lenient, &local_skipped);
    if (lenient && local_skipped > 0)
        log::warn(path + ": skipped " + std::to_string(local_skipped) + " malformed lines");
    if (skipped) *skipped = local_skipped;
    return Dataset::load(std::move(triples));
}

bool is_url(const std::string& target) {
    return target.rfind("http://", 0) == 0 || target.rfind("https://", 0) == 0;
}

struct LinkArgs {
    std::string source;
    std::string target;
    PipelineConfig config;
    std::string policy_text = "delta-m";
    std::string set_index_text = "setsim";
    std::string out_dir = ".";
    bool lenient = false;
};

void write_manifest(const fs::path& path, const LinkArgs& args, const RunStats& stats,
                    std::size_t source_triples, std::size_t skipped_lines) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << "version=rdslink " << kVersion << "\n"
        << "source=" << args.source << "\n"
        << "target=" << args.target << "\n"
        << "class=" << args.config.class_of_interest << "\n"
        << "mu=" << args.config.mu << "\n"
        << "policy=" << args.config.policy.describe() << "\n"
        << "jw_floor=" << args.config.jw_floor << "\n"
        << "pool_cap=" << args.config.pool_cap << "\n"
        << "max_label_len=" << args.config.max_label_len << "\n"
        << "set_index=" << (args.config.set_index == SetIndexKind::SetSim ? "setsim" : "jaccard")
        << "\n"
        << "seed=" << args.config.sampling_seed << "\n"
        << "threads=" << args.config.threads << "\n"
        << "lenient=" << (args.lenient ? "true" : "false") << "\n"
        << "source_triples=" << source_triples << "\n"
        << "skipped_lines=" << skipped_lines << "\n"
        << "instances=" << stats.instances << "\n"
        << "chunks=" << stats.chunks << "\n"
        << "candidate_sets=" << stats.candidate_sets << "\n"
        << "nonempty_sets=" << stats.nonempty_sets << "\n"
        << "links=" << stats.links << "\n"
        << "profile_ms=" << stats.profile_ms << "\n"
        << "candidates_ms=" << stats.candidates_ms << "\n"
        << "scoring_ms=" << stats.scoring_ms << "\n"
        << "total_ms=" << stats.total_ms << "\n";
}

int cmd_link(const LinkArgs& args_in) {
    LinkArgs args = args_in;
    const auto policy = SelectionPolicy::parse(args.policy_text);
    if (!policy) {
        std::cerr << "invalid --policy value: " << args.policy_text
                  << " (expected delta-m, fixed:<x>, or top-k:<k>)\n";
        return kExitConfig;
    }
    args.config.policy = *policy;
    if (args.set_index_text == "setsim") {
        args.config.set_index = SetIndexKind::SetSim;
    } else if (args.set_index_text == "jaccard") {
        args.config.set_index = SetIndexKind::Jaccard;
    } else {
        std::cerr << "invalid --set-index value: " << args.set_index_text << "\n";
        return kExitConfig;
    }
    if (args.config.mu < 2) {
        std::cerr << "--mu must be at least 2\n";
        return kExitConfig;
    }

    try {
        std::size_t skipped = 0;
        const Dataset source_ds = load_dataset(args.source, args.lenient, &skipped);

        std::unique_ptr<Dataset> target_ds;
        std::unique_ptr<TargetHandle> target;
        if (is_url(args.target)) {
            EndpointHandle handle;
            handle.base_url = args.target;
            target = std::make_unique<RemoteTarget>(std::move(handle));
        } else {
            std::size_t target_skipped = 0;
            target_ds = std::make_unique<Dataset>(
                load_dataset(args.target, args.lenient, &target_skipped));
            skipped += target_skipped;
            target = std::make_unique<LocalTarget>(*target_ds);
        }

        const RunResult result = run(source_ds, *target, args.config);

        fs::create_directories(args.out_dir);
        const fs::path out(args.out_dir);
        emit_links(result.links, out / "links.nt", out / "links.tsv");
        write_manifest(out / "manifest.txt", args, result.stats, source_ds.size(), skipped);
        // status goes to stderr; stdout stays free for data
        std::cerr << "linked " << result.stats.links << " pairs from " << result.stats.instances
                  << " instances (" << result.stats.total_ms << " ms)\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "link failed: " << e.what() << "\n";
        return kExitData;
    }
}

int cmd_eval(const std::string& found_path, const std::string& reference_path, bool verbose) {
    try {
        const AlignmentSet found = load_found(found_path);
        const AlignmentSet reference = load_reference(reference_path);
        const Metrics m = score(found, reference);
        if (verbose) std::cerr << format_report(m);
        std::cout << format_key_values(m) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "eval failed: " << e.what() << "\n";
        return kExitConfig;
    }
}

int cmd_profile(const std::string& dataset_path, const std::string& class_iri, bool lenient) {
    try {
        const Dataset ds = load_dataset(dataset_path, lenient);
        std::vector<Term> subjects;
        if (!class_iri.empty()) {
            subjects = ds.instances_of_class(Term::uri(class_iri));
            if (subjects.empty()) throw NoInstancesError(class_iri);
        } else {
            subjects = ds.literal_bearing_subjects();
        }
        if (subjects.empty()) {
            std::cout << "no qualifying predicates\n";
            return kExitOk;
        }
        const auto report = build_label_profile_report(ds, subjects);
        if (report.considered.empty()) {
            std::cout << "no qualifying predicates\n";
            return kExitOk;
        }
        char buf[64];
        for (const auto& row : report.considered) {
            std::snprintf(buf, sizeof(buf), "%.4f", row.entropy);
            std::cout << buf << "\t" << (row.qualifies ? "label  " : "      ") << "\t"
                      << row.predicate.value() << "\n";
        }
        std::snprintf(buf, sizeof(buf), "%.4f", report.profile.omega_threshold);
        std::cout << "omega_threshold=" << buf << " (mean over " << report.considered.size()
                  << " predicates)\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "profile failed: " << e.what() << "\n";
        return kExitData;
    }
}

int cmd_classes(const std::string& dataset_path, bool lenient) {
    try {
        const Dataset ds = load_dataset(dataset_path, lenient);
        for (const auto& [class_iri, count] : ds.class_census())
            std::cout << count << "\t" << class_iri << "\n";
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "classes failed: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rdslink: unsupervised RDF instance matching and interlinking"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("rdslink ") + rdslink::kVersion);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Log at debug level");

    LinkArgs link_args;
    auto* link = app.add_subcommand("link", "Match instances of a class against a target");
    link->add_option("--source", link_args.source, "Source dataset (N-Triples)")->required();
    link->add_option("--target", link_args.target, "Target dataset (N-Triples file or SPARQL URL)")
        ->required();
    link->add_option("--class", link_args.config.class_of_interest,
                     "IRI of the class of interest")
        ->required();
    link->add_option("--mu", link_args.config.mu, "Chunk size (>= 2)")->capture_default_str();
    link->add_option("--policy", link_args.policy_text,
                     "Selection policy: delta-m, fixed:<x>, or top-k:<k>")
        ->capture_default_str();
    link->add_option("--jw-floor", link_args.config.jw_floor,
                     "Minimum Jaro-Winkler for candidates")
        ->capture_default_str();
    link->add_option("--out", link_args.out_dir, "Output directory")->capture_default_str();
    link->add_option("--seed", link_args.config.sampling_seed, "Profile sampling seed")
        ->capture_default_str();
    link->add_option("--pool-cap", link_args.config.pool_cap, "Candidate pool cap per query")
        ->capture_default_str();
    link->add_option("--max-label-len", link_args.config.max_label_len,
                     "Maximum label length in characters")
        ->capture_default_str();
    link->add_option("--set-index", link_args.set_index_text,
                     "Set similarity in the description score: setsim or jaccard")
        ->capture_default_str();
    link->add_option("--threads", link_args.config.threads, "Worker thread cap (0 = hardware)")
        ->capture_default_str();
    link->add_flag("--lenient", link_args.lenient, "Skip malformed N-Triples lines");
    std::string pivot_mode = "fifo";
    link->add_option("--pivots", pivot_mode, "Pivot retention: fifo, cumulative, or off")
        ->capture_default_str();

    std::string found_path;
    std::string reference_path;
    auto* eval = app.add_subcommand("eval", "Score a link set against a reference alignment");
    eval->add_option("--found", found_path, "Produced links (.tsv or .nt)")->required();
    eval->add_option("--reference", reference_path, "Reference alignment (TSV or Alignment XML)")
        ->required();

    std::string profile_dataset;
    std::string profile_class;
    bool profile_lenient = false;
    auto* profile = app.add_subcommand("profile", "Show entity-label predicate entropies");
    profile->add_option("--dataset", profile_dataset, "Dataset (N-Triples)")->required();
    profile->add_option("--class", profile_class, "Restrict to instances of this class IRI");
    profile->add_flag("--lenient", profile_lenient, "Skip malformed N-Triples lines");

    std::string classes_dataset;
    bool classes_lenient = false;
    auto* classes = app.add_subcommand("classes", "List rdf:type classes with instance counts");
    classes->add_option("--dataset", classes_dataset, "Dataset (N-Triples)")->required();
    classes->add_flag("--lenient", classes_lenient, "Skip malformed N-Triples lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }
    if (verbose) rdslink::log::set_level(rdslink::log::Level::Debug);

    if (link->parsed()) {
        if (pivot_mode == "fifo") {
            link_args.config.pivot_mode = PivotMode::FifoMu;
        } else if (pivot_mode == "cumulative") {
            link_args.config.pivot_mode = PivotMode::Cumulative;
        } else if (pivot_mode == "off") {
            link_args.config.pivot_mode = PivotMode::Off;
        } else {
            std::cerr << "invalid --pivots value: " << pivot_mode << "\n";
            return kExitConfig;
        }
        return cmd_link(link_args);
    }
    if (eval->parsed()) return cmd_eval(found_path, reference_path, verbose);
    if (profile->parsed()) return cmd_profile(profile_dataset, profile_class, profile_lenient);
    if (classes->parsed()) return cmd_classes(classes_dataset, classes_lenient);
    return kExitConfig;
}
