#pragma once

// Shared corpora: a three-country homonym fixture and two synthetic
// source/target corpora with gold alignments.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "rdslink/ntriples.hpp"
#include "rdslink/term.hpp"

namespace fixtures {

using rdslink::Term;
using rdslink::Triple;

inline Triple t(const std::string& s, const std::string& p, const std::string& o) {
    return {Term::uri(s), Term::uri(p), Term::uri(o)};
}
inline Triple lit(const std::string& s, const std::string& p, const std::string& value) {
    return {Term::uri(s), Term::uri(p), Term::literal(value)};
}

struct Corpus {
    std::vector<Triple> source;
    std::vector<Triple> target;
    std::vector<std::pair<std::string, std::string>> gold;
    std::string class_iri;
};

// Three country labels, each ambiguous against rivers/cities that share
// the label and part of the description. The three countries are the
// intended matches.
inline Corpus countries() {
    Corpus c;
    c.class_iri = "http://src/Country";
    const std::string type = rdslink::vocab::kRdfType;

    auto source_country = [&](const std::string& id, const std::string& name) {
        c.source.push_back(t("http://src/" + id, type, c.class_iri));
        c.source.push_back(lit("http://src/" + id, "http://src/name", name));
        c.source.push_back(lit("http://src/" + id, "http://src/motto", "unity"));
    };
    source_country("brazil", "Brazil");
    source_country("portugal", "Portugal");
    source_country("spain", "Spain");

    auto country = [&](const std::string& id, const std::string& label,
                       const std::string& continent, const std::string& capital,
                       const std::string& gov, const std::string& currency,
                       const std::string& gdp) {
        const std::string s = "http://tgt/" + id;
        c.target.push_back(lit(s, "http://tgt/label", label));
        c.target.push_back(t(s, "http://tgt/kind", "http://tgt/Country"));
        c.target.push_back(t(s, "http://tgt/continent", "http://tgt/" + continent));
        c.target.push_back(t(s, "http://tgt/capital", "http://tgt/" + capital));
        c.target.push_back(lit(s, "http://tgt/gov", gov));
        c.target.push_back(lit(s, "http://tgt/currency", currency));
        c.target.push_back(t(s, "http://tgt/org", "http://tgt/UnitedNations"));
        c.target.push_back(lit(s, "http://tgt/gdp", gdp));
    };
    auto river = [&](const std::string& id, const std::string& label,
                     const std::string& continent) {
        const std::string s = "http://tgt/" + id;
        c.target.push_back(lit(s, "http://tgt/label", label));
        c.target.push_back(t(s, "http://tgt/kind", "http://tgt/River"));
        c.target.push_back(t(s, "http://tgt/continent", "http://tgt/" + continent));
        c.target.push_back(lit(s, "http://tgt/flows", "water"));
    };
    auto city = [&](const std::string& id, const std::string& label,
                    const std::string& continent, const std::string& mayor) {
        const std::string s = "http://tgt/" + id;
        c.target.push_back(lit(s, "http://tgt/label", label));
        c.target.push_back(t(s, "http://tgt/kind", "http://tgt/City"));
        c.target.push_back(t(s, "http://tgt/continent", "http://tgt/" + continent));
        c.target.push_back(lit(s, "http://tgt/mayor", mayor));
    };

    country("brazil", "Brazil", "SouthAmerica", "Brasilia", "republic", "real", "2100");
    river("brazil_river_af", "Brazil", "Africa");
    river("brazil_river_as", "Brazil", "Asia");
    country("portugal", "Portugal", "Europe", "Lisbon", "republic", "euro", "250");
    river("portugal_river_af", "Portugal", "Africa");
    city("portugal_city_am", "Portugal", "America", "Silva");
    country("spain", "Spain", "Europe", "Madrid", "monarchy", "euro", "1400");
    city("spain_city_af", "Spain", "Africa", "Badi");
    city("spain_city_eu", "Spain", "Europe", "Ortega");

    c.gold = {{"http://src/brazil", "http://tgt/brazil"},
              {"http://src/portugal", "http://tgt/portugal"},
              {"http://src/spain", "http://tgt/spain"}};
    return c;
}

// n_entities towns, each with one gold target; 60% of the labels also
// name a sparse river distractor, some a person. Towns share a wide
// core; distractors stay thin and incoherent across sets. With
// hard_labels every twelfth town is labeled under a different name in
// the target, so its source stays unmatched (and its same-label river,
// when present, turns into a wrong link).
inline Corpus towns(std::size_t n_entities, bool hard_labels = false) {
    Corpus c;
    c.class_iri = "http://src/Town";
    const std::string type = rdslink::vocab::kRdfType;

    for (std::size_t i = 0; i < n_entities; ++i) {
        const std::string idx = std::to_string(i);
        const std::string label = "Alpha" + idx;
        const std::string src = "http://src/e" + idx;
        c.source.push_back(t(src, type, c.class_iri));
        c.source.push_back(lit(src, "http://src/name", label));
        c.source.push_back(lit(src, "http://src/region", "Region" + std::to_string(i % 5)));

        const bool renamed = hard_labels && i % 12 == 11;
        const std::string town = "http://tgt/t" + idx;
        c.target.push_back(lit(town, "http://tgt/label", renamed ? "Beta" + idx : label));
        c.target.push_back(t(town, "http://tgt/kind", "http://tgt/Town"));
        c.target.push_back(lit(town, "http://tgt/flag", "municipality"));
        c.target.push_back(lit(town, "http://tgt/status", "settled"));
        c.target.push_back(t(town, "http://tgt/country", "http://tgt/C" + std::to_string(i % 3)));
        c.target.push_back(t(town, "http://tgt/region", "http://tgt/R" + std::to_string(i % 5)));
        c.target.push_back(lit(town, "http://tgt/code", "Z" + idx));
        c.gold.emplace_back(src, town);

        if (i % 5 == 1 || i % 5 == 2 || i % 5 == 3) {
            const std::string d = "http://tgt/d" + idx;
            c.target.push_back(lit(d, "http://tgt/label", label));
            c.target.push_back(t(d, "http://tgt/kind", "http://tgt/River"));
            c.target.push_back(lit(d, "http://tgt/wet", "water"));
            c.target.push_back(t(d, "http://tgt/basin", "http://tgt/B" + idx));
        }
        if (i % 10 == 7) {
            const std::string d = "http://tgt/p" + idx;
            c.target.push_back(lit(d, "http://tgt/label", label));
            c.target.push_back(t(d, "http://tgt/kind", "http://tgt/Person"));
            c.target.push_back(lit(d, "http://tgt/bio", "human"));
        }
    }
    return c;
}

// High-ambiguity corpus for the set-index comparison: rich true matches
// whose descriptions hold many distinctive attributes, against sparse
// distractors that proportionally overlap much more among themselves.
// pair_count labels have both; solo_count labels name only a distractor.
inline Corpus rich_poor(std::size_t pair_count, std::size_t solo_count) {
    Corpus c;
    c.class_iri = "http://src/Site";
    const std::string type = rdslink::vocab::kRdfType;
    const std::size_t total = pair_count + solo_count;

    for (std::size_t i = 0; i < total; ++i) {
        const std::string idx = std::to_string(i);
        const std::string label = "Gamma" + idx;
        const std::string src = "http://src/e" + idx;
        c.source.push_back(t(src, type, c.class_iri));
        c.source.push_back(lit(src, "http://src/name", label));
        c.source.push_back(lit(src, "http://src/area", "Area" + std::to_string(i % 4)));

        if (i < pair_count) {
            const std::string rich = "http://tgt/site" + idx;
            c.target.push_back(lit(rich, "http://tgt/label", label));
            // ten-fact core shared by every true match
            c.target.push_back(t(rich, "http://tgt/kind", "http://tgt/Arch"));
            c.target.push_back(lit(rich, "http://tgt/cat", "heritage"));
            c.target.push_back(lit(rich, "http://tgt/zone", "urban"));
            c.target.push_back(t(rich, "http://tgt/adm", "http://tgt/Council"));
            c.target.push_back(lit(rich, "http://tgt/reg", "listed"));
            c.target.push_back(t(rich, "http://tgt/era", "http://tgt/Modern"));
            c.target.push_back(lit(rich, "http://tgt/vis", "open"));
            c.target.push_back(t(rich, "http://tgt/body", "http://tgt/Trust"));
            c.target.push_back(lit(rich, "http://tgt/fee", "none"));
            c.target.push_back(t(rich, "http://tgt/grade", "http://tgt/GradeOne"));
            // plus a long tail all its own
            for (std::size_t k = 0; k < 25; ++k)
                c.target.push_back(lit(rich, "http://tgt/u" + idx + "_" + std::to_string(k),
                                       "v" + idx + "_" + std::to_string(k)));
            c.gold.emplace_back(src, rich);
        }
        const std::string sparse = "http://tgt/stream" + idx;
        c.target.push_back(lit(sparse, "http://tgt/label", label));
        c.target.push_back(t(sparse, "http://tgt/kind", "http://tgt/Stream"));
        c.target.push_back(lit(sparse, "http://tgt/wet", "water"));
        c.target.push_back(lit(sparse, "http://tgt/x" + idx, "y" + idx));
    }
    return c;
}

inline std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("rdslink_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path write_nt(const std::filesystem::path& path,
                                      const std::vector<Triple>& triples) {
    std::ofstream out(path, std::ios::binary);
    rdslink::serialize_ntriples(triples, out);
    return path;
}

}  // namespace fixtures
