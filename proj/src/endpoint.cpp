#include "rdslink/endpoint.hpp"

#include <algorithm>
#include <cstdlib>
#include <semaphore>
#include <set>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "rdslink/errors.hpp"
#include "rdslink/log.hpp"
#include "rdslink/text.hpp"

namespace rdslink {

using nlohmann::json;

struct EndpointClient::Impl {
    std::string origin;  // scheme://host[:port]
    std::string path;
    std::counting_semaphore<> in_flight;

    explicit Impl(std::size_t max_in_flight)
        : in_flight(static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, max_in_flight))) {}
};

namespace {

std::string sparql_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        if (c == '\\' || c == '"') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Term term_from_binding(const json& b) {
    const std::string type = b.at("type").get<std::string>();
    const std::string value = b.at("value").get<std::string>();
    if (type == "uri") return Term::uri(value);
    if (type == "bnode") return Term::blank(value);
    if (type == "literal" || type == "typed-literal") {
        std::string datatype;
        std::string lang;
        if (b.contains("datatype")) datatype = b["datatype"].get<std::string>();
        if (b.contains("xml:lang")) lang = b["xml:lang"].get<std::string>();
        if (!datatype.empty() && !lang.empty()) lang.clear();
        return Term::literal(value, datatype, lang);
    }
    throw MalformedResultsError("unknown binding type: " + type);
}

}  // namespace

EndpointClient::EndpointClient(EndpointHandle handle)
    : handle_(std::move(handle)), impl_(std::make_unique<Impl>(handle_.max_in_flight)) {
    const auto scheme_end = handle_.base_url.find("://");
    if (scheme_end == std::string::npos)
        throw Error("endpoint URL must start with http:// or https://: " + handle_.base_url);
    const auto path_start = handle_.base_url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        impl_->origin = handle_.base_url;
        impl_->path = "/";
    } else {
        impl_->origin = handle_.base_url.substr(0, path_start);
        impl_->path = handle_.base_url.substr(path_start);
    }
    if (handle_.bearer_token.empty()) {
        if (const char* token = std::getenv("RDSLINK_ENDPOINT_TOKEN"))
            handle_.bearer_token = token;
    }
}

EndpointClient::~EndpointClient() = default;

std::vector<SparqlRow> EndpointClient::select(const std::string& query) const {
    log::debug("sparql query: " + query);
    std::string last_error;
    for (std::size_t attempt = 0; attempt <= handle_.max_retries; ++attempt) {
        if (attempt > 0) {
            const auto delay = handle_.initial_backoff * (1LL << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
        try {
            httplib::Result res = [&] {
                impl_->in_flight.acquire();
                struct Release {
                    std::counting_semaphore<>& sem;
                    ~Release() { sem.release(); }
                } release{impl_->in_flight};
                httplib::Client client(impl_->origin);
                client.set_connection_timeout(std::chrono::duration<double>(handle_.timeout_s));
                client.set_read_timeout(std::chrono::duration<double>(handle_.timeout_s));
                httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
                if (!handle_.bearer_token.empty())
                    headers.emplace("Authorization", "Bearer " + handle_.bearer_token);
                httplib::Params params{{"query", query}};
                return client.Post(impl_->path, headers, params);
            }();

            if (!res) throw TimeoutError("request failed: " + httplib::to_string(res.error()));
            if (res->status != 200)
                throw HttpError(res->status,
                                "endpoint returned HTTP " + std::to_string(res->status));
            json body;
            try {
                body = json::parse(res->body);
            } catch (const json::exception& e) {
                throw MalformedResultsError(std::string("result body is not JSON: ") + e.what());
            }
            if (!body.contains("results") || !body["results"].contains("bindings") ||
                !body["results"]["bindings"].is_array())
                throw MalformedResultsError("result body lacks results.bindings");

            std::vector<SparqlRow> rows;
            rows.reserve(body["results"]["bindings"].size());
            for (const auto& binding : body["results"]["bindings"]) {
                SparqlRow row;
                for (const auto& [var, value] : binding.items())
                    row.bindings.emplace_back(var, term_from_binding(value));
                rows.push_back(std::move(row));
            }
            return rows;
        } catch (const Error& e) {
            last_error = e.what();
            log::warn("sparql attempt " + std::to_string(attempt + 1) + " failed: " + last_error);
        }
    }
    throw Error("endpoint failed after " + std::to_string(handle_.max_retries + 1) +
                " attempts: " + last_error);
}

std::vector<SearchHit> EndpointClient::search_literals(const std::string& query_label,
                                                       const std::vector<Term>& predicates,
                                                       std::size_t pool_cap) const {
    const auto tokens = normalize_tokens(query_label);
    if (tokens.empty() || predicates.empty()) return {};

    std::string values;
    for (const auto& p : predicates) values += "<" + p.value() + "> ";
    std::string filter;
    for (const auto& token : tokens) {
        if (!filter.empty()) filter += " || ";
        filter += "CONTAINS(LCASE(STR(?o)), \"" + sparql_escape(fold_case(token)) + "\")";
    }
    const std::string base = "SELECT ?s ?o WHERE { VALUES ?p { " + values +
                             "} ?s ?p ?o . FILTER(isLiteral(?o)) FILTER(" + filter +
                             ") } ORDER BY ?s ?o";

    std::vector<std::pair<SearchHit, std::size_t>> hits;
    std::set<std::string> subjects;
    for (std::size_t offset = 0;; offset += handle_.page_size) {
        const auto rows = select(base + " LIMIT " + std::to_string(handle_.page_size) +
                                 " OFFSET " + std::to_string(offset));
        for (const auto& row : rows) {
            const Term* s = row.get("s");
            const Term* o = row.get("o");
            if (!s || !o || !o->is_literal()) continue;
            // The endpoint filter is substring-based; re-apply the exact
            // token-overlap rule so results match the local index.
            const auto literal_tokens = normalize_tokens(o->value());
            std::size_t overlap = 0;
            for (const auto& token : tokens)
                if (std::binary_search(literal_tokens.begin(), literal_tokens.end(), token))
                    ++overlap;
            if (overlap == 0) continue;
            subjects.insert(s->key());
            hits.push_back({SearchHit{*s, o->value()}, overlap});
        }
        if (rows.size() < handle_.page_size || subjects.size() >= pool_cap) break;
    }
    return trim_search_pool(std::move(hits), pool_cap);
}

std::vector<Triple> EndpointClient::describe(const std::vector<Term>& subjects) const {
    std::vector<Term> uris;
    for (const auto& s : subjects)
        if (s.is_uri()) uris.push_back(s);
    std::sort(uris.begin(), uris.end());
    uris.erase(std::unique(uris.begin(), uris.end()), uris.end());

    std::set<Triple> triples;
    for (std::size_t start = 0; start < uris.size(); start += handle_.describe_batch) {
        const std::size_t end = std::min(start + handle_.describe_batch, uris.size());
        std::string values;
        for (std::size_t i = start; i < end; ++i) values += "<" + uris[i].value() + "> ";
        const std::string base =
            "SELECT ?s ?p ?o WHERE { VALUES ?s { " + values + "} ?s ?p ?o . } ORDER BY ?s ?p ?o";
        for (std::size_t offset = 0;; offset += handle_.page_size) {
            const auto rows = select(base + " LIMIT " + std::to_string(handle_.page_size) +
                                     " OFFSET " + std::to_string(offset));
            for (const auto& row : rows) {
                const Term* s = row.get("s");
                const Term* p = row.get("p");
                const Term* o = row.get("o");
                if (!s || !p || !o || !p->is_uri() || s->is_literal())
                    throw MalformedResultsError("describe row with invalid terms");
                triples.insert(Triple(*s, *p, *o));
            }
            if (rows.size() < handle_.page_size) break;
        }
    }
    return {triples.begin(), triples.end()};
}

LabelProfile EndpointClient::profile(const ProfileOptions& options) const {
    const auto census = select(
        "SELECT ?p (COUNT(?o) AS ?n) WHERE { ?s ?p ?o . FILTER(isLiteral(?o)) } GROUP BY ?p "
        "ORDER BY ?p");
    std::vector<std::string> predicates;
    for (const auto& row : census) {
        const Term* p = row.get("p");
        if (p && p->is_uri()) predicates.push_back(p->value());
    }
    if (predicates.empty()) throw EmptyTargetError();

    struct Stats {
        std::vector<std::string> values;
        std::set<std::string> subjects;
        bool has_long_value = false;
    };
    std::vector<std::pair<std::string, Stats>> buckets;
    for (const auto& predicate : predicates) {
        Stats stats;
        const std::string base = "SELECT ?s ?o WHERE { ?s <" + predicate +
                                 "> ?o . FILTER(isLiteral(?o)) } ORDER BY ?s ?o";
        for (std::size_t offset = 0;;) {
            std::size_t limit = handle_.page_size;
            if (options.sample_cap > 0)
                limit = std::min(limit, options.sample_cap - stats.values.size());
            if (limit == 0) break;
            const auto rows = select(base + " LIMIT " + std::to_string(limit) + " OFFSET " +
                                     std::to_string(offset));
            offset += rows.size();
            for (const auto& row : rows) {
                const Term* s = row.get("s");
                const Term* o = row.get("o");
                if (!s || !o || !o->is_literal()) continue;
                stats.subjects.insert(s->key());
                if (utf8_length(o->value()) >= options.max_label_len)
                    stats.has_long_value = true;
                else
                    stats.values.push_back(o->value());
            }
            if (rows.size() < limit) break;
        }
        if (stats.has_long_value || stats.values.empty()) continue;
        if (stats.subjects.size() < options.min_subjects) continue;
        buckets.emplace_back(predicate, std::move(stats));
    }

    LabelProfile result;
    if (buckets.empty()) throw NoLabelPropertyError();
    double sum = 0.0;
    std::vector<LabelPredicate> considered;
    for (const auto& [predicate, stats] : buckets) {
        considered.push_back({Term::uri(predicate), entropy(stats.values)});
        sum += considered.back().entropy;
    }
    result.omega_threshold = sum / static_cast<double>(considered.size());
    std::sort(considered.begin(), considered.end(), [](const auto& a, const auto& b) {
        return a.entropy != b.entropy ? a.entropy > b.entropy
                                      : a.predicate.value() < b.predicate.value();
    });
    for (auto& row : considered)
        if (row.entropy >= result.omega_threshold) result.ranked.push_back(std::move(row));
    return result;
}

}  // namespace rdslink
