#pragma once

#include <chrono>
#include <memory>
#include <string>
#include <vector>

#include "rdslink/dataset.hpp"
#include "rdslink/profile.hpp"
#include "rdslink/target.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

struct EndpointHandle {
    std::string base_url;  // http(s)://host[:port][/path]
    double timeout_s = 30.0;
    std::size_t max_retries = 3;
    std::size_t page_size = 1000;        // rows per request
    std::size_t describe_batch = 50;     // subjects per VALUES clause
    std::size_t max_in_flight = 4;
    std::chrono::milliseconds initial_backoff{250};
    std::string bearer_token;  // empty: RDSLINK_ENDPOINT_TOKEN env var
};

struct SparqlRow {
    std::vector<std::pair<std::string, Term>> bindings;
    const Term* get(const std::string& var) const {
        for (const auto& [name, term] : bindings)
            if (name == var) return &term;
        return nullptr;
    }
};

// Read-only SPARQL protocol client (POST, JSON results). Failed
// requests retry with exponential backoff; every generated query is
// logged verbatim at debug level.
class EndpointClient {
public:
    explicit EndpointClient(EndpointHandle handle);
    ~EndpointClient();

    EndpointClient(const EndpointClient&) = delete;
    EndpointClient& operator=(const EndpointClient&) = delete;

    const EndpointHandle& handle() const { return handle_; }

    // One SELECT round trip including the retry policy.
    std::vector<SparqlRow> select(const std::string& query) const;

    // Same contract as Dataset::search_literals, realized remotely: a
    // predicate VALUES clause plus case-insensitive containment filters
    // on the label tokens, paginated, then token-filtered and trimmed
    // exactly like the local index.
    std::vector<SearchHit> search_literals(const std::string& query_label,
                                           const std::vector<Term>& predicates,
                                           std::size_t pool_cap) const;

    // All triples of the given subjects, batched <= describe_batch per
    // request. Blank-node subjects are not addressable and are skipped.
    std::vector<Triple> describe(const std::vector<Term>& subjects) const;

    // Entity-label profile of the endpoint from sampled literal values.
    // Throws EmptyTargetError when no literal predicate exists.
    LabelProfile profile(const ProfileOptions& options) const;

private:
    struct Impl;
    EndpointHandle handle_;
    std::unique_ptr<Impl> impl_;
};

class RemoteTarget final : public TargetHandle {
public:
    explicit RemoteTarget(EndpointHandle handle) : client_(std::move(handle)) {}

    LabelProfile profile(const ProfileOptions& options) override {
        return client_.profile(options);
    }
    std::vector<SearchHit> search_literals(const std::string& query,
                                           const std::vector<Term>& predicates,
                                           std::size_t pool_cap) override {
        return client_.search_literals(query, predicates, pool_cap);
    }
    std::vector<Triple> describe(const std::vector<Term>& subjects) override {
        return client_.describe(subjects);
    }

    EndpointClient& client() { return client_; }

private:
    EndpointClient client_;
};

}  // namespace rdslink
