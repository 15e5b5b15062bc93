#pragma once

#include <string>
#include <vector>

#include "rdslink/dataset.hpp"
#include "rdslink/profile.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

// The target side of a run: either a locally loaded dump or a remote
// SPARQL endpoint. Implementations must be safe to call from several
// threads at once.
class TargetHandle {
public:
    virtual ~TargetHandle() = default;

    virtual LabelProfile profile(const ProfileOptions& options) = 0;

    virtual std::vector<SearchHit> search_literals(const std::string& query,
                                                   const std::vector<Term>& predicates,
                                                   std::size_t pool_cap) = 0;

    // All triples whose subject is in the given set.
    virtual std::vector<Triple> describe(const std::vector<Term>& subjects) = 0;
};

class LocalTarget final : public TargetHandle {
public:
    explicit LocalTarget(const Dataset& dataset) : dataset_(&dataset) {}

    LabelProfile profile(const ProfileOptions& options) override {
        return build_label_profile(*dataset_, dataset_->literal_bearing_subjects(), options);
    }

    std::vector<SearchHit> search_literals(const std::string& query,
                                           const std::vector<Term>& predicates,
                                           std::size_t pool_cap) override {
        return dataset_->search_literals(query, predicates, pool_cap);
    }

    std::vector<Triple> describe(const std::vector<Term>& subjects) override {
        std::vector<Triple> out;
        for (const auto& d : dataset_->df(subjects))
            for (const auto& [p, o] : d.statements) out.emplace_back(d.subject, p, o);
        return out;
    }

private:
    const Dataset* dataset_;
};

}  // namespace rdslink
