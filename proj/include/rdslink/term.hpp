#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace rdslink {

enum class TermKind { Uri, Literal, BlankNode };

// One RDF term: an IRI, a literal (lexical form plus at most one of
// datatype IRI / language tag), or a blank node label.
class Term {
public:
    Term() = default;

    static Term uri(std::string iri) {
        if (iri.empty()) throw std::invalid_argument("empty IRI");
        Term t;
        t.kind_ = TermKind::Uri;
        t.value_ = std::move(iri);
        return t;
    }

    static Term literal(std::string lexical, std::string datatype = {},
                        std::string language = {}) {
        if (!datatype.empty() && !language.empty())
            throw std::invalid_argument("literal with both datatype and language");
        Term t;
        t.kind_ = TermKind::Literal;
        t.value_ = std::move(lexical);
        t.datatype_ = std::move(datatype);
        t.language_ = std::move(language);
        return t;
    }

    static Term blank(std::string label) {
        if (label.empty()) throw std::invalid_argument("empty blank node label");
        Term t;
        t.kind_ = TermKind::BlankNode;
        t.value_ = std::move(label);
        return t;
    }

    TermKind kind() const { return kind_; }
    bool is_uri() const { return kind_ == TermKind::Uri; }
    bool is_literal() const { return kind_ == TermKind::Literal; }
    bool is_blank() const { return kind_ == TermKind::BlankNode; }

    // IRI string, lexical form, or blank label depending on kind.
    const std::string& value() const { return value_; }
    const std::string& datatype() const { return datatype_; }
    const std::string& language() const { return language_; }

    // Key unique across kinds: IRIs as-is, literals by lexical form,
    // blank nodes prefixed "_:". Literal datatype/language deliberately
    // ignored (set operations compare lexical forms only).
    std::string key() const {
        if (kind_ == TermKind::BlankNode) return "_:" + value_;
        return value_;
    }

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;

private:
    TermKind kind_ = TermKind::Uri;
    std::string value_;
    std::string datatype_;
    std::string language_;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    Triple() = default;
    Triple(Term s, Term p, Term o)
        : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
        if (!predicate.is_uri()) throw std::invalid_argument("predicate must be an IRI");
        if (subject.is_literal()) throw std::invalid_argument("subject must not be a literal");
    }

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

namespace vocab {
inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kOwlSameAs = "http://www.w3.org/2002/07/owl#sameAs";
inline constexpr const char* kXsdString = "http://www.w3.org/2001/XMLSchema#string";
}  // namespace vocab

}  // namespace rdslink
