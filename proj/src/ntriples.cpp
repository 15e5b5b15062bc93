#include "rdslink/ntriples.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace rdslink {

namespace {

struct LineCursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
};

[[noreturn]] void fail(const std::string& reason) { throw std::invalid_argument(reason); }

void append_utf8(uint32_t cp, std::string& out) {
    if (cp > 0x10FFFFu) fail("code point out of range");
    if (cp < 0x80u) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800u) {
        out.push_back(static_cast<char>(0xC0u | (cp >> 6)));
        out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
    } else if (cp < 0x10000u) {
        out.push_back(static_cast<char>(0xE0u | (cp >> 12)));
        out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
        out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
    } else {
        out.push_back(static_cast<char>(0xF0u | (cp >> 18)));
        out.push_back(static_cast<char>(0x80u | ((cp >> 12) & 0x3Fu)));
        out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
        out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
    }
}

uint32_t parse_hex(LineCursor& c, int digits) {
    uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
        if (c.done()) fail("truncated \\u escape");
        const char ch = c.s[c.pos++];
        cp <<= 4;
        if (ch >= '0' && ch <= '9')
            cp |= static_cast<uint32_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            cp |= static_cast<uint32_t>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F')
            cp |= static_cast<uint32_t>(ch - 'A' + 10);
        else
            fail("bad hex digit in escape");
    }
    return cp;
}

// Handles the escape after a consumed backslash.
void unescape_into(LineCursor& c, std::string& out) {
    if (c.done()) fail("trailing backslash");
    const char e = c.s[c.pos++];
    switch (e) {
        case 't': out.push_back('\t'); break;
        case 'b': out.push_back('\b'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 'f': out.push_back('\f'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case '\\': out.push_back('\\'); break;
        case 'u': append_utf8(parse_hex(c, 4), out); break;
        case 'U': append_utf8(parse_hex(c, 8), out); break;
        default: fail(std::string("unknown escape \\") + e);
    }
}

std::string parse_iriref(LineCursor& c) {
    if (c.done() || c.peek() != '<') fail("expected '<'");
    ++c.pos;
    std::string iri;
    while (true) {
        if (c.done()) fail("unterminated IRI");
        const char ch = c.s[c.pos];
        if (ch == '>') {
            ++c.pos;
            break;
        }
        if (ch == '\\') {
            ++c.pos;
            if (c.done()) fail("trailing backslash in IRI");
            const char e = c.s[c.pos];
            if (e == 'u' || e == 'U') {
                ++c.pos;
                append_utf8(parse_hex(c, e == 'u' ? 4 : 8), iri);
            } else {
                fail("invalid escape in IRI");
            }
            continue;
        }
        if (static_cast<unsigned char>(ch) <= 0x20u || ch == '<' || ch == '"' || ch == '{' ||
            ch == '}' || ch == '|' || ch == '^' || ch == '`')
            fail("invalid character in IRI");
        iri.push_back(ch);
        ++c.pos;
    }
    if (iri.empty()) fail("empty IRI");
    return iri;
}

bool is_bnode_char(char ch, bool first) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') return true;
    if (!first && (ch == '-' || ch == '.')) return true;
    return static_cast<unsigned char>(ch) >= 0x80u;
}

std::string parse_bnode_label(LineCursor& c) {
    // caller consumed "_:"
    std::string label;
    bool first = true;
    while (!c.done() && is_bnode_char(c.peek(), first)) {
        label.push_back(c.s[c.pos++]);
        first = false;
    }
    // A label may not end in '.'; give the dot back to the terminator.
    while (!label.empty() && label.back() == '.') {
        label.pop_back();
        --c.pos;
    }
    if (label.empty()) fail("empty blank node label");
    return label;
}

Term parse_subject_or_object(LineCursor& c, bool allow_literal) {
    if (c.done()) fail("unexpected end of statement");
    const char ch = c.peek();
    if (ch == '<') return Term::uri(parse_iriref(c));
    if (ch == '_') {
        ++c.pos;
        if (c.done() || c.peek() != ':') fail("expected ':' after '_'");
        ++c.pos;
        return Term::blank(parse_bnode_label(c));
    }
    if (ch == '"') {
        if (!allow_literal) fail("literal not allowed as subject");
        ++c.pos;
        std::string lexical;
        while (true) {
            if (c.done()) fail("unterminated literal");
            const char lc = c.s[c.pos];
            if (lc == '"') {
                ++c.pos;
                break;
            }
            if (lc == '\\') {
                ++c.pos;
                unescape_into(c, lexical);
                continue;
            }
            if (lc == '\n' || lc == '\r') fail("raw newline in literal");
            lexical.push_back(lc);
            ++c.pos;
        }
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            if (c.done() || c.peek() != '^') fail("expected '^^'");
            ++c.pos;
            return Term::literal(std::move(lexical), parse_iriref(c));
        }
        if (!c.done() && c.peek() == '@') {
            ++c.pos;
            std::string lang;
            while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '-'))
                lang.push_back(c.s[c.pos++]);
            if (lang.empty() || lang.front() == '-') fail("empty language tag");
            return Term::literal(std::move(lexical), {}, std::move(lang));
        }
        return Term::literal(std::move(lexical));
    }
    fail("expected IRI, blank node, or literal");
}

// Returns nullopt for blank lines and comments.
std::optional<Triple> parse_line(std::string_view line) {
    LineCursor c{line};
    c.skip_ws();
    if (c.done() || c.peek() == '#') return std::nullopt;

    Term subject = parse_subject_or_object(c, false);
    c.skip_ws();
    Term predicate = parse_subject_or_object(c, false);
    if (!predicate.is_uri()) fail("predicate must be an IRI");
    c.skip_ws();
    Term object = parse_subject_or_object(c, true);
    c.skip_ws();
    if (c.done() || c.peek() != '.') fail("expected terminating '.'");
    ++c.pos;
    c.skip_ws();
    if (!c.done() && c.peek() != '#') fail("trailing content after '.'");
    return Triple(std::move(subject), std::move(predicate), std::move(object));
}

}  // namespace

std::optional<Triple> NTriplesParser::next() {
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            auto triple = parse_line(line);
            if (triple) return triple;
        } catch (const std::invalid_argument& e) {
            if (!lenient_) throw ParseError(line_, e.what());
            ++skipped_;
        }
    }
    return std::nullopt;
}

std::vector<Triple> parse_ntriples(std::istream& in, bool lenient, std::size_t* skipped) {
    NTriplesParser parser(in, lenient);
    std::vector<Triple> triples;
    while (auto t = parser.next()) triples.push_back(std::move(*t));
    if (skipped) *skipped = parser.skipped();
    return triples;
}

std::vector<Triple> parse_ntriples_file(const std::string& path, bool lenient,
                                        std::size_t* skipped) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return parse_ntriples(in, lenient, skipped);
}

namespace {

void escape_literal(const std::string& lexical, std::string& out) {
    for (const char ch : lexical) {
        switch (ch) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(ch);
        }
    }
}

}  // namespace

std::string to_ntriples(const Term& term) {
    std::string out;
    switch (term.kind()) {
        case TermKind::Uri:
            out = "<" + term.value() + ">";
            break;
        case TermKind::BlankNode:
            out = "_:" + term.value();
            break;
        case TermKind::Literal:
            out.push_back('"');
            escape_literal(term.value(), out);
            out.push_back('"');
            if (!term.datatype().empty())
                out += "^^<" + term.datatype() + ">";
            else if (!term.language().empty())
                out += "@" + term.language();
            break;
    }
    return out;
}

std::string to_ntriples(const Triple& triple) {
    return to_ntriples(triple.subject) + " " + to_ntriples(triple.predicate) + " " +
           to_ntriples(triple.object) + " .";
}

void serialize_ntriples(const std::vector<Triple>& triples, std::ostream& out) {
    for (const auto& t : triples) out << to_ntriples(t) << "\n";
}

}  // namespace rdslink
