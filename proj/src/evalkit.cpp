#include "rdslink/evalkit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rdslink/errors.hpp"
#include "rdslink/ntriples.hpp"

namespace rdslink {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string lower_ext(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos) return {};
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

std::string xml_unescape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out.push_back(text[i++]);
            continue;
        }
        const auto semi = text.find(';', i);
        if (semi == std::string::npos) {
            out.push_back(text[i++]);
            continue;
        }
        const auto entity = text.substr(i + 1, semi - i - 1);
        if (entity == "amp")
            out.push_back('&');
        else if (entity == "lt")
            out.push_back('<');
        else if (entity == "gt")
            out.push_back('>');
        else if (entity == "quot")
            out.push_back('"');
        else if (entity == "apos")
            out.push_back('\'');
        else if (!entity.empty() && entity[0] == '#') {
            const long cp = std::strtol(entity.c_str() + (entity[1] == 'x' ? 2 : 1), nullptr,
                                        entity[1] == 'x' ? 16 : 10);
            if (cp > 0 && cp < 128) out.push_back(static_cast<char>(cp));
        } else {
            out += "&" + entity + ";";
        }
        i = semi + 1;
    }
    return out;
}

// rdf:resource attribute of the first <tag .../> inside the cell.
std::string find_entity(const std::string& cell, const std::string& tag, std::size_t cell_no) {
    const auto open = cell.find("<" + tag);
    if (open == std::string::npos)
        throw MalformedEntryError("Cell " + std::to_string(cell_no) + " lacks <" + tag + ">");
    const auto attr = cell.find("rdf:resource", open);
    if (attr == std::string::npos)
        throw MalformedEntryError("Cell " + std::to_string(cell_no) + ": <" + tag +
                                  "> lacks rdf:resource");
    const auto q1 = cell.find_first_of("\"'", attr);
    if (q1 == std::string::npos)
        throw MalformedEntryError("Cell " + std::to_string(cell_no) + ": unquoted rdf:resource");
    const auto q2 = cell.find(cell[q1], q1 + 1);
    if (q2 == std::string::npos)
        throw MalformedEntryError("Cell " + std::to_string(cell_no) + ": unterminated attribute");
    return xml_unescape(cell.substr(q1 + 1, q2 - q1 - 1));
}

AlignmentSet parse_alignment_xml(const std::string& content) {
    AlignmentSet set;
    std::size_t pos = 0;
    std::size_t cell_no = 0;
    while (true) {
        const auto open = content.find("<Cell", pos);
        if (open == std::string::npos) break;
        const auto close = content.find("</Cell>", open);
        if (close == std::string::npos) throw MalformedEntryError("unterminated <Cell>");
        ++cell_no;
        const auto cell = content.substr(open, close - open);
        set.add(find_entity(cell, "entity1", cell_no), find_entity(cell, "entity2", cell_no));
        pos = close + 7;
    }
    return set;
}

AlignmentSet parse_pairs_tsv(const std::string& content) {
    AlignmentSet set;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw MalformedEntryError("line " + std::to_string(line_no) + ": expected two columns");
        const auto second_end = line.find('\t', tab + 1);
        const auto target = second_end == std::string::npos ? line.substr(tab + 1)
                                                            : line.substr(tab + 1, second_end - tab - 1);
        if (line.substr(0, tab).empty() || target.empty())
            throw MalformedEntryError("line " + std::to_string(line_no) + ": empty column");
        set.add(line.substr(0, tab), target);
    }
    return set;
}

bool looks_like_alignment_xml(const std::string& content) {
    return content.find("<Cell") != std::string::npos ||
           content.find("<Alignment") != std::string::npos ||
           content.find("<?xml") != std::string::npos;
}

}  // namespace

AlignmentSet load_reference(const std::string& path) {
    const auto content = read_file(path);
    const auto ext = lower_ext(path);
    if (ext == "xml" || ext == "rdf" || ext == "owl") return parse_alignment_xml(content);
    if (ext == "tsv" || ext == "txt" || ext == "csv") return parse_pairs_tsv(content);
    if (looks_like_alignment_xml(content)) return parse_alignment_xml(content);
    if (content.find('\t') != std::string::npos) return parse_pairs_tsv(content);
    throw UnknownFormatError("cannot detect reference format of " + path);
}

AlignmentSet load_found(const std::string& path) {
    if (lower_ext(path) == "nt") {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open " + path);
        AlignmentSet set;
        for (const auto& t : parse_ntriples(in))
            if (t.subject.is_uri() && t.object.is_uri())
                set.add(t.subject.value(), t.object.value());
        return set;
    }
    return parse_pairs_tsv(read_file(path));
}

Metrics score(const AlignmentSet& found, const AlignmentSet& reference) {
    Metrics m;
    for (const auto& pair : found.pairs)
        if (reference.pairs.contains(pair))
            ++m.true_positives;
        else
            ++m.false_positives;
    m.false_negatives = reference.size() - m.true_positives;

    const auto tp = static_cast<double>(m.true_positives);
    m.precision_undefined = m.true_positives + m.false_positives == 0;
    m.recall_undefined = m.true_positives + m.false_negatives == 0;
    m.precision = m.precision_undefined
                      ? 0.0
                      : tp / static_cast<double>(m.true_positives + m.false_positives);
    m.recall = m.recall_undefined ? 0.0
                                  : tp / static_cast<double>(m.true_positives + m.false_negatives);
    m.f1 = m.precision + m.recall == 0.0
               ? 0.0
               : 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

std::string format_key_values(const Metrics& m) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "precision=%.3f recall=%.3f f1=%.3f", m.precision, m.recall,
                  m.f1);
    return buf;
}

std::string format_report(const Metrics& m) {
    std::ostringstream out;
    out << "true positives:  " << m.true_positives << "\n"
        << "false positives: " << m.false_positives << "\n"
        << "false negatives: " << m.false_negatives << "\n"
        << format_key_values(m) << "\n";
    if (m.precision_undefined) out << "note: precision undefined (no links found), reported as 0\n";
    if (m.recall_undefined) out << "note: recall undefined (empty reference), reported as 0\n";
    return out.str();
}

}  // namespace rdslink
