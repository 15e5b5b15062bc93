#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rdslink/errors.hpp"
#include "rdslink/term.hpp"

namespace rdslink {

// Streaming line-oriented N-Triples reader. In strict mode a malformed
// line throws ParseError; in lenient mode it is skipped and counted.
class NTriplesParser {
public:
    explicit NTriplesParser(std::istream& in, bool lenient = false)
        : in_(&in), lenient_(lenient) {}

    // Next well-formed triple, or nullopt at end of input.
    std::optional<Triple> next();

    std::size_t line() const { return line_; }
    std::size_t skipped() const { return skipped_; }

private:
    std::istream* in_;
    bool lenient_;
    std::size_t line_ = 0;
    std::size_t skipped_ = 0;
};

std::vector<Triple> parse_ntriples(std::istream& in, bool lenient = false,
                                   std::size_t* skipped = nullptr);
std::vector<Triple> parse_ntriples_file(const std::string& path, bool lenient = false,
                                        std::size_t* skipped = nullptr);

std::string to_ntriples(const Term& term);
std::string to_ntriples(const Triple& triple);  // one terminated statement, no newline
void serialize_ntriples(const std::vector<Triple>& triples, std::ostream& out);

}  // namespace rdslink
