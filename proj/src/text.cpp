#include "rdslink/text.hpp"

#include <algorithm>
#include <cstdint>

namespace rdslink {

namespace {

// Decodes one UTF-8 scalar starting at i; advances i. Invalid bytes are
// passed through as single code points so malformed input stays stable.
uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    uint32_t cp = b0;
    if ((b0 & 0x80u) == 0x00u) {
        len = 1;
        cp = b0;
    } else if ((b0 & 0xE0u) == 0xC0u) {
        len = 2;
        cp = b0 & 0x1Fu;
    } else if ((b0 & 0xF0u) == 0xE0u) {
        len = 3;
        cp = b0 & 0x0Fu;
    } else if ((b0 & 0xF8u) == 0xF0u) {
        len = 4;
        cp = b0 & 0x07u;
    }
    if (i + len > s.size()) len = 1;
    for (std::size_t k = 1; k < len; ++k) {
        const auto bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0u) != 0x80u) {
            len = k;
            break;
        }
        cp = (cp << 6) | (bk & 0x3Fu);
    }
    i += len;
    return cp;
}

void encode_utf8(uint32_t cp, std::string& out) {
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

uint32_t fold_cp(uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20u;
    // Latin-1 supplement uppercase, skipping the multiplication sign.
    if (cp >= 0xC0u && cp <= 0xDEu && cp != 0xD7u) return cp + 0x20u;
    return cp;
}

bool is_space_cp(uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
           cp == 0xA0u || (cp >= 0x2000u && cp <= 0x200Au) || cp == 0x2028u || cp == 0x2029u ||
           cp == 0x202Fu || cp == 0x3000u;
}

bool is_punct_cp(uint32_t cp) {
    if (cp < 0x80u) {
        const char c = static_cast<char>(cp);
        return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
               (c >= '{' && c <= '~');
    }
    // General punctuation block and common standalone marks.
    return (cp >= 0x2010u && cp <= 0x205Eu) || cp == 0xA1u || cp == 0xBFu || cp == 0xABu ||
           cp == 0xBBu;
}

}  // namespace

std::string fold_case(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) encode_utf8(fold_cp(decode_utf8(text, i)), out);
    return out;
}

std::size_t utf8_length(std::string_view text) {
    std::size_t n = 0;
    for (const char c : text)
        if ((static_cast<unsigned char>(c) & 0xC0u) != 0x80u) ++n;
    return n;
}

std::vector<std::string> normalize_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        const uint32_t cp = decode_utf8(text, i);
        if (is_space_cp(cp)) {
            if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
        } else if (!is_punct_cp(cp)) {
            encode_utf8(fold_cp(cp), current);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    return tokens;
}

}  // namespace rdslink
