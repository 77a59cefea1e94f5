#pragma once

// Text form shared by the library and the CLI: one digit per symbol when every
// symbol fits in a digit, comma-separated decimals otherwise.

#include <charconv>
#include <string>
#include <string_view>

#include "nanoread/core.hpp"

namespace nanoread {

inline std::string format_symbols(std::span<const Symbol> s, std::size_t max_symbol) {
    std::string out;
    if (max_symbol <= 9) {
        out.reserve(s.size());
        for (auto v : s)
            out.push_back(static_cast<char>('0' + v));
        return out;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(static_cast<unsigned>(s[i]));
    }
    return out;
}

inline std::string format_word(const BinaryWord& x) { return format_symbols(x.view(), 1); }

inline std::string format_read(const ReadVector& r) { return format_symbols(r.levels(), r.window()); }

inline Symbols parse_symbols(std::string_view text) {
    Symbols out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find(',', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto field = text.substr(pos, end - pos);
            unsigned v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || v > 255)
                throw ArgumentError("parse_symbols: bad field '" + std::string(field) + "'");
            out.push_back(static_cast<Symbol>(v));
            pos = end + 1;
        }
        return out;
    }
    for (char c : text) {
        if (c < '0' || c > '9')
            throw ArgumentError(std::string("parse_symbols: unexpected character '") + c + "'");
        out.push_back(static_cast<Symbol>(c - '0'));
    }
    return out;
}

inline BinaryWord parse_word(std::string_view text) { return BinaryWord(parse_symbols(text)); }

} // namespace nanoread
