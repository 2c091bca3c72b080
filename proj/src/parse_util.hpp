#pragma once

#include "tchar/numeric.hpp"

#include <cctype>
#include <string>

namespace tchar::parse {

inline void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline std::string read_name(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a name", pos);
    return s.substr(start, pos - start);
}

inline void expect(const std::string& s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c)
        throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
}

inline bool peek(const std::string& s, std::size_t pos, char c) {
    skip_ws(s, pos);
    return pos < s.size() && s[pos] == c;
}

inline bool try_consume(const std::string& s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

inline Int read_integer(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1])))
        throw ParseError("expected an integer", pos);
    return Int(s.substr(start, pos - start));
}

inline Rat read_rational(const std::string& s, std::size_t& pos) {
    Int num = read_integer(s, pos);
    if (peek(s, pos, '/')) {
        expect(s, pos, '/');
        Int den = read_integer(s, pos);
        if (den == 0) throw ParseError("zero denominator", pos);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    return Rat(num);
}

inline void expect_end(const std::string& s, std::size_t pos) {
    skip_ws(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters", pos);
}

}  // namespace tchar::parse
