// Shared helpers for the canonical polynomial text format.
#ifndef PRG_TEXT_UTIL_HPP
#define PRG_TEXT_UTIL_HPP

#include "prg/numeric.hpp"

#include <cctype>
#include <string>

namespace prg::detail {

// Render a doubled half-integer: 4 -> "2", 1 -> "1/2", -3 -> "-3/2", -2 -> "-1".
inline std::string half_to_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

// Minimal cursor over the canonical text.
struct Cursor {
    const std::string& s;
    size_t i = 0;

    explicit Cursor(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ValidationError(std::string("polynomial parse: expected '") + c +
                                  "' at offset " + std::to_string(i) + " in \"" + s + "\"");
    }
    bool at_digit() {
        skip_ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start)
            throw ValidationError("polynomial parse: expected digits at offset " +
                                  std::to_string(i) + " in \"" + s + "\"");
        return s.substr(start, i - start);
    }
    std::string identifier() {
        skip_ws();
        size_t start = i;
        if (i < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            ++i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                                    s[i] == '_'))
                ++i;
        }
        if (i == start)
            throw ValidationError("polynomial parse: expected a variable at offset " +
                                  std::to_string(i) + " in \"" + s + "\"");
        return s.substr(start, i - start);
    }
    // "-"? digits ("/2")?  ->  doubled value
    int half_value() {
        skip_ws();
        bool neg = eat('-');
        long long v = std::stoll(digits());
        bool halved = false;
        if (eat('/')) {
            expect('2');
            halved = true;
        }
        long long doubled = halved ? v : 2 * v;
        return static_cast<int>(neg ? -doubled : doubled);
    }
};

} // namespace prg::detail

#endif
