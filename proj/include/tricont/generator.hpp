#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricont {

enum class Letter : unsigned char { A = 0, B = 1 };

/// One noncommuting indeterminate: a_1, a_2, ... or b_0, b_1, ...
/// a_0 does not exist; by convention it stands for the scalar 0 and is
/// rejected at construction.
struct Generator {
    Letter letter = Letter::B;
    int subscript = 0;

    Generator() = default;
    Generator(Letter l, int sub) : letter(l), subscript(sub) {
        if (l == Letter::A && sub < 1)
            throw std::invalid_argument("generator a_" + std::to_string(sub) +
                                        " does not exist (subscripts start at 1)");
        if (l == Letter::B && sub < 0)
            throw std::invalid_argument("generator b_" + std::to_string(sub) +
                                        " does not exist (subscripts start at 0)");
    }

    static Generator a(int sub) { return Generator(Letter::A, sub); }
    static Generator b(int sub) { return Generator(Letter::B, sub); }

    bool is_a() const { return letter == Letter::A; }
    bool is_b() const { return letter == Letter::B; }

    /// Parses "a3", "b0", "a_3".
    static Generator parse(std::string_view text) {
        if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b'))
            throw std::invalid_argument("bad generator: '" + std::string(text) + "'");
        Letter l = text[0] == 'a' ? Letter::A : Letter::B;
        std::size_t pos = 1;
        if (text[pos] == '_') ++pos;
        if (pos == text.size())
            throw std::invalid_argument("bad generator: '" + std::string(text) + "'");
        int sub = 0;
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad generator: '" + std::string(text) + "'");
            sub = sub * 10 + (c - '0');
        }
        return Generator(l, sub);
    }

    std::string str() const {
        return (is_a() ? "a" : "b") + std::to_string(subscript);
    }

    // Generators are ordered by subscript, A before B at equal subscript:
    // b0 < a1 < b1 < a2 < b2 < ...  This induces the canonical term order.
    friend std::strong_ordering operator<=>(const Generator& x, const Generator& y) {
        if (auto c = x.subscript <=> y.subscript; c != 0) return c;
        return static_cast<int>(x.letter) <=> static_cast<int>(y.letter);
    }
    friend bool operator==(const Generator&, const Generator&) = default;
};

}  // namespace tricont
