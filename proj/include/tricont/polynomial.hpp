#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricont/monomial.hpp"
#include "tricont/numeric.hpp"

namespace tricont {

/// An element of the monoid ring: a finite map word -> nonzero integer
/// coefficient.  The map is kept in canonical term order, so iteration,
/// serialization and equality are all deterministic.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int>;
    using const_iterator = TermMap::const_iterator;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(Int c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
        return p;
    }

    static Polynomial one() { return constant(1); }

    static Polynomial monomial(Monomial m, Int c = 1) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    static Polynomial generator(const Generator& g) {
        return monomial(Monomial({g}));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    /// Coefficient of m; 0 when m is not in the support.
    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Coefficient of the empty word.
    Int constant_term() const { return coefficient(Monomial::one()); }

    bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

    std::vector<Monomial> support() const {
        std::vector<Monomial> s;
        s.reserve(terms_.size());
        for (const auto& [m, c] : terms_) s.push_back(m);
        return s;
    }

    /// Adds c*m in place, dropping the entry if the coefficient cancels.
    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    Polynomial operator-() const {
        Polynomial p(*this);
        for (auto& [m, c] : p.terms_) c = -c;
        return p;
    }

    /// Bilinear extension of word concatenation; this factor's words are on
    /// the left.
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        Polynomial p;
        for (const auto& [m1, c1] : lhs.terms_)
            for (const auto& [m2, c2] : rhs.terms_) p.add_term(m1 * m2, c1 * c2);
        return p;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator*(const Int& c, const Polynomial& rhs) {
        Polynomial p;
        if (c == 0) return p;
        p.terms_ = rhs.terms_;
        for (auto& [m, coef] : p.terms_) coef *= c;
        return p;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Text form per the interface convention: terms in canonical order,
    /// joined with " + " / " - "; unit coefficients are implicit and the
    /// empty word renders as a bare integer.  R_1 renders "-1 + a1 + b1 b0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            bool negative = c < 0;
            if (first) {
                if (negative) out += '-';
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            Int mag = negative ? Int(-c) : c;
            if (m.empty()) {
                out += mag.str();
            } else {
                if (mag != 1) {
                    out += mag.str();
                    out += ' ';
                }
                out += m.str();
            }
        }
        return out;
    }

private:
    TermMap terms_;
};

inline Polynomial left_mul_gen(const Generator& g, const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p) out.add_term(m.prefixed_by(g), c);
    return out;
}

inline Int constant_of(const Polynomial& p) { return p.constant_term(); }

/// Evaluation at an exact rational point; scalar multiplication commutes, so
/// word order is irrelevant here.  The assignment must cover every generator
/// occurring in p.
inline Rational evaluate(const Polynomial& p,
                         const std::function<Rational(const Generator&)>& assignment) {
    Rational total = 0;
    for (const auto& [m, c] : p) {
        Rational v = 1;
        for (const Generator& g : m.word()) v *= assignment(g);
        total += Rational(c) * v;
    }
    return total;
}

/// Substitutes q^subscript for each generator and returns the dense
/// coefficient vector of the resulting univariate polynomial (index =
/// exponent).  Provided as an evaluation hook only; nothing here depends
/// on it.
inline std::vector<Int> q_specialization(const Polynomial& p) {
    std::vector<Int> coeffs;
    for (const auto& [m, c] : p) {
        std::size_t degree = 0;
        for (const Generator& g : m.word()) degree += static_cast<std::size_t>(g.subscript);
        if (coeffs.size() <= degree) coeffs.resize(degree + 1);
        coeffs[degree] += c;
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

/// Parses the text form produced by Polynomial::str(), plus the compact
/// variant without spaces or with underscores ("-b_3b_2+b_3b_2a_1").
/// Unknown characters and the nonexistent a_0 are rejected.
inline Polynomial parse_polynomial(std::string_view text) {
    Polynomial result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    if (text.substr(i) == "0") return result;
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        char c = text[i];
        if (c == '+' || c == '-') {
            if (c == '-') sign = -sign;
            ++i;
            expect_term = true;
            continue;
        }
        // One term: optional integer magnitude followed by generators.
        Int mag = -1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            mag = Int(digits);
        }
        std::vector<Generator> word;
        skip_ws();
        while (i < text.size() && (text[i] == 'a' || text[i] == 'b')) {
            char letter = text[i++];
            if (i < text.size() && text[i] == '_') ++i;
            if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("generator without subscript in polynomial text");
            int sub = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                sub = sub * 10 + (text[i++] - '0');
            word.emplace_back(letter == 'a' ? Letter::A : Letter::B, sub);
            skip_ws();
        }
        if (mag == -1 && word.empty())
            throw std::invalid_argument("unexpected character in polynomial text: '" +
                                        std::string(1, c) + "'");
        if (mag == -1) mag = 1;
        result.add_term(Monomial(std::move(word)), sign * mag);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("dangling sign in polynomial text");
    return result;
}

}  // namespace tricont
