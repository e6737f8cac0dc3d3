#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tricont/generator.hpp"

namespace tricont {

/// Per-position subscript vectors of a word.  lambda = alpha + beta holds
/// componentwise; a position contributes its subscript to alpha when the
/// letter is an a, to beta when it is a b (so b_0 leaves both entries 0).
struct IndexVectors {
    std::vector<int> lambda;
    std::vector<int> alpha;
    std::vector<int> beta;
};

/// A word over the generators; the empty word is the monoid identity.
/// Equality is literal word equality, no commutation.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Generator> word) : word_(std::move(word)) {}
    Monomial(std::initializer_list<Generator> word) : word_(word) {}
    explicit Monomial(std::span<const Generator> word)
        : word_(word.begin(), word.end()) {}

    static Monomial one() { return Monomial(); }

    std::size_t length() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    const std::vector<Generator>& word() const { return word_; }
    const Generator& operator[](std::size_t j) const { return word_[j]; }
    const Generator& front() const { return word_.front(); }
    const Generator& back() const { return word_.back(); }

    /// Concatenation; this word on the left.
    Monomial operator*(const Monomial& rhs) const {
        std::vector<Generator> w;
        w.reserve(word_.size() + rhs.word_.size());
        w.insert(w.end(), word_.begin(), word_.end());
        w.insert(w.end(), rhs.word_.begin(), rhs.word_.end());
        return Monomial(std::move(w));
    }

    Monomial prefixed_by(const Generator& g) const {
        std::vector<Generator> w;
        w.reserve(word_.size() + 1);
        w.push_back(g);
        w.insert(w.end(), word_.begin(), word_.end());
        return Monomial(std::move(w));
    }

    IndexVectors indices() const {
        IndexVectors v;
        v.lambda.reserve(word_.size());
        v.alpha.reserve(word_.size());
        v.beta.reserve(word_.size());
        for (const Generator& g : word_) {
            v.lambda.push_back(g.subscript);
            v.alpha.push_back(g.is_a() ? g.subscript : 0);
            v.beta.push_back(g.is_b() ? g.subscript : 0);
        }
        return v;
    }

    std::vector<int> index_vector() const {
        std::vector<int> lambda;
        lambda.reserve(word_.size());
        for (const Generator& g : word_) lambda.push_back(g.subscript);
        return lambda;
    }

    bool has_strictly_descending_index() const {
        for (std::size_t j = 1; j < word_.size(); ++j)
            if (word_[j - 1].subscript <= word_[j].subscript) return false;
        return true;
    }

    /// "a3 b2 b0"; the empty word renders as "1".
    std::string str() const {
        if (word_.empty()) return "1";
        std::string s;
        for (std::size_t j = 0; j < word_.size(); ++j) {
            if (j != 0) s += ' ';
            s += word_[j].str();
        }
        return s;
    }

    // Canonical order: lexicographic on the generator sequence with a proper
    // prefix before its extensions, so the empty word comes first and, at
    // equal index vector, a-letters sort before b-letters.
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        return std::lexicographical_compare_three_way(
            x.word_.begin(), x.word_.end(), y.word_.begin(), y.word_.end());
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Generator> word_;
};

inline IndexVectors indices(const Monomial& m) { return m.indices(); }

}  // namespace tricont
