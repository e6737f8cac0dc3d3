#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricont/monomial.hpp"

namespace tricont {

/// The four monomial families attached to the continuant sequences.  Members
/// are characterized by their index vectors:
///
///   A:  lambda_1 = k, a-steps descend by exactly 2, b-steps by exactly 1,
///       and the word ends in b_0 or a_1.
///   R:  k >= lambda_1 >= 0 with lambda_1 = k (mod 3); after an a-letter the
///       next index avoids lambda_j - 1 (mod 3), after a b-letter it avoids
///       lambda_j (mod 3); a final a-index avoids 2 (mod 3), a final b-index
///       avoids 1 (mod 3).
///   U:  the pure-a members of R (indices >= 1).
///   V:  the pure-b members of R with indices >= 2.
enum class MonomialFamily { A, R, U, V };

/// Integer-sequence families:
///
///   C:  k >= lambda_1 > lambda_2 > ... > lambda_l = 1 with gaps >= 2.
///   D:  entries in [2, k], lambda_1 = k (mod 2), strictly alternating
///       parity, last entry even.
enum class SeqFamily { C, D };

inline MonomialFamily monomial_family_from_name(std::string_view name) {
    if (name == "A") return MonomialFamily::A;
    if (name == "R") return MonomialFamily::R;
    if (name == "U") return MonomialFamily::U;
    if (name == "V") return MonomialFamily::V;
    throw std::invalid_argument("unknown monomial family: '" + std::string(name) + "'");
}

namespace detail {

// Depth-first generation over admissible (letter, index) extensions.  The
// shared word buffer is reused across the whole walk; callbacks receive a
// view valid only for the duration of the call.
template <typename F>
void walk_a_family(std::vector<Generator>& word, int value, Letter letter, F&& emit) {
    word.emplace_back(letter, value);
    bool a_end = letter == Letter::A && value == 1;
    bool b_end = letter == Letter::B && value == 0;
    if (a_end || b_end) {
        emit(std::span<const Generator>(word));
    } else {
        int next = value - (letter == Letter::A ? 2 : 1);
        if (next >= 1) walk_a_family(word, next, Letter::A, emit);
        if (next >= 0) walk_a_family(word, next, Letter::B, emit);
    }
    word.pop_back();
}

template <typename F>
void walk_r_family(std::vector<Generator>& word, int value, Letter letter,
                   int min_index, bool allow_a, bool allow_b, F&& emit) {
    word.emplace_back(letter, value);
    int forbidden =
        letter == Letter::A ? ((value - 1) % 3 + 3) % 3 : value % 3;  // next-index class
    int end_forbidden = letter == Letter::A ? 2 : 1;
    if (value % 3 != end_forbidden) emit(std::span<const Generator>(word));
    for (int t = value - 1; t >= min_index; --t) {
        if (t % 3 == forbidden) continue;
        if (allow_a && t >= 1)
            walk_r_family(word, t, Letter::A, min_index, allow_a, allow_b, emit);
        if (allow_b) walk_r_family(word, t, Letter::B, min_index, allow_a, allow_b, emit);
    }
    word.pop_back();
}

template <typename F>
void walk_c_family(std::vector<int>& seq, int value, F&& emit) {
    seq.push_back(value);
    if (value == 1) emit(std::span<const int>(seq));
    for (int t = value - 2; t >= 1; --t) walk_c_family(seq, t, emit);
    seq.pop_back();
}

template <typename F>
void walk_d_family(std::vector<int>& seq, int value, F&& emit) {
    seq.push_back(value);
    if (value % 2 == 0) emit(std::span<const int>(seq));
    for (int t = value - 1; t >= 2; --t) {
        if (t % 2 == value % 2) continue;
        walk_d_family(seq, t, emit);
    }
    seq.pop_back();
}

}  // namespace detail

/// Streams every member of the family once, in a fixed depth-first order.
/// k < 0 yields the empty family.
template <typename F>
void for_each_family_member(MonomialFamily family, int k, F&& emit) {
    if (k < 0) return;
    std::vector<Generator> word;
    word.reserve(static_cast<std::size_t>(k) + 1);
    switch (family) {
        case MonomialFamily::A:
            if (k >= 1) detail::walk_a_family(word, k, Letter::A, emit);
            detail::walk_a_family(word, k, Letter::B, emit);
            return;
        case MonomialFamily::R:
            for (int s = k; s >= 0; s -= 3) {
                if (s >= 1) detail::walk_r_family(word, s, Letter::A, 0, true, true, emit);
                detail::walk_r_family(word, s, Letter::B, 0, true, true, emit);
            }
            return;
        case MonomialFamily::U:
            for (int s = k; s >= 1; s -= 3)
                detail::walk_r_family(word, s, Letter::A, 1, true, false, emit);
            return;
        case MonomialFamily::V:
            for (int s = k; s >= 2; s -= 3)
                detail::walk_r_family(word, s, Letter::B, 2, false, true, emit);
            return;
    }
}

template <typename F>
void for_each_seq_member(SeqFamily family, int k, F&& emit) {
    if (k < (family == SeqFamily::C ? 1 : 2)) return;
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(k));
    if (family == SeqFamily::C) {
        for (int s = k; s >= 1; --s) detail::walk_c_family(seq, s, emit);
    } else {
        for (int s = k; s >= 2; --s) {
            if ((k - s) % 2 != 0) continue;
            detail::walk_d_family(seq, s, emit);
        }
    }
}

/// Materializes the family in canonical term order.
inline std::vector<Monomial> enumerate_family(MonomialFamily family, int k) {
    std::vector<Monomial> out;
    for_each_family_member(family, k,
                           [&](std::span<const Generator> w) { out.emplace_back(w); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Materializes the sequence family in generation order (first entries
/// descending).
inline std::vector<std::vector<int>> enumerate_seq_family(SeqFamily family, int k) {
    std::vector<std::vector<int>> out;
    for_each_seq_member(family, k, [&](std::span<const int> seq) {
        out.emplace_back(seq.begin(), seq.end());
    });
    return out;
}

namespace detail {

inline void check_triple_args(int k, std::span<const int> lambda) {
    if (lambda.empty())
        throw std::invalid_argument("adjacent-triple count needs a nonempty index");
    if (lambda.front() > k || lambda.back() < 0)
        throw std::invalid_argument("index entries must lie in [0, k]");
    for (std::size_t j = 1; j < lambda.size(); ++j)
        if (lambda[j - 1] <= lambda[j])
            throw std::invalid_argument("index must be strictly descending");
}

}  // namespace detail

/// Maximum number of pairwise disjoint adjacent triples (three consecutive
/// integers) packable into {-1, 0, ..., k} minus the index entries, computed
/// gap by gap with the conventions lambda_0 = k+1, lambda_{l+1} = -2.
inline int max_omitted_triples(int k, std::span<const int> lambda) {
    detail::check_triple_args(k, lambda);
    int total = (k - lambda.front()) / 3 + (lambda.back() + 1) / 3;
    for (std::size_t j = 1; j < lambda.size(); ++j)
        total += (lambda[j - 1] - lambda[j] - 1) / 3;
    return total;
}

inline int max_omitted_triples(int k, const Monomial& m) {
    return max_omitted_triples(k, std::span<const int>(m.index_vector()));
}

/// Independent route to the same count: builds the omitted-subscript set and
/// greedily packs triples from the low end of each maximal run.
inline int max_omitted_triples_direct(int k, std::span<const int> lambda) {
    detail::check_triple_args(k, lambda);
    int total = 0;
    int run = 0;
    std::size_t next = lambda.size();  // entries scanned from the smallest up
    for (int v = -1; v <= k; ++v) {
        bool omitted = true;
        if (next > 0 && lambda[next - 1] == v) {
            omitted = false;
            --next;
        }
        if (omitted) {
            ++run;
        } else {
            total += run / 3;
            run = 0;
        }
    }
    total += run / 3;
    return total;
}

inline int max_omitted_triples_direct(int k, const Monomial& m) {
    return max_omitted_triples_direct(k, std::span<const int>(m.index_vector()));
}

/// The coefficient (-1)^{g_k(m)} carried by a family member.
inline int term_sign(int k, std::span<const int> lambda) {
    return max_omitted_triples(k, lambda) % 2 == 0 ? 1 : -1;
}

inline int term_sign(int k, const Monomial& m) {
    return term_sign(k, std::span<const int>(m.index_vector()));
}

}  // namespace tricont
