#pragma once

#include <span>

#include "tricont/families.hpp"
#include "tricont/periodic.hpp"
#include "tricont/polynomial.hpp"

namespace tricont {

namespace detail {

// Sum of sign(m) * m over a family, added into out.
inline void add_signed_family(Polynomial& out, MonomialFamily family, int k, int flip) {
    for_each_family_member(family, k, [&](std::span<const Generator> w) {
        std::vector<int> lambda;
        lambda.reserve(w.size());
        for (const Generator& g : w) lambda.push_back(g.subscript);
        out.add_term(Monomial(w), flip * term_sign(k, lambda));
    });
}

// Sum of sign(m) * shift(m) over the members with smallest index >= 2,
// where shift lowers every subscript by one.  Used by the denominator
// closed forms, whose summands pass through the index-lowering map.
inline void add_signed_family_shifted(Polynomial& out, MonomialFamily family, int k,
                                      int flip) {
    for_each_family_member(family, k, [&](std::span<const Generator> w) {
        if (w.back().subscript <= 1) return;
        std::vector<int> lambda;
        std::vector<Generator> shifted;
        lambda.reserve(w.size());
        shifted.reserve(w.size());
        for (const Generator& g : w) {
            lambda.push_back(g.subscript);
            shifted.emplace_back(g.letter, g.subscript - 1);
        }
        out.add_term(Monomial(std::move(shifted)), flip * term_sign(k, lambda));
    });
}

// Expansion of the product over (scalar + x_{lambda_j}) along one index
// sequence: every subset of positions keeps its generator, the rest
// contribute the scalar.
inline void add_binomial_product(Polynomial& out, std::span<const int> lambda, Letter letter,
                                 int scalar, const Int& prefactor) {
    std::size_t l = lambda.size();
    std::vector<Generator> word;
    word.reserve(l);
    for (std::size_t subset = 0; subset < (std::size_t{1} << l); ++subset) {
        word.clear();
        int scalar_power = 1;
        for (std::size_t j = 0; j < l; ++j) {
            if (subset & (std::size_t{1} << j))
                word.emplace_back(letter, lambda[j]);
            else
                scalar_power *= scalar;
        }
        out.add_term(Monomial(word), prefactor * scalar_power);
    }
}

}  // namespace detail

/// rho(k) + the signed sum over the R family; equals r_poly(k).
inline Polynomial combinatorial_R(int k) {
    Polynomial out = Polynomial::constant(rho(k));
    detail::add_signed_family(out, MonomialFamily::R, k, 1);
    return out;
}

/// -sigma(k) + signed sums over the R families at k-1 and k; equals
/// k_numerator(k).
inline Polynomial combinatorial_P(int k) {
    Polynomial out = Polynomial::constant(-sigma(k));
    detail::add_signed_family(out, MonomialFamily::R, k - 1, 1);
    detail::add_signed_family(out, MonomialFamily::R, k, 1);
    return out;
}

/// sigma(k+1) minus the shifted signed sums over the R families at k and
/// k+1 (members with smallest index <= 1 drop out); equals k_denominator(k).
inline Polynomial combinatorial_Q(int k) {
    Polynomial out = Polynomial::constant(sigma(k + 1));
    detail::add_signed_family_shifted(out, MonomialFamily::R, k, -1);
    detail::add_signed_family_shifted(out, MonomialFamily::R, k + 1, -1);
    return out;
}

/// The pure-a specialization of combinatorial_P, over the U families.
inline Polynomial combinatorial_C(int k) {
    Polynomial out = Polynomial::constant(-sigma(k));
    detail::add_signed_family(out, MonomialFamily::U, k - 1, 1);
    detail::add_signed_family(out, MonomialFamily::U, k, 1);
    return out;
}

inline Polynomial combinatorial_D(int k) {
    Polynomial out = Polynomial::constant(sigma(k + 1));
    detail::add_signed_family_shifted(out, MonomialFamily::U, k, -1);
    detail::add_signed_family_shifted(out, MonomialFamily::U, k + 1, -1);
    return out;
}

/// The pure-b specialization of combinatorial_P, over the V families.
inline Polynomial combinatorial_G(int k) {
    Polynomial out = Polynomial::constant(-sigma(k));
    detail::add_signed_family(out, MonomialFamily::V, k - 1, 1);
    detail::add_signed_family(out, MonomialFamily::V, k, 1);
    return out;
}

inline Polynomial combinatorial_H(int k) {
    Polynomial out = Polynomial::constant(sigma(k + 1));
    detail::add_signed_family_shifted(out, MonomialFamily::V, k, -1);
    detail::add_signed_family_shifted(out, MonomialFamily::V, k + 1, -1);
    return out;
}

/// The Euler-Minding side of the numerator identity: the fully expanded sum
/// of products (-1 + a_{lambda_1}) ... (-1 + a_{lambda_l}) over the minimal
/// difference 2 sequences ending in 1.  Cancellation reduces it to
/// combinatorial_C(k).
inline Polynomial em_C(int k) {
    Polynomial out;
    for_each_seq_member(SeqFamily::C, k, [&](std::span<const int> lambda) {
        detail::add_binomial_product(out, lambda, Letter::A, -1, 1);
    });
    return out;
}

/// The Euler-Minding side of the denominator identity: -chi1(k) plus the
/// expanded products (1 + b_{lambda_j}) over the alternating parity family,
/// each weighted by (-1)^{(k - l + 1)/2}.  Equals combinatorial_G(k).
inline Polynomial em_G(int k) {
    Polynomial out = Polynomial::constant(-chi1(k));
    for_each_seq_member(SeqFamily::D, k, [&](std::span<const int> lambda) {
        int l = static_cast<int>(lambda.size());
        Int prefactor = (k - l + 1) / 2 % 2 == 0 ? 1 : -1;
        detail::add_binomial_product(out, lambda, Letter::B, 1, prefactor);
    });
    return out;
}

}  // namespace tricont
