#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tricont/numeric.hpp"

namespace tricont {

/// A named integer sequence pinned by initial values and a linear constant-
/// coefficient recurrence, optionally carrying its rational generating
/// function for cross-checks.
struct SequenceTable {
    std::string name;
    std::vector<Int> initial;
    std::vector<Int> recurrence;  // a_n = rec[0] a_{n-1} + rec[1] a_{n-2} + ...
    std::vector<Int> gf_numerator;    // empty when no generating function is pinned
    std::vector<Int> gf_denominator;

    bool has_generating_function() const { return !gf_denominator.empty(); }
};

/// First n_max+1 values from the table's recurrence.
inline std::vector<Int> sequence_values(const SequenceTable& table, int n_max) {
    if (n_max < 0) throw std::invalid_argument("sequence_values: n_max must be >= 0");
    std::vector<Int> v;
    v.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n < static_cast<int>(table.initial.size())) {
            v.push_back(table.initial[static_cast<std::size_t>(n)]);
            continue;
        }
        Int next = 0;
        for (std::size_t j = 0; j < table.recurrence.size(); ++j)
            next += table.recurrence[j] * v[static_cast<std::size_t>(n) - 1 - j];
        v.push_back(std::move(next));
    }
    return v;
}

/// Maclaurin coefficients 0..n_max of num/den by exact long division.
inline std::vector<Int> power_series_quotient(const std::vector<Int>& num,
                                              const std::vector<Int>& den, int n_max) {
    if (den.empty() || den[0] == 0)
        throw std::domain_error("power series division needs a unit constant term");
    std::vector<Int> c(static_cast<std::size_t>(n_max) + 1, 0);
    for (int n = 0; n <= n_max; ++n) {
        Int acc = n < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(n)] : Int(0);
        for (int j = 1; j <= n && j < static_cast<int>(den.size()); ++j)
            acc -= den[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(n - j)];
        if (acc % den[0] != 0)
            throw std::domain_error("power series division is not integral");
        c[static_cast<std::size_t>(n)] = acc / den[0];
    }
    return c;
}

inline std::vector<Int> gf_coefficients(const SequenceTable& table, int n_max) {
    if (!table.has_generating_function())
        throw std::domain_error("sequence '" + table.name + "' has no generating function");
    return power_series_quotient(table.gf_numerator, table.gf_denominator, n_max);
}

/// Exact product of two integer coefficient vectors.
inline std::vector<Int> poly_product(const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.empty() || y.empty()) return {};
    std::vector<Int> out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline std::vector<Int> trimmed(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/// True when gf2 = (1+x) * gf1 as rational functions.
inline bool gf_is_one_plus_x_multiple(const SequenceTable& base, const SequenceTable& derived) {
    const std::vector<Int> one_plus_x{1, 1};
    auto lhs = poly_product(derived.gf_numerator, base.gf_denominator);
    auto rhs = poly_product(poly_product(one_plus_x, base.gf_numerator),
                            derived.gf_denominator);
    return trimmed(lhs) == trimmed(rhs);
}

/// The closed registry of sequences.  Names:
///   r           terms of the structure polynomials R_n
///   s           members of the R monomial family
///   u           terms of R_n with every b set to 0
///   tribonacci  terms of R_n with a and b_0 set to 0
///   u_family    members of the U monomial family
///   v_family    members of the V monomial family
///   p_support   terms of the classical numerators P_n
///   r_union     members of the R families at n and n-1 combined
///   c_support   terms of the pure-a numerators C_n
///   u_union     members of the U families at n and n-1 combined
///   g_support   terms of the pure-b numerators G_n
///   v_union     members of the V families at n and n-1 combined
///   fibonacci, pell, jacobsthal
inline const std::vector<SequenceTable>& sequence_registry() {
    static const std::vector<SequenceTable> tables = [] {
        std::vector<SequenceTable> t;
        auto add = [&](std::string name, std::vector<Int> initial, std::vector<Int> rec,
                       std::vector<Int> num, std::vector<Int> den) {
            t.push_back({std::move(name), std::move(initial), std::move(rec),
                         std::move(num), std::move(den)});
        };
        const std::vector<Int> den_r{1, -1, -2, -2};
        const std::vector<Int> den_s{1, -1, -2, -3, 1, 2, 2};
        const std::vector<Int> den_u{1, 0, -1, -2};
        const std::vector<Int> den_uf{1, 0, -1, -3, 0, 1, 2};
        const std::vector<Int> den_t{1, -1, -1, -1};
        const std::vector<Int> den_vf{1, -1, -1, -2, 1, 1, 1};
        add("r", {1, 3, 5}, {1, 2, 2}, {1, 2}, den_r);
        add("s", {1, 2, 5, 13, 28, 65}, {1, 2, 3, -1, -2, -2}, {1, 1, 1, 1}, den_s);
        add("u", {0, 2, 0}, {0, 1, 2}, {0, 2}, den_u);
        add("tribonacci", {0, 1, 1}, {1, 1, 1}, {0, 1}, den_t);
        add("u_family", {0, 1, 0, 2, 3, 2}, {0, 1, 3, 0, -1, -2}, {0, 1, 0, 1}, den_uf);
        add("v_family", {0, 0, 1, 2, 3, 7}, {1, 1, 2, -1, -1, -1}, {0, 0, 1, 1}, den_vf);
        add("p_support", {1, 4, 8}, {1, 2, 2}, {1, 3, 2}, den_r);
        add("r_union", {1, 3, 7, 18, 41, 93}, {1, 2, 3, -1, -2, -2}, {1, 2, 2, 2, 1}, den_s);
        add("c_support", {0, 2, 2}, {0, 1, 2}, {0, 2, 2}, den_u);
        add("u_union", {0, 1, 1, 2, 5, 5}, {0, 1, 3, 0, -1, -2}, {0, 1, 1, 1, 1}, den_uf);
        add("g_support", {0, 1, 2}, {1, 1, 1}, {0, 1, 1}, den_t);
        add("v_union", {0, 0, 1, 3, 5, 10}, {1, 1, 2, -1, -1, -1}, {0, 0, 1, 2, 1}, den_vf);
        add("fibonacci", {0, 1}, {1, 1}, {0, 1}, {1, -1, -1});
        add("pell", {0, 1}, {2, 1}, {0, 1}, {1, -2, -1});
        add("jacobsthal", {0, 1}, {1, 2}, {0, 1}, {1, -1, -2});
        return t;
    }();
    return tables;
}

inline const SequenceTable& sequence_table(std::string_view name) {
    for (const SequenceTable& t : sequence_registry())
        if (t.name == name) return t;
    throw std::invalid_argument("unknown sequence: '" + std::string(name) + "'");
}

inline std::vector<Int> sequence(std::string_view name, int n_max) {
    return sequence_values(sequence_table(name), n_max);
}

/// The base<->derived pairs whose generating functions differ by a (1+x)
/// factor.
inline std::vector<std::pair<std::string, std::string>> one_plus_x_pairs() {
    return {{"r", "p_support"},         {"s", "r_union"}, {"u", "c_support"},
            {"u_family", "u_union"},    {"tribonacci", "g_support"},
            {"v_family", "v_union"}};
}

}  // namespace tricont
