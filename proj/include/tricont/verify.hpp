#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricont/closed_forms.hpp"
#include "tricont/continuants.hpp"
#include "tricont/families.hpp"
#include "tricont/periodic.hpp"
#include "tricont/sequences.hpp"
#include "tricont/substitution.hpp"

namespace tricont {

/// Outcome of mechanically checking one identity over a k range.
struct VerificationReport {
    struct Failure {
        int k = 0;
        std::string lhs;
        std::string rhs;
    };

    std::string identity;
    int k_min = 0;
    int k_max = 0;
    bool verified = false;
    std::optional<Failure> first_failure;
};

namespace detail {

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& rep) : rep_(&rep) {}

    /// Records the first mismatch; later ones are ignored.
    void expect(bool ok, int k, const std::function<std::string()>& lhs,
                const std::function<std::string()>& rhs) {
        if (ok || rep_->first_failure) return;
        rep_->first_failure = VerificationReport::Failure{k, lhs(), rhs()};
    }

    template <typename L, typename R>
    void expect_eq(int k, const L& lhs, const R& rhs) {
        expect(lhs == rhs, k, [&] { return value_str(lhs); }, [&] { return value_str(rhs); });
    }

    bool failed() const { return rep_->first_failure.has_value(); }

private:
    static std::string value_str(const Polynomial& p) { return p.str(); }
    static std::string value_str(const Int& v) { return v.str(); }
    static std::string value_str(const Rational& v) {
        return numerator(v).str() + "/" + denominator(v).str();
    }
    static std::string value_str(long long v) { return std::to_string(v); }
    static std::string value_str(std::size_t v) { return std::to_string(v); }
    static std::string value_str(const std::string& s) { return s; }

    VerificationReport* rep_;
};

inline std::vector<int> word_index(std::span<const Generator> w) {
    std::vector<int> lambda;
    lambda.reserve(w.size());
    for (const Generator& g : w) lambda.push_back(g.subscript);
    return lambda;
}

/// Sum of sign(m) * weight(lambda) over a family; weight sees the index.
template <typename W>
Int signed_family_sum(MonomialFamily fam, int k, W&& weight) {
    Int total = 0;
    std::vector<int> lambda;
    for_each_family_member(fam, k, [&](std::span<const Generator> w) {
        lambda.clear();
        for (const Generator& g : w) lambda.push_back(g.subscript);
        std::span<const int> view(lambda);
        total += Int(term_sign(k, view)) * weight(view);
    });
    return total;
}

inline Int signed_family_count(MonomialFamily fam, int k) {
    return signed_family_sum(fam, k, [](std::span<const int>) { return Int(1); });
}

inline Polynomial family_member_sum(MonomialFamily fam, int k) {
    Polynomial out;
    for_each_family_member(fam, k,
                           [&](std::span<const Generator> w) { out.add_term(Monomial(w), 1); });
    return out;
}

inline std::size_t family_size(MonomialFamily fam, int k) {
    std::size_t n = 0;
    for_each_family_member(fam, k, [&](std::span<const Generator>) { ++n; });
    return n;
}

}  // namespace detail

/// The two Fibonacci formulas over the U families; both entries equal F_k.
inline std::pair<Int, Int> fibonacci_via_formulas(int k) {
    auto weight_all = [](std::span<const int> lambda) {
        return pow_int(2, static_cast<unsigned>(lambda.size()));
    };
    auto weight_min1 = [](std::span<const int> lambda) {
        if (lambda.back() != 1) return Int(0);
        return pow_int(2, static_cast<unsigned>(lambda.size() - 1));
    };
    Int first = Int(-sigma(k)) +
                detail::signed_family_sum(MonomialFamily::U, k - 1, weight_all) +
                detail::signed_family_sum(MonomialFamily::U, k, weight_all);
    Int second = detail::signed_family_sum(MonomialFamily::U, k - 1, weight_min1) +
                 detail::signed_family_sum(MonomialFamily::U, k, weight_min1);
    return {first, second};
}

/// The integer-weighted Pell formula over the U families; equals Pell(k).
inline Int pell_via_formulas(int k) {
    auto weight = [k](std::span<const int> lambda) {
        unsigned l = static_cast<unsigned>(lambda.size());
        return pow_int(5, l) * pow_int(2, static_cast<unsigned>(k + 1) - 2 * l);
    };
    return Int(-sigma(k)) * pow_int(2, static_cast<unsigned>(k + 1)) +
           detail::signed_family_sum(MonomialFamily::U, k - 1, weight) +
           detail::signed_family_sum(MonomialFamily::U, k, weight);
}

namespace detail {

struct IdentityEntry {
    std::string name;
    int default_kmax;
    std::function<void(int, VerificationReport&)> run;
};

inline void check_prop_R(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k)
        b.expect_eq(k, r_poly(k), combinatorial_R(k));
}

inline void check_em_analogue(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        b.expect_eq(k, k_numerator(k), combinatorial_P(k));
        b.expect_eq(k, k_denominator(k), combinatorial_Q(k));
    }
}

inline void check_noncom_em(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k)
        b.expect_eq(k, em_numerator(k), family_member_sum(MonomialFamily::A, k));
}

inline void check_delta_bridge(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    const Substitution delta = Substitution::delta();
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Polynomial expanded = substitute(family_member_sum(MonomialFamily::A, k), delta);
        b.expect_eq(k, expanded, combinatorial_P(k));
        b.expect_eq(k, expanded, k_numerator(k));
    }
}

inline void check_c_general(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k)
        b.expect_eq(k, em_C(k), combinatorial_C(k));
}

inline void check_c_spec1(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int sum = 0;
        for_each_seq_member(SeqFamily::C, k, [&](std::span<const int> lambda) {
            sum += lambda.size() % 2 == 0 ? 1 : -1;
        });
        b.expect_eq(k, sum, Int(-sigma(k)));
    }
}

inline void check_c_spec2(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int sum = Int(-sigma(k)) + signed_family_count(MonomialFamily::U, k - 1) +
                  signed_family_count(MonomialFamily::U, k);
        b.expect_eq(k, sum, Int(0));
    }
}

inline void check_d_general(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k)
        b.expect_eq(k, em_G(k), combinatorial_G(k));
}

inline void check_d_spec1(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int sum = Int(-chi1(k));
        bool integral_exponent = true;
        for_each_seq_member(SeqFamily::D, k, [&](std::span<const int> lambda) {
            int l = static_cast<int>(lambda.size());
            if ((k - l + 1) % 2 != 0) integral_exponent = false;
            sum += (k - l + 1) / 2 % 2 == 0 ? 1 : -1;
        });
        b.expect(integral_exponent, k, [] { return std::string("integral exponent"); },
                 [] { return std::string("odd k-l+1"); });
        b.expect_eq(k, sum, Int(-sigma(k)));
    }
}

inline void check_d_spec2(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    auto alternating = [](std::span<const int> lambda) {
        return lambda.size() % 2 == 0 ? Int(1) : Int(-1);
    };
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int rhs = signed_family_sum(MonomialFamily::V, k - 1, alternating) +
                  signed_family_sum(MonomialFamily::V, k, alternating);
        b.expect_eq(k, Int(-chi1(k) + sigma(k)), rhs);
    }
}

inline void check_fib_U(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> fib = sequence("fibonacci", kmax);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        auto [first, second] = fibonacci_via_formulas(k);
        b.expect_eq(k, first, fib[static_cast<std::size_t>(k)]);
        b.expect_eq(k, second, fib[static_cast<std::size_t>(k)]);
    }
}

inline void check_fib_V(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> fib = sequence("fibonacci", kmax);
    // Only the all-odd-index members contribute.  The subfamily is NOT empty
    // for every even k: b_3 is an all-odd member of the V family at k = 6,
    // and the identity needs its contribution.
    auto weight = [](std::span<const int> lambda) {
        for (int v : lambda)
            if (v % 2 == 0) return Int(0);
        Int w = pow_int(2, static_cast<unsigned>(lambda.size()));
        return lambda.size() % 2 == 0 ? w : -w;
    };
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int rhs = Int(-sigma(k)) +
                  signed_family_sum(MonomialFamily::V, k - 1, weight) +
                  signed_family_sum(MonomialFamily::V, k, weight);
        b.expect_eq(k, Int(tau(k) * fib[static_cast<std::size_t>(k)]), rhs);
    }
}

inline void check_pell_U(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> pell = sequence("pell", kmax);
    const Rational five_fourths(5, 4);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        b.expect_eq(k, pell_via_formulas(k), pell[static_cast<std::size_t>(k)]);
        // Rational route: 2^{k+1} (-sigma(k) + sum of (5/4)^l weights).
        Rational sum = -sigma(k);
        std::vector<int> lambda;
        for (int kk : {k - 1, k}) {
            for_each_family_member(MonomialFamily::U, kk, [&](std::span<const Generator> w) {
                lambda.clear();
                for (const Generator& g : w) lambda.push_back(g.subscript);
                Rational weight = pow_rational(five_fourths, static_cast<unsigned>(w.size()));
                sum += Rational(term_sign(kk, std::span<const int>(lambda))) * weight;
            });
        }
        sum *= Rational(pow_int(2, static_cast<unsigned>(k + 1)));
        b.expect_eq(k, sum, Rational(pell[static_cast<std::size_t>(k)]));
    }
}

inline void check_pell_mod5(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> pell = sequence("pell", kmax);
    for (int k = 0; k <= kmax && !b.failed(); ++k)
        b.expect_eq(k, Int(pell[static_cast<std::size_t>(k)] % 5), Int(upsilon(k)));
}

inline void check_pell_V(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> pell = sequence("pell", kmax);
    auto weight = [](std::span<const int> lambda) {
        unsigned odd = 0;
        for (int v : lambda)
            if (v % 2 != 0) ++odd;
        return pow_int(-3, odd);
    };
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int rhs = Int(-sigma(k)) +
                  signed_family_sum(MonomialFamily::V, k - 1, weight) +
                  signed_family_sum(MonomialFamily::V, k, weight);
        b.expect_eq(k, Int(tau(k) * pell[static_cast<std::size_t>(k)]), rhs);
    }
}

inline void check_jacobsthal(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    // Signed term counts of R_k, from the polynomials while they are cheap.
    int poly_kmax = std::min(kmax, 14);
    std::vector<Int> jac = sequence("jacobsthal", poly_kmax + 1);
    std::vector<Int> r_counts = sequence("r", poly_kmax);
    std::vector<Int> pos(static_cast<std::size_t>(poly_kmax) + 1, 0);
    std::vector<Int> neg(static_cast<std::size_t>(poly_kmax) + 1, 0);
    for (int k = 0; k <= poly_kmax && !b.failed(); ++k) {
        auto ks = static_cast<std::size_t>(k);
        for (const auto& [m, c] : r_poly(k)) (c > 0 ? pos[ks] : neg[ks]) += 1;
        b.expect_eq(k, Int(pos[ks] - neg[ks]), jac[ks + 1]);
        b.expect_eq(k, Int(pos[ks] + neg[ks]), r_counts[ks]);
        if (k >= 3) {
            b.expect_eq(k, neg[ks], Int(pos[ks - 3] + neg[ks - 3] + 2 * neg[ks - 2] + neg[ks - 1]));
            b.expect_eq(k, pos[ks], Int(neg[ks - 3] + pos[ks - 3] + 2 * pos[ks - 2] + pos[ks - 1]));
        }
    }
    // The power-of-two sum, via the families so larger k stays cheap.
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        Int sum = Int(-sigma(k)) + signed_family_count(MonomialFamily::R, k - 1) +
                  signed_family_count(MonomialFamily::R, k);
        b.expect_eq(k, sum, pow_int(2, static_cast<unsigned>(k)));
    }
}

inline void check_gf_table(ReportBuilder& b, const SequenceTable& table, int n_max = 40) {
    std::vector<Int> by_recurrence = sequence_values(table, n_max);
    std::vector<Int> by_division = gf_coefficients(table, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (by_recurrence[static_cast<std::size_t>(n)] ==
            by_division[static_cast<std::size_t>(n)])
            continue;
        b.expect(false, n,
                 [&] { return table.name + " gf coefficient " +
                              by_division[static_cast<std::size_t>(n)].str(); },
                 [&] { return table.name + " recurrence value " +
                              by_recurrence[static_cast<std::size_t>(n)].str(); });
        return;
    }
}

inline void check_one_plus_x(ReportBuilder& b, const std::string& base,
                             const std::string& derived) {
    b.expect(gf_is_one_plus_x_multiple(sequence_table(base), sequence_table(derived)), 0,
             [&] { return "gf(" + derived + ")"; },
             [&] { return "(1+x) * gf(" + base + ")"; });
}

inline void check_counts_R(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> r_counts = sequence("r", kmax);
    std::vector<Int> s_counts = sequence("s", kmax);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        auto ks = static_cast<std::size_t>(k);
        b.expect_eq(k, Int(r_poly(k).support_size()), r_counts[ks]);
        Int family = Int(family_size(MonomialFamily::R, k));
        b.expect_eq(k, family, s_counts[ks]);
        b.expect_eq(k, family, Int(r_counts[ks] - (rho(k) != 0 ? 1 : 0)));
    }
    check_gf_table(b, sequence_table("r"));
    check_gf_table(b, sequence_table("s"));
}

inline void check_counts_U(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> u_counts = sequence("u", kmax);
    std::vector<Int> uf_counts = sequence("u_family", kmax);
    std::vector<Int> c_counts = sequence("c_support", kmax);
    std::vector<Int> uu_counts = sequence("u_union", kmax);
    const Substitution zero_b = Substitution::zero_b();
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        auto ks = static_cast<std::size_t>(k);
        b.expect_eq(k, Int(substitute(r_poly(k), zero_b).support_size()), u_counts[ks]);
        Int family = Int(family_size(MonomialFamily::U, k));
        Int prev = Int(family_size(MonomialFamily::U, k - 1));
        b.expect_eq(k, family, uf_counts[ks]);
        b.expect_eq(k, Int(combinatorial_C(k).support_size()), c_counts[ks]);
        b.expect_eq(k, Int(family + prev), uu_counts[ks]);
    }
    check_gf_table(b, sequence_table("u"));
    check_gf_table(b, sequence_table("u_family"));
    check_gf_table(b, sequence_table("c_support"));
    check_gf_table(b, sequence_table("u_union"));
    check_one_plus_x(b, "u", "c_support");
    check_one_plus_x(b, "u_family", "u_union");
}

inline void check_counts_V(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> t_counts = sequence("tribonacci", kmax);
    std::vector<Int> vf_counts = sequence("v_family", kmax);
    std::vector<Int> g_counts = sequence("g_support", kmax);
    std::vector<Int> vu_counts = sequence("v_union", kmax);
    const Substitution zero_ab0 = Substitution::zero_a_and_b0();
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        auto ks = static_cast<std::size_t>(k);
        b.expect_eq(k, Int(substitute(r_poly(k), zero_ab0).support_size()), t_counts[ks]);
        Int family = Int(family_size(MonomialFamily::V, k));
        Int prev = Int(family_size(MonomialFamily::V, k - 1));
        b.expect_eq(k, family, vf_counts[ks]);
        b.expect_eq(k, Int(combinatorial_G(k).support_size()), g_counts[ks]);
        b.expect_eq(k, Int(family + prev), vu_counts[ks]);
    }
    check_gf_table(b, sequence_table("tribonacci"));
    check_gf_table(b, sequence_table("v_family"));
    check_gf_table(b, sequence_table("g_support"));
    check_gf_table(b, sequence_table("v_union"));
    check_one_plus_x(b, "tribonacci", "g_support");
    check_one_plus_x(b, "v_family", "v_union");
}

inline void check_counts_P(int kmax, VerificationReport& rep) {
    ReportBuilder b(rep);
    std::vector<Int> p_counts = sequence("p_support", kmax);
    std::vector<Int> ru_counts = sequence("r_union", kmax);
    for (int k = 0; k <= kmax && !b.failed(); ++k) {
        auto ks = static_cast<std::size_t>(k);
        b.expect_eq(k, Int(k_numerator(k).support_size()), p_counts[ks]);
        // Union size computed as an actual set union; the families at k and
        // k-1 are disjoint, which this exercises.
        Polynomial un = family_member_sum(MonomialFamily::R, k);
        un += family_member_sum(MonomialFamily::R, k - 1);
        b.expect_eq(k, Int(un.support_size()), ru_counts[ks]);
    }
    check_gf_table(b, sequence_table("p_support"));
    check_gf_table(b, sequence_table("r_union"));
    check_gf_table(b, sequence_table("fibonacci"));
    check_gf_table(b, sequence_table("pell"));
    check_gf_table(b, sequence_table("jacobsthal"));
    check_one_plus_x(b, "r", "p_support");
    check_one_plus_x(b, "s", "r_union");
}

inline const std::vector<IdentityEntry>& identity_registry() {
    static const std::vector<IdentityEntry> entries = {
        {"prop_R", 13, check_prop_R},
        {"em_analogue", 13, check_em_analogue},
        {"noncom_em", 13, check_noncom_em},
        {"delta_bridge", 11, check_delta_bridge},
        {"c_general", 13, check_c_general},
        {"c_spec1", 30, check_c_spec1},
        {"c_spec2", 30, check_c_spec2},
        {"d_general", 13, check_d_general},
        {"d_spec1", 30, check_d_spec1},
        {"d_spec2", 30, check_d_spec2},
        {"fib_U", 13, check_fib_U},
        {"fib_V", 13, check_fib_V},
        {"pell_U", 13, check_pell_U},
        {"pell_mod5", 60, check_pell_mod5},
        {"pell_V", 13, check_pell_V},
        {"jacobsthal", 20, check_jacobsthal},
        {"counts_R", 14, check_counts_R},
        {"counts_U", 14, check_counts_U},
        {"counts_V", 14, check_counts_V},
        {"counts_P", 14, check_counts_P},
    };
    return entries;
}

}  // namespace detail

inline std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& e : detail::identity_registry()) names.push_back(e.name);
    return names;
}

inline int identity_default_kmax(std::string_view name) {
    for (const auto& e : detail::identity_registry())
        if (e.name == name) return e.default_kmax;
    throw std::invalid_argument("unknown identity: '" + std::string(name) + "'");
}

/// Checks the named identity exactly for every k in [0, k_max]; k_max < 0
/// selects the identity's default range.
inline VerificationReport verify_identity(std::string_view name, int k_max = -1) {
    for (const auto& e : detail::identity_registry()) {
        if (e.name != name) continue;
        VerificationReport rep;
        rep.identity = e.name;
        rep.k_min = 0;
        rep.k_max = k_max < 0 ? e.default_kmax : k_max;
        e.run(rep.k_max, rep);
        rep.verified = !rep.first_failure.has_value();
        return rep;
    }
    throw std::invalid_argument("unknown identity: '" + std::string(name) + "'");
}

/// Runs every identity in registry order.
inline std::vector<VerificationReport> verify_all(int k_max = -1) {
    std::vector<VerificationReport> reports;
    for (const auto& e : detail::identity_registry())
        reports.push_back(verify_identity(e.name, k_max));
    return reports;
}

}  // namespace tricont
