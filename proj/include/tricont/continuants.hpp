#pragma once

#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tricont/polynomial.hpp"

namespace tricont {

/// Memoized continuant sequences.
///
///   em_numerator    A_k = a_k A_{k-2} + b_k A_{k-1},  A_0 = b_0, A_1 = b_1 b_0 + a_1
///   em_denominator  B_k = a_k B_{k-2} + b_k B_{k-1},  B_0 = 1,   B_1 = b_1
///   k_numerator     P_k = (-1+a_k) P_{k-2} + (1+b_k) P_{k-1},  P_0 = b_0,
///                   P_1 = -1 + b_0 + b_1 b_0 + a_1
///   k_denominator   Q_k, same recurrence, Q_0 = 1, Q_1 = 1 + b_1
///   r_poly          R_k = -R_{k-3} + a_k (R_{k-2}+R_{k-3}) + b_k (R_{k-1}+R_{k-2}),
///                   R_{-3} = 0, R_{-2} = 1, R_{-1} = 0, and a_0 treated as 0
///
/// Each sequence is extended iteratively and cached.  Entries already
/// published are immutable and may be read concurrently; extension happens
/// under a lock.  The deques keep references stable across growth.
class ContinuantCache {
public:
    static constexpr int kDefaultMaxK = 16;

    explicit ContinuantCache(int max_k = kDefaultMaxK) : max_k_(max_k) {}

    int max_k() const { return max_k_; }

    const Polynomial& em_numerator(int k) { return get(a_, k, 0); }
    const Polynomial& em_denominator(int k) { return get(b_, k, 0); }
    const Polynomial& k_numerator(int k) { return get(p_, k, 0); }
    const Polynomial& k_denominator(int k) { return get(q_, k, 0); }

    /// Defined from k = -3 up.
    const Polynomial& r_poly(int k) { return get(r_, k, -3); }

private:
    struct Sequence {
        std::deque<Polynomial> values;
        std::atomic<int> ready{0};  // number of published entries
    };

    const Polynomial& get(Sequence& seq, int k, int first_k) {
        if (k < first_k)
            throw std::invalid_argument("continuant index " + std::to_string(k) +
                                        " is below the sequence domain");
        if (k > max_k_)
            throw std::out_of_range("continuant index " + std::to_string(k) +
                                    " exceeds the configured cap " + std::to_string(max_k_));
        std::size_t slot = static_cast<std::size_t>(k - first_k);
        if (slot < static_cast<std::size_t>(seq.ready.load(std::memory_order_acquire)))
            return seq.values[slot];
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<std::size_t>(seq.ready.load(std::memory_order_relaxed)) <= slot) {
            int next = first_k + seq.ready.load(std::memory_order_relaxed);
            seq.values.push_back(compute(seq, next));
            seq.ready.fetch_add(1, std::memory_order_release);
        }
        return seq.values[slot];
    }

    Polynomial compute(Sequence& seq, int k) {
        const Polynomial b0 = Polynomial::generator(Generator::b(0));
        if (&seq == &a_) {
            if (k == 0) return b0;
            if (k == 1)
                return left_mul_gen(Generator::b(1), b0) +
                       Polynomial::generator(Generator::a(1));
            return left_mul_gen(Generator::a(k), at(seq, k - 2, 0)) +
                   left_mul_gen(Generator::b(k), at(seq, k - 1, 0));
        }
        if (&seq == &b_) {
            if (k == 0) return Polynomial::one();
            if (k == 1) return Polynomial::generator(Generator::b(1));
            return left_mul_gen(Generator::a(k), at(seq, k - 2, 0)) +
                   left_mul_gen(Generator::b(k), at(seq, k - 1, 0));
        }
        if (&seq == &p_ || &seq == &q_) {
            if (k == 0) return &seq == &p_ ? b0 : Polynomial::one();
            if (k == 1) {
                if (&seq == &q_)
                    return Polynomial::one() + Polynomial::generator(Generator::b(1));
                Polynomial p1 = Polynomial::constant(-1) + b0;
                p1 += left_mul_gen(Generator::b(1), b0);
                p1 += Polynomial::generator(Generator::a(1));
                return p1;
            }
            // The binomial multipliers are expanded term by term instead of
            // going through general multiplication.
            const Polynomial& x2 = at(seq, k - 2, 0);
            const Polynomial& x1 = at(seq, k - 1, 0);
            Polynomial out = left_mul_gen(Generator::a(k), x2) - x2;
            out += left_mul_gen(Generator::b(k), x1);
            out += x1;
            return out;
        }
        // R sequence; slots start at k = -3.
        if (k == -3 || k == -1) return Polynomial::zero();
        if (k == -2) return Polynomial::one();
        const Polynomial& r1 = at(seq, k - 1, -3);
        const Polynomial& r2 = at(seq, k - 2, -3);
        const Polynomial& r3 = at(seq, k - 3, -3);
        Polynomial out = -r3;
        if (k >= 1) {  // a_0 = 0: the a_k summand vanishes at k = 0
            Polynomial s23 = r2 + r3;
            out += left_mul_gen(Generator::a(k), s23);
        }
        Polynomial s12 = r1 + r2;
        out += left_mul_gen(Generator::b(k), s12);
        return out;
    }

    // Only valid under the extension lock or for already-published slots.
    const Polynomial& at(Sequence& seq, int k, int first_k) {
        return seq.values[static_cast<std::size_t>(k - first_k)];
    }

    int max_k_;
    std::mutex mu_;
    Sequence a_, b_, p_, q_, r_;
};

inline ContinuantCache& default_continuant_cache() {
    static ContinuantCache cache;
    return cache;
}

inline const Polynomial& em_numerator(int k) {
    return default_continuant_cache().em_numerator(k);
}
inline const Polynomial& em_denominator(int k) {
    return default_continuant_cache().em_denominator(k);
}
inline const Polynomial& k_numerator(int k) {
    return default_continuant_cache().k_numerator(k);
}
inline const Polynomial& k_denominator(int k) {
    return default_continuant_cache().k_denominator(k);
}
inline const Polynomial& r_poly(int k) {
    return default_continuant_cache().r_poly(k);
}

}  // namespace tricont
