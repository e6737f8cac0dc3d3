#pragma once

#include <functional>
#include <map>
#include <utility>

#include "tricont/polynomial.hpp"

namespace tricont {

/// A ring homomorphism given by generator images.  Generators without an
/// explicit image map to themselves, so finite maps describe substitutions
/// on the whole generator set.
class Substitution {
public:
    Substitution() = default;

    /// Base rule applied to generators without an explicit image.
    explicit Substitution(std::function<Polynomial(const Generator&)> rule)
        : rule_(std::move(rule)) {}

    Substitution& set(const Generator& g, Polynomial image) {
        images_.insert_or_assign(g, std::move(image));
        return *this;
    }

    Polynomial image_of(const Generator& g) const {
        if (auto it = images_.find(g); it != images_.end()) return it->second;
        if (rule_) return rule_(g);
        return Polynomial::generator(g);
    }

    static Substitution identity() { return Substitution(); }

    /// a_1, b_0, b_1 -> 0 and every other subscript shifted down by one.
    static Substitution phi() {
        return Substitution([](const Generator& g) {
            if (g.subscript <= 1) return Polynomial::zero();
            return Polynomial::generator(Generator(g.letter, g.subscript - 1));
        });
    }

    /// a_i -> -1 + a_i and b_i -> 1 + b_i for i >= 1; b_0 is fixed, matching
    /// the unshifted leading partial quotient.
    static Substitution delta() {
        return Substitution([](const Generator& g) {
            if (g.is_b() && g.subscript == 0) return Polynomial::generator(g);
            Polynomial image = Polynomial::constant(g.is_a() ? -1 : 1);
            image += Polynomial::generator(g);
            return image;
        });
    }

    /// a_j -> a_{j+1}, b_j -> b_{j+1}.
    static Substitution shift_up() {
        return Substitution([](const Generator& g) {
            return Polynomial::generator(Generator(g.letter, g.subscript + 1));
        });
    }

    /// Every a_i -> 0.
    static Substitution zero_a() {
        return Substitution([](const Generator& g) {
            if (g.is_a()) return Polynomial::zero();
            return Polynomial::generator(g);
        });
    }

    /// Every b_i -> 0, b_0 included.
    static Substitution zero_b() {
        return Substitution([](const Generator& g) {
            if (g.is_b()) return Polynomial::zero();
            return Polynomial::generator(g);
        });
    }

    /// a_i -> 0 for all i and b_0 -> 0; b_1, b_2, ... are fixed.
    static Substitution zero_a_and_b0() {
        return Substitution([](const Generator& g) {
            if (g.is_a() || g.subscript == 0) return Polynomial::zero();
            return Polynomial::generator(g);
        });
    }

private:
    std::function<Polynomial(const Generator&)> rule_;
    std::map<Generator, Polynomial> images_;
};

/// Applies the homomorphism: each word becomes the ordered product of its
/// letters' images, fully expanded and collected.
inline Polynomial substitute(const Polynomial& p, const Substitution& sub) {
    Polynomial out;
    for (const auto& [m, c] : p) {
        Polynomial factor = Polynomial::constant(c);
        for (const Generator& g : m.word()) {
            factor *= sub.image_of(g);
            if (factor.is_zero()) break;
        }
        out += factor;
    }
    return out;
}

inline Polynomial substitute(const Monomial& m, const Substitution& sub) {
    return substitute(Polynomial::monomial(m), sub);
}

}  // namespace tricont
