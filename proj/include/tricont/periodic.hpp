#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tricont {

// The periodic scalar sequences attached to the continuant recurrences.
// All are defined for k >= 0.

/// Period 6: 0,-1,0,0,1,0; the constant term of the structure polynomials.
/// Satisfies rho(k) = -rho(k-3).
inline int rho(long long k) {
    static constexpr std::array<int, 6> v{0, -1, 0, 0, 1, 0};
    if (k < 0) throw std::invalid_argument("rho: k must be nonnegative");
    return v[static_cast<std::size_t>(k % 6)];
}

/// Period 6: 0,1,1,0,-1,-1.  sigma(k) = -sigma(k-3) = -rho(k-1) - rho(k).
inline int sigma(long long k) {
    static constexpr std::array<int, 6> v{0, 1, 1, 0, -1, -1};
    if (k < 0) throw std::invalid_argument("sigma: k must be nonnegative");
    return v[static_cast<std::size_t>(k % 6)];
}

/// Period 4: -1 for k = 1,2 and +1 for k = 3,0 (mod 4).
inline int tau(long long k) {
    static constexpr std::array<int, 4> v{1, -1, -1, 1};
    if (k < 0) throw std::invalid_argument("tau: k must be nonnegative");
    return v[static_cast<std::size_t>(k % 4)];
}

/// Nonprincipal Dirichlet character modulo 4: 0,1,0,-1.
inline int chi1(long long k) {
    static constexpr std::array<int, 4> v{0, 1, 0, -1};
    if (k < 0) throw std::invalid_argument("chi1: k must be nonnegative");
    return v[static_cast<std::size_t>(k % 4)];
}

/// Period 12: 0,1,2,0,2,4,0,4,3,0,3,1; the residues of the Pell numbers
/// modulo 5.
inline int upsilon(long long k) {
    static constexpr std::array<int, 12> v{0, 1, 2, 0, 2, 4, 0, 4, 3, 0, 3, 1};
    if (k < 0) throw std::invalid_argument("upsilon: k must be nonnegative");
    return v[static_cast<std::size_t>(k % 12)];
}

inline int periodic(std::string_view name, long long k) {
    if (name == "rho") return rho(k);
    if (name == "sigma") return sigma(k);
    if (name == "tau") return tau(k);
    if (name == "chi1") return chi1(k);
    if (name == "upsilon") return upsilon(k);
    throw std::invalid_argument("unknown periodic sequence: '" + std::string(name) + "'");
}

}  // namespace tricont
