#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tricont/polynomial.hpp"
#include "tricont/verify.hpp"

namespace tricont {

/// {"terms":[{"coef":"-1","word":[]},{"coef":"1","word":["a1"]},...]} with
/// coefficients as decimal strings and terms in canonical order.
inline nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p) {
        nlohmann::json word = nlohmann::json::array();
        for (const Generator& g : m.word()) word.push_back(g.str());
        terms.push_back({{"coef", c.str()}, {"word", word}});
    }
    return nlohmann::json{{"terms", terms}};
}

/// {"identity":"c_spec1","k_checked":[0,30],"status":"verified"}; failed
/// reports add "first_failure":{"k":...,"lhs":"...","rhs":"..."}.
inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json j{{"identity", rep.identity},
                     {"k_checked", {rep.k_min, rep.k_max}},
                     {"status", rep.verified ? "verified" : "failed"}};
    if (rep.first_failure) {
        j["first_failure"] = {{"k", rep.first_failure->k},
                              {"lhs", rep.first_failure->lhs},
                              {"rhs", rep.first_failure->rhs}};
    }
    return j;
}

}  // namespace tricont
