#include <catch2/catch_amalgamated.hpp>

#include "tricont/json_io.hpp"
#include "tricont/verify.hpp"

using namespace tricont;

TEST_CASE("fibonacci via the family formulas") {
    CHECK(fibonacci_via_formulas(0) == std::pair<Int, Int>{0, 0});
    CHECK(fibonacci_via_formulas(5) == std::pair<Int, Int>{5, 5});
    CHECK(fibonacci_via_formulas(12) == std::pair<Int, Int>{144, 144});
}

TEST_CASE("pell via the family formula") {
    CHECK(pell_via_formulas(1) == 1);
    CHECK(pell_via_formulas(5) == 29);
    std::vector<Int> pell = sequence("pell", 13);
    for (int k = 0; k <= 13; ++k) {
        CAPTURE(k);
        CHECK(pell_via_formulas(k) == pell[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("alternating length sum over minimal difference sequences") {
    VerificationReport rep = verify_identity("c_spec1", 30);
    CHECK(rep.verified);
    CHECK(rep.k_max == 30);
    CHECK_FALSE(rep.first_failure.has_value());

    // The k = 5 sum is (-1)^3 + 3(-1)^2 + (-1)^1 = 1 = -sigma(5).
    Int sum = 0;
    for_each_seq_member(SeqFamily::C, 5, [&](std::span<const int> lambda) {
        sum += lambda.size() % 2 == 0 ? 1 : -1;
    });
    CHECK(sum == 1);
    CHECK(-sigma(5) == 1);
}

TEST_CASE("base case report") {
    VerificationReport rep = verify_identity("prop_R", 0);
    CHECK(rep.verified);
    CHECK(rep.k_min == 0);
    CHECK(rep.k_max == 0);
}

TEST_CASE("every identity verifies on a short range") {
    for (const std::string& name : identity_names()) {
        CAPTURE(name);
        int kmax = std::min(identity_default_kmax(name), 8);
        VerificationReport rep = verify_identity(name, kmax);
        if (rep.first_failure) {
            CAPTURE(rep.first_failure->k, rep.first_failure->lhs, rep.first_failure->rhs);
            CHECK(rep.verified);
        } else {
            CHECK(rep.verified);
        }
    }
}

TEST_CASE("unknown identity is rejected") {
    CHECK_THROWS_AS(verify_identity("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(identity_default_kmax("nope"), std::invalid_argument);
}

TEST_CASE("report serialization") {
    VerificationReport rep = verify_identity("c_spec1", 30);
    nlohmann::json j = to_json(rep);
    CHECK(j.dump() == R"({"identity":"c_spec1","k_checked":[0,30],"status":"verified"})");

    VerificationReport failed;
    failed.identity = "demo";
    failed.k_min = 0;
    failed.k_max = 7;
    failed.verified = false;
    failed.first_failure = VerificationReport::Failure{7, "1", "2"};
    nlohmann::json fj = to_json(failed);
    CHECK(fj["status"] == "failed");
    CHECK(fj["first_failure"]["k"] == 7);
    CHECK(fj["first_failure"]["lhs"] == "1");
    CHECK(fj["first_failure"]["rhs"] == "2");
}

TEST_CASE("identity registry is complete") {
    std::vector<std::string> names = identity_names();
    CHECK(names.size() == 20);
    for (const char* expected :
         {"prop_R", "em_analogue", "noncom_em", "delta_bridge", "c_general", "c_spec1",
          "c_spec2", "d_general", "d_spec1", "d_spec2", "fib_U", "fib_V", "pell_U",
          "pell_mod5", "pell_V", "jacobsthal", "counts_R", "counts_U", "counts_V",
          "counts_P"}) {
        CAPTURE(expected);
        CHECK(std::count(names.begin(), names.end(), expected) == 1);
    }
}
