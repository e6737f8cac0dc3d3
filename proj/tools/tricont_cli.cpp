// Command-line front end: computes the continuant polynomial sequences,
// enumerates the monomial and sequence families, checks the identities, and
// emits the counting sequences.  Output is deterministic: identical flags
// produce byte-identical output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tricont/json_io.hpp"
#include "tricont/tricont.hpp"

using namespace tricont;

namespace {

struct Options {
    std::string poly;
    std::string family;
    std::string identity;
    std::string kmax = "default";
    std::string sequence_name;
    std::string format = "text";
    std::string out;
    int k = 0;
    int nmax = 0;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
    file << payload;
}

int parsed_kmax(const std::string& text) {
    if (text == "default") return -1;
    std::size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size() || value < 0)
        throw CLI::ValidationError("--kmax", "expected a nonnegative integer or 'default'");
    return value;
}

void check_k_range(int k, int lo, int hi, const std::string& what) {
    if (k < lo || k > hi)
        throw CLI::ValidationError(
            "--k", what + " supports k in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
}

int run_compute(const Options& opt) {
    Polynomial p;
    if (opt.poly == "A" || opt.poly == "B" || opt.poly == "P" || opt.poly == "Q") {
        check_k_range(opt.k, 0, ContinuantCache::kDefaultMaxK, "--poly " + opt.poly);
        if (opt.poly == "A") p = em_numerator(opt.k);
        if (opt.poly == "B") p = em_denominator(opt.k);
        if (opt.poly == "P") p = k_numerator(opt.k);
        if (opt.poly == "Q") p = k_denominator(opt.k);
    } else if (opt.poly == "R") {
        check_k_range(opt.k, -3, ContinuantCache::kDefaultMaxK, "--poly R");
        p = r_poly(opt.k);
    } else {
        check_k_range(opt.k, 0, ContinuantCache::kDefaultMaxK, "--poly " + opt.poly);
        if (opt.poly == "C") p = combinatorial_C(opt.k);
        if (opt.poly == "D") p = combinatorial_D(opt.k);
        if (opt.poly == "G") p = combinatorial_G(opt.k);
        if (opt.poly == "H") p = combinatorial_H(opt.k);
    }
    if (opt.format == "json")
        emit(opt, to_json(p).dump() + "\n");
    else
        emit(opt, p.str() + "\n");
    return 0;
}

int run_enumerate(const Options& opt) {
    std::string payload;
    if (opt.family == "C" || opt.family == "D") {
        check_k_range(opt.k, 0, 30, "--family " + opt.family);
        auto members =
            enumerate_seq_family(opt.family == "C" ? SeqFamily::C : SeqFamily::D, opt.k);
        if (opt.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& seq : members) j.push_back(seq);
            payload = j.dump() + "\n";
        } else {
            for (const auto& seq : members) {
                for (std::size_t i = 0; i < seq.size(); ++i)
                    payload += (i ? " " : "") + std::to_string(seq[i]);
                payload += '\n';
            }
        }
    } else {
        int cap = opt.family == "R" ? 16 : 24;
        check_k_range(opt.k, 0, cap, "--family " + opt.family);
        auto members = enumerate_family(monomial_family_from_name(opt.family), opt.k);
        if (opt.format == "json") {
            nlohmann::json j = nlohmann::json::array();
            for (const Monomial& m : members) {
                nlohmann::json word = nlohmann::json::array();
                for (const Generator& g : m.word()) word.push_back(g.str());
                j.push_back({{"index", m.index_vector()}, {"word", word}});
            }
            payload = j.dump() + "\n";
        } else {
            for (const Monomial& m : members) payload += m.str() + '\n';
        }
    }
    emit(opt, payload);
    return 0;
}

std::string report_line(const VerificationReport& rep) {
    std::string line = rep.identity + ": " + (rep.verified ? "verified" : "FAILED") +
                       " k=[" + std::to_string(rep.k_min) + "," +
                       std::to_string(rep.k_max) + "]";
    if (rep.first_failure)
        line += " first failure at k=" + std::to_string(rep.first_failure->k) +
                " lhs=" + rep.first_failure->lhs + " rhs=" + rep.first_failure->rhs;
    return line + "\n";
}

int run_verify(const Options& opt) {
    int kmax = parsed_kmax(opt.kmax);
    std::vector<VerificationReport> reports;
    if (opt.identity == "all")
        reports = verify_all(kmax);
    else
        reports.push_back(verify_identity(opt.identity, kmax));
    std::string payload;
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rep : reports) j.push_back(to_json(rep));
        payload = j.dump() + "\n";
    } else {
        for (const auto& rep : reports) payload += report_line(rep);
    }
    emit(opt, payload);
    for (const auto& rep : reports)
        if (!rep.verified) return 1;
    return 0;
}

int run_sequence(const Options& opt) {
    std::vector<Int> values = sequence(opt.sequence_name, opt.nmax);
    std::string payload;
    if (opt.format == "json") {
        nlohmann::json vals = nlohmann::json::array();
        for (const Int& v : values) vals.push_back(v.str());
        payload = nlohmann::json{{"name", opt.sequence_name}, {"values", vals}}.dump() + "\n";
    } else {
        for (std::size_t i = 0; i < values.size(); ++i)
            payload += (i ? ", " : "") + values[i].str();
        payload += '\n';
    }
    emit(opt, payload);
    return 0;
}

int run_report(const Options& opt) {
    std::vector<VerificationReport> reports = verify_all(parsed_kmax(opt.kmax));
    std::string payload;
    int failed = 0;
    for (const auto& rep : reports) failed += rep.verified ? 0 : 1;
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& rep : reports) j.push_back(to_json(rep));
        payload = j.dump() + "\n";
    } else {
        for (const auto& rep : reports) payload += report_line(rep);
        payload += std::to_string(reports.size()) + " identities: " +
                   std::to_string(reports.size() - failed) + " verified, " +
                   std::to_string(failed) + " failed\n";
    }
    emit(opt, payload);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continuants of three-limit continued fractions"};
    app.require_subcommand(1);
    Options opt;

    auto* compute = app.add_subcommand("compute", "compute a continuant polynomial");
    compute->add_option("--poly", opt.poly, "polynomial sequence")
        ->required()
        ->check(CLI::IsMember({"A", "B", "P", "Q", "R", "C", "D", "G", "H"}));
    compute->add_option("--k", opt.k, "index")->required();
    compute->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", opt.out, "write output to a file");

    auto* enumerate = app.add_subcommand("enumerate", "list a monomial or sequence family");
    enumerate->add_option("--family", opt.family, "family name")
        ->required()
        ->check(CLI::IsMember({"A", "R", "U", "V", "C", "D"}));
    enumerate->add_option("--k", opt.k, "index")->required();
    enumerate->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("--out", opt.out, "write output to a file");

    auto* verify = app.add_subcommand("verify", "check identities exactly");
    verify->add_option("--identity", opt.identity, "identity name or 'all'")->required();
    verify->add_option("--kmax", opt.kmax, "k range bound or 'default'");
    verify->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", opt.out, "write output to a file");

    auto* seq = app.add_subcommand("sequence", "emit a counting sequence");
    seq->add_option("--sequence", opt.sequence_name, "sequence name")->required();
    seq->add_option("--nmax", opt.nmax, "last index")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    seq->add_option("--out", opt.out, "write output to a file");

    auto* report = app.add_subcommand("report", "run every identity and summarize");
    report->add_option("--kmax", opt.kmax, "k range bound or 'default'");
    report->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    report->add_option("--out", opt.out, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (verify->parsed()) return run_verify(opt);
        if (seq->parsed()) return run_sequence(opt);
        return run_report(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
