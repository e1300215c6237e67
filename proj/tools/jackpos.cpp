// jackpos: compute Jack and interpolation polynomials, export binomial
// tables, and run the verification sweeps.
//
// Exit codes: 0 success, 1 counterexample found, 2 malformed input,
// 3 unsupported range, 4 I/O failure.

#include "jackpos/errors.hpp"
#include "jackpos/interp.hpp"
#include "jackpos/positivity.hpp"
#include "jackpos/sympoly.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jackpos;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitRange = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 70;

constexpr int kMaxDegree = 8;
constexpr int kMaxVars = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string kind;
    std::string shape, lambda, mu;
    std::string claim;
    int n = -1;
    int d = -1;
    bool monic = false;
    std::string format;  // empty: csv for table, text otherwise
    std::string output;
    std::string tau;
    std::string grid = "dense";
    bool serial = false;
    unsigned threads = 0;
};

unsigned workers(const Config& c) { return c.serial ? 1 : c.threads; }

void check_bounds(const Config& c) {
    if (c.n < 1 || c.n > kMaxVars)
        throw UnsupportedRange("n must be in 1.." + std::to_string(kMaxVars) + ", got " + std::to_string(c.n));
    if (c.d < 0 || c.d > kMaxDegree)
        throw UnsupportedRange("d must be in 0.." + std::to_string(kMaxDegree) + ", got " + std::to_string(c.d));
}

// Relative paths land in $JACKPOS_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("JACKPOS_OUTPUT_DIR"); dir && *dir && p.is_relative())
        p = std::filesystem::path(dir) / p;
    return p;
}

void emit(const Config& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    auto path = resolve_output(c.output);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

nlohmann::json coeffs_json(const CoeffMap& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [nu, v] : m) arr.push_back({{"partition", nu.parts()}, {"coeff", v.to_string()}});
    return arr;
}

std::string coeffs_text(const CoeffMap& m) {
    std::ostringstream os;
    for (const auto& [nu, v] : m) os << nu.to_string() << ": " << v.to_string() << "\n";
    return os.str();
}

std::string render(const Config& c, const nlohmann::json& j, const std::string& text) {
    if (c.format == "json") return j.dump(2) + "\n";
    return text;
}

int cmd_compute(const Config& c) {
    if (c.n < 1) throw UnsupportedRange("n must be positive");
    const int n = c.n;
    if (c.kind == "schur" || c.kind == "jack") {
        Partition shape = parse_partition(c.shape);
        if (shape.length() > n) throw UnsupportedRange("shape has more than n parts");
        SymPoly f = c.kind == "schur" ? schur(shape, n) : jack(shape, n);
        emit(c, render(c, to_json(f), f.to_string() + "\n"));
    } else if (c.kind == "interp") {
        Partition shape = parse_partition(c.shape);
        auto h = interp_linear(shape, n, c.monic ? Normalization::monic : Normalization::unital);
        nlohmann::json j{{"shape", shape.parts()},
                         {"n", n},
                         {"normalization", c.monic ? "monic" : "unital"},
                         {"poly", to_json(h.poly)}};
        emit(c, render(c, j, h.poly.to_string() + "\n"));
    } else if (c.kind == "binomial") {
        Partition lambda = parse_partition(c.lambda), mu = parse_partition(c.mu);
        if (mu.length() > n) throw UnsupportedRange("mu has more than n parts");
        RatFun v = binomial(lambda, mu, n);
        nlohmann::json j{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"n", n}, {"value", v.to_string()}};
        emit(c, render(c, j, v.to_string() + "\n"));
    } else {  // expansion
        Partition lambda = parse_partition(c.lambda);
        nlohmann::json j{{"lambda", lambda.parts()}, {"n", n}};
        CoeffMap m;
        if (c.mu.empty()) {
            m = shifted_expansion(lambda, n).coeffs;
        } else {
            Partition mu = parse_partition(c.mu);
            j["mu"] = mu.parts();
            m = difference_expansion(lambda, mu, n);
        }
        j["coeffs"] = coeffs_json(m);
        emit(c, render(c, j, coeffs_text(m)));
    }
    return 0;
}

VerificationReport run_claim(const Config& c) {
    const unsigned w = workers(c);
    const Grid grid = parse_grid(c.grid);
    const auto& claim = c.claim;
    if (claim == "thm1") return verify_thm1(c.d, c.n, c.tau.empty() ? default_thm1_taus() : parse_tau_list(c.tau), w);
    if (claim == "thm2") return monotonicity_check(c.d, c.n, w);
    if (claim == "extra-vanishing") return extra_vanishing_check(c.d, c.n, w);
    if (claim == "positivity") return positivity_check(c.d, c.n, w);
    if (claim == "binomial-formula") return verify_binomial_formula(c.d, c.n, w);
    if (claim == "powersum") return verify_powersum(c.d, c.n, w);
    if (claim == "cgs") return verify_cgs(c.d, c.n, grid, w);
    if (claim == "kt") return verify_kt(c.d, c.n, grid, w);
    if (claim == "cor-kt") return verify_corKT(c.d, c.n, grid, w);
    auto taus = c.tau.empty() ? default_probe_taus() : parse_tau_list(c.tau);
    if (claim == "conj-cgs") return verify_conj_cgs(c.d, c.n, taus, grid, w);
    return verify_conj_kt(c.d, c.n, taus, grid, w);
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    const bool probe = r.note.find("sampling probe") != std::string::npos;
    os << r.claim << " " << r.bounds.dump() << ": ";
    if (r.pass)
        os << (probe ? "no counterexample found (sampling probe)" : "pass");
    else
        os << "FAIL, " << r.counterexamples.size() << " counterexample(s)";
    os << "\n";
    constexpr std::size_t kShown = 10;
    for (std::size_t i = 0; i < std::min(kShown, r.counterexamples.size()); ++i)
        os << "  " << r.counterexamples[i].dump() << "\n";
    if (r.counterexamples.size() > kShown) os << "  ...\n";
    if (!r.stats.empty()) os << "stats: " << r.stats.dump() << "\n";
    return os.str();
}

int cmd_verify(const Config& c) {
    check_bounds(c);
    VerificationReport r = run_claim(c);
    emit(c, c.format == "json" ? to_json(r).dump(2) + "\n" : report_text(r));
    return r.pass ? 0 : kExitCounterexample;
}

int cmd_table(const Config& c) {
    check_bounds(c);
    auto table = binomial_table(c.d, c.n, workers(c));
    emit(c, c.format == "json" ? to_json(table).dump(2) + "\n" : to_csv(table));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jack polynomials, interpolation polynomials and binomial positivity"};
    app.require_subcommand(1);
    Config cfg;

    auto add_output = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--output,-o", cfg.output, "Output file (relative to $JACKPOS_OUTPUT_DIR if set)");
    };

    auto* compute = app.add_subcommand("compute", "Compute and print one object");
    compute->add_option("kind", cfg.kind, "schur | jack | interp | binomial | expansion")
        ->required()
        ->check(CLI::IsMember({"schur", "jack", "interp", "binomial", "expansion"}));
    compute->add_option("--shape", cfg.shape, "Partition, e.g. 3,2");
    compute->add_option("--lambda", cfg.lambda, "Partition lambda");
    compute->add_option("--mu", cfg.mu, "Partition mu");
    compute->add_option("-n", cfg.n, "Number of variables")->required();
    compute->add_flag("--monic", cfg.monic, "Monic normalization for interp (default unital)");
    add_output(compute, {"text", "json"});

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("claim", cfg.claim)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "extra-vanishing", "positivity", "binomial-formula", "powersum", "cgs",
                               "kt", "cor-kt", "conj-cgs", "conj-kt"}));
    verify->add_option("-d", cfg.d, "Degree bound")->required();
    verify->add_option("-n", cfg.n, "Number of variables")->required();
    verify->add_option("--tau", cfg.tau, "Comma-separated t samples, e.g. 0,1/2,1,2,inf");
    verify->add_option("--grid", cfg.grid, "basic | dense | comma-separated values")->capture_default_str();
    verify->add_flag("--serial", cfg.serial, "Run on one thread");
    verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    add_output(verify, {"text", "json"});

    auto* table = app.add_subcommand("table", "Export the binomial table");
    table->add_option("-d", cfg.d, "Degree bound")->required();
    table->add_option("-n", cfg.n, "Number of variables")->required();
    table->add_flag("--serial", cfg.serial, "Run on one thread");
    table->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    add_output(table, {"csv", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (cfg.format.empty()) cfg.format = table->parsed() ? "csv" : "text";

    try {
        if (compute->parsed()) return cmd_compute(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return cmd_table(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const UnsupportedRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRange;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
