#include "jackpos/cone.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/interp.hpp"
#include "jackpos/positivity.hpp"
#include "jackpos/sympoly.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jackpos;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

Partition part(const std::vector<int>& v) { return Partition(v); }

nlohmann::json coeff_list(const CoeffMap& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [nu, c] : m) arr.push_back({{"partition", nu.parts()}, {"coeff", c.to_string()}});
    return arr;
}

VerificationReport run_verify(const std::string& claim, int d, int n, const std::string& tau,
                              const std::string& grid_spec, unsigned threads) {
    const Grid grid = parse_grid(grid_spec);
    if (claim == "thm1") return verify_thm1(d, n, tau.empty() ? default_thm1_taus() : parse_tau_list(tau), threads);
    if (claim == "thm2") return monotonicity_check(d, n, threads);
    if (claim == "extra-vanishing") return extra_vanishing_check(d, n, threads);
    if (claim == "positivity") return positivity_check(d, n, threads);
    if (claim == "binomial-formula") return verify_binomial_formula(d, n, threads);
    if (claim == "powersum") return verify_powersum(d, n, threads);
    if (claim == "cgs") return verify_cgs(d, n, grid, threads);
    if (claim == "kt") return verify_kt(d, n, grid, threads);
    if (claim == "cor-kt") return verify_corKT(d, n, grid, threads);
    auto taus = tau.empty() ? default_probe_taus() : parse_tau_list(tau);
    if (claim == "conj-cgs") return verify_conj_cgs(d, n, taus, grid, threads);
    if (claim == "conj-kt") return verify_conj_kt(d, n, taus, grid, threads);
    throw ParseError("unknown claim '" + claim + "'");
}

}  // namespace

PYBIND11_MODULE(_jackpos, m) {
    m.doc() = "Exact Jack and interpolation polynomial computations";

    py::register_exception<UnsupportedRange>(m, "UnsupportedRange", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("contains", [](const std::vector<int>& a, const std::vector<int>& b) { return contains(part(a), part(b)); });
    m.def("dominates", [](const std::vector<int>& a, const std::vector<int>& b) { return dominates(part(a), part(b)); });
    m.def("weakly_dominates",
          [](const std::vector<int>& a, const std::vector<int>& b) { return weakly_dominates(part(a), part(b)); });

    m.def("schur", [](const std::vector<int>& shape, int n) { return dump(to_json(schur(part(shape), n))); });
    m.def("jack", [](const std::vector<int>& shape, int n) { return dump(to_json(jack(part(shape), n))); });
    m.def(
        "interp",
        [](const std::vector<int>& shape, int n, bool monic) {
            auto h = interp_linear(part(shape), n, monic ? Normalization::monic : Normalization::unital);
            return dump(to_json(h.poly));
        },
        py::arg("shape"), py::arg("n"), py::arg("monic") = false);
    m.def("interp_tableau",
          [](const std::vector<int>& shape, int n) { return dump(to_json(interp_tableau(part(shape), n).poly)); });
    m.def("sympoly_normalize", [](const std::string& text) {
        return dump(to_json(sympoly_from_json(nlohmann::json::parse(text))));
    });

    m.def("binomial", [](const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
        return binomial(part(lambda), part(mu), n).to_string();
    });
    m.def("h_normalizer", [](const std::vector<int>& nu, int n) { return h_normalizer(part(nu), n).to_string(); });
    m.def("shifted_expansion",
          [](const std::vector<int>& lambda, int n) { return dump(coeff_list(shifted_expansion(part(lambda), n).coeffs)); });
    m.def("difference_expansion", [](const std::vector<int>& lambda, const std::vector<int>& mu, int n) {
        return dump(coeff_list(difference_expansion(part(lambda), part(mu), n)));
    });

    m.def("ratfun_normalize", [](const std::string& text) { return parse_ratfun(text).to_string(); });
    m.def("ratfun_eval", [](const std::string& text, const std::string& t0) {
        return to_string(eval_at(parse_ratfun(text), parse_rational(t0)));
    });
    m.def("cone_member", [](const std::string& text) { return std::string(to_string(cone_member(parse_ratfun(text), false).cls)); });

    m.def("binomial_table_csv", [](int d, int n) { return to_csv(binomial_table(d, n)); });
    m.def("binomial_table_json", [](int d, int n) { return dump(to_json(binomial_table(d, n))); });

    m.def(
        "verify",
        [](const std::string& claim, int d, int n, const std::string& tau, const std::string& grid, unsigned threads) {
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = run_verify(claim, d, n, tau, grid, threads);
            }
            return dump(to_json(r));
        },
        py::arg("claim"), py::arg("d"), py::arg("n"), py::arg("tau") = "", py::arg("grid") = "dense",
        py::arg("threads") = 0);
}
