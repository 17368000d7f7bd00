#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "autoseq/catalog.hpp"
#include "autoseq/checks.hpp"
#include "autoseq/io.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/morphisms.hpp"
#include "autoseq/numeration.hpp"

namespace py = pybind11;
using namespace autoseq;

namespace {

SequencePrefix source(const std::string& name) {
    return [name](std::size_t n) { return catalog::prefix(name, n); };
}

Dfao builtin_dfao(const std::string& name) {
    if (name == "d") return catalog::period_doubling_dfao();
    if (name == "u") return catalog::inverse_period_doubling_dfao();
    if (name == "x") return catalog::fibonacci_indicator_dfao();
    if (name == "LF") return catalog::fibonacci_language_dfa().machine();
    if (name == "Lprime") return catalog::language_l_prime().machine();
    if (name == "La") return catalog::language_la().machine();
    if (name == "La1") return catalog::language_la1().machine();
    if (name == "La2") return catalog::language_la2().machine();
    throw std::invalid_argument("no built-in automaton named \"" + name + "\"");
}

NumerationSystem numeration(const std::string& system) {
    if (system == "zeckendorf") return NumerationSystem::zeckendorf();
    if (system.rfind("base", 0) == 0) return NumerationSystem::base(static_cast<unsigned>(std::stoul(system.substr(4))));
    throw std::invalid_argument("numeration system must be \"zeckendorf\" or \"base<k>\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "C++ core of autoseq";

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init([](std::uint32_t p, const std::vector<std::int64_t>& coeffs) {
                 return TruncatedSeries::from_integers(p, coeffs);
             }),
             py::arg("p"), py::arg("coeffs"))
        .def_property_readonly("p", &TruncatedSeries::modulus)
        .def_property_readonly("coeffs",
                               [](const TruncatedSeries& s) {
                                   return std::vector<Residue>(s.coefficients().begin(), s.coefficients().end());
                               })
        .def("__len__", &TruncatedSeries::precision)
        .def("__getitem__",
             [](const TruncatedSeries& s, std::size_t i) {
                 if (i >= s.precision()) throw py::index_error();
                 return s[i];
             })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); })
        .def("__add__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; })
        .def("__sub__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a - b; })
        .def("valuation", &TruncatedSeries::valuation)
        .def("frobenius", &TruncatedSeries::frobenius, py::arg("i"))
        .def("__repr__", [](const TruncatedSeries& s) {
            return "Series(p=" + std::to_string(s.modulus()) + ", precision=" + std::to_string(s.precision()) + ")";
        });

    m.def("reversion", &reversion, py::arg("series"));
    m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
    m.def(
        "relation_search_json",
        [](const TruncatedSeries& s, unsigned depth, unsigned degree) -> std::optional<std::string> {
            const auto r = power_relation_search(s, depth, degree);
            if (!r) return std::nullopt;
            return io::relation_to_json(r->normalized()).dump();
        },
        py::arg("series"), py::arg("depth"), py::arg("degree"));

    m.def("sequence_names", [] {
        std::vector<std::string> names;
        for (const auto& s : catalog::sequences()) names.push_back(s.name);
        return names;
    });
    m.def("prefix", &catalog::prefix, py::arg("name"), py::arg("n"));
    m.def("term", &catalog::term, py::arg("name"), py::arg("n"));
    m.def("bfile", &catalog::bfile, py::arg("name"), py::arg("n"), py::arg("offset") = 0);
    m.def(
        "cross_check",
        [](const std::string& name, std::size_t n) {
            const auto r = catalog::cross_check(name, n);
            py::dict d;
            d["name"] = r.name;
            d["horizon"] = r.horizon;
            d["checks"] = r.checks;
            d["pass"] = r.pass();
            if (r.mismatch) {
                py::dict mm;
                mm["check"] = r.mismatch->check;
                mm["index"] = r.mismatch->index;
                mm["values"] = r.mismatch->values;
                d["mismatch"] = mm;
            } else {
                d["mismatch"] = py::none();
            }
            return d;
        },
        py::arg("name"), py::arg("n"));

    m.def("dfao_json", [](const std::string& name) { return io::dfao_to_json(builtin_dfao(name)).dump(); },
          py::arg("name"));
    m.def(
        "dfao_eval",
        [](const std::string& dfao_json, std::uint64_t n, const std::string& system) {
            return eval(io::dfao_from_json(io::Json::parse(dfao_json)), n, numeration(system));
        },
        py::arg("dfao_json"), py::arg("n"), py::arg("system") = "base2");
    m.def(
        "dfao_dot", [](const std::string& dfao_json) { return to_dot(io::dfao_from_json(io::Json::parse(dfao_json))); },
        py::arg("dfao_json"));
    m.def(
        "minimize_json",
        [](const std::string& dfao_json) {
            return io::dfao_to_json(minimize(io::dfao_from_json(io::Json::parse(dfao_json)))).dump();
        },
        py::arg("dfao_json"));
    m.def(
        "count_lengths",
        [](const std::string& language, std::size_t max_length) {
            std::vector<std::string> out;
            for (const auto& c : count_lengths(Dfa(builtin_dfao(language)), max_length)) out.push_back(c.str());
            return out;
        },
        py::arg("language"), py::arg("max_length"));
    m.def(
        "rep", [](const std::string& system, std::uint64_t n) { return word_to_string(numeration(system).rep(n)); },
        py::arg("system"), py::arg("n"));

    m.def(
        "kernel_report_json",
        [](const std::string& name, unsigned k, unsigned depth, std::size_t horizon) {
            py::gil_scoped_release release;
            const Kernel kernel = compute_kernel(source(name), k, depth, horizon);
            const RankProfile prof = rank_profile(source(name), k, depth, horizon);
            return io::kernel_report(name, kernel, prof).dump();
        },
        py::arg("name"), py::arg("k") = 2, py::arg("depth") = 10, py::arg("horizon") = 512);
    m.def(
        "synthesize_dfao_json",
        [](const std::vector<std::int64_t>& terms, unsigned k, unsigned depth, std::size_t horizon) {
            return io::dfao_to_json(synthesize_dfao(compute_kernel(terms, k, depth, horizon))).dump();
        },
        py::arg("terms"), py::arg("k") = 2, py::arg("depth") = 10, py::arg("horizon") = 512);

    m.def(
        "fixed_point",
        [](const std::string& text, std::size_t n) {
            const MorphismText mt = parse_morphism(text);
            if (!mt.seed) throw std::invalid_argument("morphism text needs a \"seed\" line");
            const Alphabet& a = mt.morphism.domain();
            std::vector<std::string> out;
            for (Letter l : fixed_point_prefix(mt.morphism, a.index_of(*mt.seed), n)) out.push_back(a.name(l));
            return out;
        },
        py::arg("text"), py::arg("n"));
    m.def(
        "pf_eigenvalue",
        [](const std::vector<std::vector<std::uint64_t>>& matrix) {
            const PfEigenvalue e = pf_eigenvalue(IncidenceMatrix{matrix});
            return py::make_tuple(e.value, e.exact ? py::cast(e.exact->to_string()) : py::none());
        },
        py::arg("matrix"));

    m.def("check_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : check_catalog()) ids.push_back(c.id);
        return ids;
    });
    m.def(
        "run_checks_json",
        [](const std::vector<std::string>& ids, const std::map<std::string, std::size_t>& horizons, unsigned jobs) {
            py::gil_scoped_release release;
            return io::check_report(run_checks(ids, horizons, jobs)).dump();
        },
        py::arg("ids") = std::vector<std::string>{}, py::arg("horizons") = std::map<std::string, std::size_t>{},
        py::arg("jobs") = 1);
}
