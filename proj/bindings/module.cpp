#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steenrod2/action.hpp"
#include "steenrod2/bar.hpp"
#include "steenrod2/invariants.hpp"
#include "steenrod2/lannes.hpp"
#include "steenrod2/opeval.hpp"
#include "steenrod2/qform.hpp"
#include "steenrod2/steenrod.hpp"
#include "steenrod2/verify.hpp"

namespace py = pybind11;
using namespace st2;

namespace {

OperationClass make_class(const std::string& psi) {
    return OperationClass::make(k2_context(), parse_class(psi));
}

py::dict class_dict(const FormClass& c) {
    py::dict d;
    d["rank"] = c.rank;
    d["defective"] = c.defective;
    d["arf"] = c.arf ? py::object(py::int_(*c.arf)) : py::object(py::none());
    d["representative"] = c.representative.str();
    d["label"] = c.label();
    return d;
}

}  // namespace

PYBIND11_MODULE(_steenrod2, m) {
    m.doc() = "Exact mod-2 Steenrod algebra computations";

    py::register_exception<resource_error>(m, "ResourceError");

    m.def(
        "sq",
        [](long long k, const std::string& poly, int nvars) {
            return st2::sq(k, parse_poly(form_algebra(nvars), poly)).str();
        },
        py::arg("k"), py::arg("poly"), py::arg("nvars") = 2,
        "Sq^k on a polynomial in degree-1 variables");

    m.def(
        "milnor_q",
        [](int i, const std::string& poly, int nvars) {
            return st2::milnor_q(i, parse_poly(form_algebra(nvars), poly)).str();
        },
        py::arg("i"), py::arg("poly"), py::arg("nvars") = 2,
        "Milnor primitive Q_i on a polynomial in degree-1 variables");

    m.def(
        "adem",
        [](const std::string& word) { return wordsum_str(adem_normalize(parse_word(word))); },
        py::arg("word"), "admissible normal form of a Steenrod word, e.g. 'Sq^2 Sq^2'");

    m.def(
        "serre_generators",
        [](int n, long long cap) {
            KnContext ctx(n, cap);
            std::vector<py::dict> out;
            for (std::size_t v = 0; v < ctx.algebra()->size(); ++v) {
                py::dict d;
                d["name"] = ctx.algebra()->var(static_cast<int>(v)).name;
                d["degree"] = ctx.algebra()->var(static_cast<int>(v)).degree;
                d["word"] = word_str(ctx.generator_word(static_cast<int>(v)));
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("n"), py::arg("max_degree") = 20, "polynomial generators of H*(K_n)");

    m.def(
        "evaluate",
        [](const std::string& psi, const std::string& form, int dim) {
            return st2::evaluate(make_class(psi), parse_form(dim, form)).str();
        },
        py::arg("psi"), py::arg("form"), py::arg("dim") = 2,
        "evaluate a class of H*(K_2) (aliases d2, h2) on a quadratic form");

    m.def(
        "kernel",
        [](const std::string& psi, int dim) {
            std::vector<std::string> out;
            for (const QForm& q : kernel_set(make_class(psi), dim)) out.push_back(q.str());
            return out;
        },
        py::arg("psi"), py::arg("dim") = 2, "forms on V_n annihilated by the class");

    m.def(
        "classify_form",
        [](const std::string& form, int dim) { return class_dict(classify(parse_form(dim, form))); },
        py::arg("form"), py::arg("dim") = 2, "GL-orbit invariants of a quadratic form");

    m.def(
        "census",
        [](int dim) {
            std::vector<py::dict> out;
            for (const auto& [c, size] : orbit_census(dim)) {
                py::dict d = class_dict(c);
                d["orbit_size"] = size;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("dim") = 2, "GL-orbit census of quadratic forms on V_n");

    m.def(
        "dickson_dims",
        [](long long cap) { return subalgebra_dims(form_algebra(2), dickson_generators(), cap); },
        py::arg("max_degree") = 15, "graded dims of the rank-2 Dickson algebra");

    m.def(
        "subalgebra_dims",
        [](const std::vector<std::string>& gens, int nvars, long long cap) {
            AlgebraPtr a = form_algebra(nvars);
            std::vector<Poly> ps;
            for (const auto& g : gens) ps.push_back(parse_poly(a, g));
            return st2::subalgebra_dims(a, ps, cap);
        },
        py::arg("generators"), py::arg("nvars") = 2, py::arg("max_degree") = 12,
        "graded dims of the subalgebra generated by homogeneous polynomials");

    m.def("m2_dims", &st2::m2_dims, py::arg("max_degree") = 12,
          "graded dims of the fiber product of D(2) and H_2 over F_2[u]");

    m.def("ext_witness_dims", &st2::ext_witness_dims, py::arg("max_degree") = 12,
          "graded dims of F_2[u]/F_2[u^2]");

    m.def(
        "norm_check",
        [](long long cap) {
            std::vector<py::dict> out;
            for (const auto& r : norm_sequence_check(cap)) {
                py::dict d;
                d["degree"] = r.degree;
                d["kernel_is_symmetric_algebra"] = r.kernel_is_symmetric_algebra;
                d["quotient_dim"] = r.quotient_dim;
                d["parity_ok"] = r.parity_ok;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("max_degree") = 12, "norm sequence of the swap action on F_2[u,v]");

    m.def("tv_f_dims", &tv_F_dims, py::arg("p"), py::arg("n"), py::arg("max_degree"),
          "degreewise dims of T_V(F(p))");
    m.def("tv_hk_degree0", &tv_HK_degree0, py::arg("p"), py::arg("n"),
          "dim of the degree-0 Boolean algebra of T_V(H*(K_p))");
    m.def(
        "l2_zero_dim",
        [](const std::string& psi, int n) { return st2::l2_zero_dim(make_class(psi), n); },
        py::arg("psi"), py::arg("n"), "Boolean dimension of the kernel fiber of the class");

    m.def(
        "tor",
        [](const py::object& psi, int p, long long D, long long S) {
            TorTable table;
            if (psi.is_none()) {
                table = bar_tor(p, nullptr, D, S);
            } else {
                OperationClass c = make_class(psi.cast<std::string>());
                table = bar_tor(p, &c, D, S);
            }
            py::dict out;
            for (const auto& [st, dim] : table.dims)
                out[py::make_tuple(st.first, st.second)] = dim;
            return out;
        },
        py::arg("psi"), py::arg("p"), py::arg("max_degree") = 12, py::arg("columns") = 3,
        "bar-complex Tor dims keyed by (s, t); psi=None uses the trivial module");

    m.def(
        "loop_check",
        [](int p, long long D, long long n_max) {
            auto r = loop_collapse_check(p, D, n_max);
            py::dict d;
            d["ok"] = r.ok;
            d["totals"] = r.totals;
            d["expected"] = r.expected;
            return d;
        },
        py::arg("p"), py::arg("max_degree"), py::arg("n_max"),
        "path-loop fibration collapse oracle");

    m.def(
        "search",
        [](long long p_max, const std::string& form, int gen_dim, int n_max) {
            FormGenerators gens{{gen_dim, parse_form(gen_dim, form)}};
            std::vector<std::string> out;
            for (const Poly& h : search_classes(p_max, gens, n_max)) out.push_back(h.str());
            return out;
        },
        py::arg("max_degree"), py::arg("form"), py::arg("gen_dim") = 2, py::arg("n_max") = 2,
        "monomial classes whose kernel matches the closure of the given form");

    m.def(
        "verify",
        [](std::uint64_t seed) {
            std::vector<py::dict> out;
            for (const auto& r : run_acceptance(seed)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("seed") = 12345, "run the full verification suite");
}
