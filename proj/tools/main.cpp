#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "steenrod2/action.hpp"
#include "steenrod2/bar.hpp"
#include "steenrod2/invariants.hpp"
#include "steenrod2/lannes.hpp"
#include "steenrod2/opeval.hpp"
#include "steenrod2/qform.hpp"
#include "steenrod2/steenrod.hpp"
#include "steenrod2/verify.hpp"

using json = nlohmann::json;
using namespace st2;

namespace {

constexpr int kSchemaVersion = 1;

json json_header(const std::string& command) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

json dims_json(const std::vector<long long>& dims) { return json(dims); }

std::string dims_text(const std::vector<long long>& dims) {
    std::string out;
    for (std::size_t d = 0; d < dims.size(); ++d)
        out += std::to_string(d) + ": " + std::to_string(dims[d]) + "\n";
    return out;
}

std::vector<Poly> split_polys(const AlgebraPtr& a, const std::string& text) {
    std::vector<Poly> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_poly(a, piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mod-2 computations: Steenrod actions, quadratic-form kernels, "
                 "invariant algebras and bar-complex Tor"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand name

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // sq
    auto* sq_cmd = app.add_subcommand("sq", "apply Sq^k to a polynomial in degree-1 variables");
    long long sq_k = 1;
    int sq_vars = 2;
    std::string sq_poly;
    sq_cmd->add_option("--k", sq_k, "the k in Sq^k")->required();
    sq_cmd->add_option("--vars", sq_vars, "number of degree-1 variables (u,v,w or x1..xn)");
    sq_cmd->add_option("--poly", sq_poly, "polynomial, e.g. \"u*v + v^2\"")->required();

    // milnor
    auto* milnor_cmd = app.add_subcommand("milnor", "apply the Milnor primitive Q_i");
    int milnor_i = 0;
    int milnor_vars = 2;
    std::string milnor_poly;
    milnor_cmd->add_option("--i", milnor_i, "the i in Q_i")->required();
    milnor_cmd->add_option("--vars", milnor_vars, "number of degree-1 variables");
    milnor_cmd->add_option("--poly", milnor_poly, "polynomial")->required();

    // adem
    auto* adem_cmd = app.add_subcommand("adem", "admissible normal form of a Steenrod word");
    std::string adem_word;
    adem_cmd->add_option("--word", adem_word, "word, e.g. \"Sq^1 Sq^1\"")->required();

    // serre-basis
    auto* serre_cmd = app.add_subcommand("serre-basis", "polynomial generators of H*(K_n)");
    int serre_n = 2;
    long long serre_cap = 20;
    serre_cmd->add_option("--n", serre_n, "the n in K(Z/2, n)")->required();
    serre_cmd->add_option("--max-degree", serre_cap, "degree cap");

    // eval-op
    auto* eval_cmd = app.add_subcommand("eval-op", "evaluate a class of H*(K_2) on a quadratic form");
    std::string eval_psi, eval_form;
    int eval_dim = 2;
    eval_cmd->add_option("--psi", eval_psi, "class expression (aliases d2, h2)")->required();
    eval_cmd->add_option("--form", eval_form, "quadratic form, e.g. \"u*v\"")->required();
    eval_cmd->add_option("--dim", eval_dim, "number of variables of the form");

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "forms on V_n annihilated by a class");
    std::string kernel_psi;
    int kernel_dim = 2;
    kernel_cmd->add_option("--psi", kernel_psi, "class expression")->required();
    kernel_cmd->add_option("--dim", kernel_dim, "dimension n");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "GL-orbit invariants of a quadratic form");
    std::string classify_form;
    int classify_dim = 2;
    classify_cmd->add_option("--form", classify_form, "quadratic form")->required();
    classify_cmd->add_option("--dim", classify_dim, "dimension n");

    // census
    auto* census_cmd = app.add_subcommand("census", "GL-orbit census of quadratic forms on V_n");
    int census_dim = 2;
    census_cmd->add_option("--dim", census_dim, "dimension n");

    // dickson
    auto* dickson_cmd = app.add_subcommand("dickson", "triple oracle for the rank-2 Dickson algebra");
    long long dickson_cap = 15;
    dickson_cmd->add_option("--max-degree", dickson_cap, "degree cap");

    // subalgebra
    auto* sub_cmd = app.add_subcommand("subalgebra", "graded dims of a generated subalgebra");
    std::string sub_gens;
    int sub_vars = 2;
    long long sub_cap = 12;
    sub_cmd->add_option("--gens", sub_gens, "';'-separated homogeneous generators")->required();
    sub_cmd->add_option("--vars", sub_vars, "number of degree-1 variables");
    sub_cmd->add_option("--max-degree", sub_cap, "degree cap");

    // m2
    auto* m2_cmd = app.add_subcommand("m2", "graded dims of the fiber product of D(2) and H_2");
    long long m2_cap = 12;
    m2_cmd->add_option("--max-degree", m2_cap, "degree cap");

    // norm-check
    auto* norm_cmd = app.add_subcommand("norm-check", "norm sequence of the swap action on F_2[u,v]");
    long long norm_cap = 12;
    norm_cmd->add_option("--max-degree", norm_cap, "degree cap");

    // tv
    auto* tv_cmd = app.add_subcommand("tv", "T-functor dimension bookkeeping for F(p)");
    long long tv_p = 2;
    int tv_n = 1;
    long long tv_cap = 10;
    tv_cmd->add_option("--p", tv_p, "the p in F(p)")->required();
    tv_cmd->add_option("--dim", tv_n, "dim V");
    tv_cmd->add_option("--max-degree", tv_cap, "degree cap");

    // tor
    auto* tor_cmd = app.add_subcommand("tor", "bar-complex Tor over H*(K_p)");
    std::string tor_psi;
    int tor_p = 4;
    long long tor_D = 12, tor_S = 3;
    tor_cmd->add_option("--psi", tor_psi, "class expression; omit for the trivial module");
    tor_cmd->add_option("--p", tor_p, "base degree p")->required();
    tor_cmd->add_option("--bar-degree", tor_D, "internal degree cap");
    tor_cmd->add_option("--bar-columns", tor_S, "homological column cap");

    // loop-check
    auto* loop_cmd = app.add_subcommand("loop-check", "path-loop fibration collapse oracle");
    int loop_p = 2;
    long long loop_D = 14, loop_n = 12;
    loop_cmd->add_option("--p", loop_p, "base degree p");
    loop_cmd->add_option("--bar-degree", loop_D, "internal degree cap");
    loop_cmd->add_option("--max-degree", loop_n, "total-degree cap for the comparison");

    // search
    auto* search_cmd = app.add_subcommand("search", "monomial classes whose kernel matches a closure");
    std::string search_form;
    int search_gdim = 2, search_n = 2;
    long long search_p = 12;
    search_cmd->add_option("--gen-form", search_form, "generating form of the target closure")->required();
    search_cmd->add_option("--gen-dim", search_gdim, "dimension of the generating form");
    search_cmd->add_option("--dim", search_n, "closure compared through this dimension");
    search_cmd->add_option("--max-degree", search_p, "degree cap for candidate monomials");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    std::uint64_t seed = 12345;
    verify_cmd->add_option("--seed", seed, "seed for the randomized word sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sq_cmd) {
            Poly f = parse_poly(form_algebra(sq_vars), sq_poly);
            Poly out = sq(sq_k, f);
            json j = json_header("sq");
            j["result"] = out.str();
            emit(j, as_json, out.str() + "\n");
        } else if (*milnor_cmd) {
            Poly f = parse_poly(form_algebra(milnor_vars), milnor_poly);
            Poly out = milnor_q(milnor_i, f);
            json j = json_header("milnor");
            j["result"] = out.str();
            emit(j, as_json, out.str() + "\n");
        } else if (*adem_cmd) {
            WordSum nf = adem_normalize(parse_word(adem_word));
            json j = json_header("adem");
            j["result"] = wordsum_str(nf);
            emit(j, as_json, wordsum_str(nf) + "\n");
        } else if (*serre_cmd) {
            KnContext ctx(serre_n, serre_cap);
            json gens = json::array();
            std::string text;
            for (std::size_t v = 0; v < ctx.algebra()->size(); ++v) {
                const Variable& var = ctx.algebra()->var(static_cast<int>(v));
                std::string word = word_str(ctx.generator_word(static_cast<int>(v)));
                gens.push_back({{"name", var.name}, {"degree", var.degree}, {"word", word}});
                text += var.name + "  degree " + std::to_string(var.degree) + "  " + word + " iota_" +
                        std::to_string(serre_n) + "\n";
            }
            json j = json_header("serre-basis");
            j["generators"] = gens;
            emit(j, as_json, text);
        } else if (*eval_cmd) {
            OperationClass psi = OperationClass::make(k2_context(), parse_class(eval_psi));
            Poly out = evaluate(psi, parse_form(eval_dim, eval_form));
            json j = json_header("eval-op");
            j["result"] = out.str();
            emit(j, as_json, out.str() + "\n");
        } else if (*kernel_cmd) {
            OperationClass psi = OperationClass::make(k2_context(), parse_class(kernel_psi));
            auto forms = kernel_set(psi, kernel_dim);
            json list = json::array();
            std::string text;
            for (const QForm& q : forms) {
                list.push_back(q.str());
                text += q.str() + "\n";
            }
            json j = json_header("kernel");
            j["forms"] = list;
            j["count"] = forms.size();
            emit(j, as_json, text);
        } else if (*classify_cmd) {
            FormClass c = classify(parse_form(classify_dim, classify_form));
            json j = json_header("classify");
            j["rank"] = c.rank;
            j["defective"] = c.defective;
            if (c.arf) j["arf"] = *c.arf;
            j["representative"] = c.representative.str();
            j["label"] = c.label();
            std::string text = c.label() + "  representative " + c.representative.str() + "\n";
            emit(j, as_json, text);
        } else if (*census_cmd) {
            auto census = orbit_census(census_dim);
            json list = json::array();
            std::string text;
            for (const auto& [c, size] : census) {
                list.push_back({{"label", c.label()},
                                {"representative", c.representative.str()},
                                {"orbit_size", size}});
                text += c.label() + "  representative " + c.representative.str() + "  orbit size " +
                        std::to_string(size) + "\n";
            }
            json j = json_header("census");
            j["orbits"] = list;
            emit(j, as_json, text);
        } else if (*dickson_cmd) {
            auto fixed = invariant_ring_dims(gl_matrices(2), 2, dickson_cap);
            auto sub = subalgebra_dims(form_algebra(2), dickson_generators(), dickson_cap);
            std::vector<long long> free23;
            for (auto x : free_algebra_dims({2, 3}, dickson_cap)) free23.push_back(static_cast<long long>(x));
            bool ok = fixed == free23 && sub == free23;
            json j = json_header("dickson");
            j["fixed_space_dims"] = dims_json(fixed);
            j["closure_dims"] = dims_json(sub);
            j["free_dims"] = dims_json(free23);
            j["agree"] = ok;
            emit(j, as_json, dims_text(fixed) + (ok ? "all three oracles agree\n" : "ORACLE MISMATCH\n"));
            if (!ok) return 1;
        } else if (*sub_cmd) {
            AlgebraPtr a = form_algebra(sub_vars);
            auto dims = subalgebra_dims(a, split_polys(a, sub_gens), sub_cap);
            json j = json_header("subalgebra");
            j["dims"] = dims_json(dims);
            emit(j, as_json, dims_text(dims));
        } else if (*m2_cmd) {
            auto dims = m2_dims(m2_cap);
            json j = json_header("m2");
            j["dims"] = dims_json(dims);
            emit(j, as_json, dims_text(dims));
        } else if (*norm_cmd) {
            auto reports = norm_sequence_check(norm_cap);
            json list = json::array();
            std::string text;
            bool ok = true;
            for (const auto& r : reports) {
                list.push_back({{"degree", r.degree},
                                {"kernel_is_symmetric_algebra", r.kernel_is_symmetric_algebra},
                                {"quotient_dim", r.quotient_dim},
                                {"parity_ok", r.parity_ok}});
                ok = ok && r.kernel_is_symmetric_algebra && r.parity_ok;
                text += std::to_string(r.degree) + ": kernel=F2[w1,w2] " +
                        (r.kernel_is_symmetric_algebra ? "yes" : "NO") + ", quotient dim " +
                        std::to_string(r.quotient_dim) + (r.parity_ok ? "" : " (parity violation)") + "\n";
            }
            json j = json_header("norm-check");
            j["degrees"] = list;
            j["ok"] = ok;
            emit(j, as_json, text);
            if (!ok) return 1;
        } else if (*tv_cmd) {
            auto dims = tv_F_dims(tv_p, tv_n, tv_cap);
            json j = json_header("tv");
            j["dims"] = json(dims);
            std::string text;
            for (std::size_t d = 0; d < dims.size(); ++d)
                text += std::to_string(d) + ": " + std::to_string(dims[d]) + "\n";
            unsigned long long b = tv_HK_degree0(tv_p, tv_n);
            j["boolean_degree0_dim"] = b;
            text += "degree-0 Boolean dimension: " + std::to_string(b) + "\n";
            emit(j, as_json, text);
        } else if (*tor_cmd) {
            TorTable table;
            if (tor_psi.empty()) {
                table = bar_tor(tor_p, nullptr, tor_D, tor_S);
            } else {
                OperationClass psi = OperationClass::make(k2_context(), parse_class(tor_psi));
                table = bar_tor(tor_p, &psi, tor_D, tor_S);
            }
            json cells = json::array();
            std::string text = "s \\ t";
            for (long long t = 0; t <= table.D; ++t) text += "\t" + std::to_string(t);
            text += "\n";
            for (long long s = 0; s <= table.S; ++s) {
                text += std::to_string(s);
                for (long long t = 0; t <= table.D; ++t) {
                    cells.push_back({{"s", s}, {"t", t}, {"dim", table.at(s, t)},
                                     {"below_line", t < s * table.p}});
                    text += "\t";
                    text += (t < s * table.p) ? "." : std::to_string(table.at(s, t));
                }
                text += "\n";
            }
            json j = json_header("tor");
            j["p"] = table.p;
            j["cells"] = cells;
            emit(j, as_json, text);
        } else if (*loop_cmd) {
            auto rep = loop_collapse_check(loop_p, loop_D, loop_n);
            json j = json_header("loop-check");
            j["totals"] = dims_json(rep.totals);
            j["expected"] = dims_json(rep.expected);
            j["ok"] = rep.ok;
            std::string text;
            for (std::size_t n = 0; n < rep.totals.size(); ++n)
                text += std::to_string(n) + ": " + std::to_string(rep.totals[n]) + " expected " +
                        std::to_string(rep.expected[n]) + "\n";
            text += rep.ok ? "totals match\n" : "TOTALS MISMATCH\n";
            emit(j, as_json, text);
            if (!rep.ok) return 1;
        } else if (*search_cmd) {
            FormGenerators gens{{search_gdim, parse_form(search_gdim, search_form)}};
            auto hits = search_classes(search_p, gens, search_n);
            json list = json::array();
            std::string text;
            for (const Poly& h : hits) {
                list.push_back(h.str());
                text += h.str() + "\n";
            }
            json j = json_header("search");
            j["classes"] = list;
            emit(j, as_json, text);
        } else if (*verify_cmd) {
            auto results = run_acceptance(seed);
            json list = json::array();
            std::string text;
            for (const auto& r : results) {
                list.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + "  " + r.detail + "\n";
            }
            json j = json_header("verify");
            j["checks"] = list;
            j["ok"] = all_passed(results);
            emit(j, as_json, text);
            if (!all_passed(results)) return 1;
        }
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
