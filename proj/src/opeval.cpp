#include "steenrod2/opeval.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "steenrod2/action.hpp"

namespace st2 {

namespace {

// q_i corresponds to the chain (2^i, ..., 2, 1); -1 for the empty word
// (iota_2 itself), -2 for anything else.
int chain_index(const Word& w) {
    if (w.empty()) return -1;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[w.size() - 1 - j] != (1LL << j)) return -2;
    return static_cast<int>(w.size()) - 1;
}

}  // namespace

const KnContext& k2_context() {
    static KnContext ctx(2, 40);
    return ctx;
}

OperationClass OperationClass::make(const KnContext& kq, Poly expr) {
    if (expr.algebra().get() != kq.algebra().get())
        throw std::invalid_argument("OperationClass: expression not in the K_q presentation");
    long long p = -1;
    if (!expr.homogeneous(&p))
        throw std::invalid_argument("OperationClass: expression must be homogeneous");
    if (expr.is_zero() || p <= kq.n())
        throw std::invalid_argument("OperationClass: need nonzero expression with p > q");
    return OperationClass{kq.n(), p, std::move(expr)};
}

Poly named_class(const std::string& name) {
    const KnContext& k2 = k2_context();
    if (name == "d2") return k2.parse("i2*q0 + q1");
    if (name == "h2") return k2.parse("i2^2*q1 + q0^3 + i2^3*q0");
    throw std::invalid_argument("unknown named class: " + name);
}

Poly parse_class(std::string_view text) {
    std::string s(text);
    // textual aliases: replace whole-identifier d2 / h2 before parsing
    for (const char* alias : {"d2", "h2"}) {
        std::string expanded = "(unused)";
        std::size_t pos = 0;
        while ((pos = s.find(alias, pos)) != std::string::npos) {
            bool left_ok = pos == 0 || !(std::isalnum(static_cast<unsigned char>(s[pos - 1])) || s[pos - 1] == '_');
            bool right_ok = pos + 2 >= s.size() ||
                            !(std::isalnum(static_cast<unsigned char>(s[pos + 2])) || s[pos + 2] == '_');
            if (left_ok && right_ok) {
                std::string body = named_class(alias).str();
                // keep precedence: alias may appear as a '*'-factor, so guard
                // by distributing only when it stands alone in its term
                s = s.substr(0, pos) + "{" + body + "}" + s.substr(pos + 2);
                pos += body.size() + 2;
            } else {
                pos += 2;
            }
        }
        (void)expanded;
    }
    // expand {..} groups by polynomial arithmetic: parse term by term
    const KnContext& k2 = k2_context();
    const AlgebraPtr& a = k2.algebra();
    Poly out(a);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    while (true) {
        Poly term = Poly::one(a);
        while (true) {
            skip_ws();
            if (i >= s.size()) throw std::invalid_argument("class parse error: truncated term");
            if (s[i] == '{') {
                std::size_t close = s.find('}', i);
                if (close == std::string::npos) throw std::invalid_argument("class parse error");
                Poly group = parse_poly(a, s.substr(i + 1, close - i - 1));
                i = close + 1;
                skip_ws();
                std::uint64_t e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::size_t start = i;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                    e = std::stoull(s.substr(start, i - start));
                }
                term *= group.pow(e);
            } else {
                std::size_t start = i;
                while (i < s.size() && s[i] != '+' && s[i] != '*' && s[i] != '{') ++i;
                std::string atom = s.substr(start, i - start);
                if (atom.find_first_not_of(" \t\n") == std::string::npos)
                    throw std::invalid_argument("class parse error: empty factor");
                term *= parse_poly(a, atom);
            }
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; continue; }
            break;
        }
        out += term;
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] != '+') throw std::invalid_argument("class parse error: expected '+'");
        ++i;
    }
    return out;
}

Poly evaluate(const OperationClass& psi, const QForm& s) {
    if (psi.q != 2) throw std::invalid_argument("evaluate: only q = 2 is supported");
    const KnContext& k2 = k2_context();
    AlgebraPtr target = form_algebra(s.dim());
    Poly sp = s.to_poly(target);
    std::map<int, Poly> images;
    for (std::size_t v = 0; v < k2.generators().size(); ++v) {
        int ci = chain_index(k2.generators()[v]);
        if (ci == -2) throw std::logic_error("evaluate: non-chain K_2 generator");
        images[static_cast<int>(v)] = (ci == -1) ? sp : milnor_q(ci, sp);
    }
    return substitute(psi.expression, target, images);
}

std::set<QForm> kernel_set(const OperationClass& psi, int n, int n_bound) {
    if (n < 1 || n > n_bound)
        throw resource_error("kernel_set: dimension " + std::to_string(n) + " beyond bound " +
                             std::to_string(n_bound));
    std::set<QForm> out;
    for (std::uint32_t b = 0; b < (1u << QForm::coeff_count(n)); ++b) {
        QForm q(n, b);
        if (evaluate(psi, q).is_zero()) out.insert(q);
    }
    return out;
}

SubfunctorWitness pullback_closure(const FormGenerators& gens, int n_max) {
    SubfunctorWitness w;
    w.n_max = n_max;
    w.by_dim.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        auto& set_n = w.by_dim[static_cast<std::size_t>(n) - 1];
        set_n.insert(QForm::zero(n));
        for (const auto& [d, g] : gens) {
            if (g.dim() != d) throw std::invalid_argument("pullback_closure: generator dimension mismatch");
            // all linear maps V_n -> V_d
            std::uint64_t total = 1ULL << (d * n);
            for (std::uint64_t code = 0; code < total; ++code) {
                LinMap phi{d, n, {}};
                for (int j = 0; j < n; ++j)
                    phi.col.push_back(static_cast<std::uint32_t>((code >> (d * j)) & ((1u << d) - 1)));
                set_n.insert(g.pullback(phi));
            }
        }
    }
    return w;
}

SubfunctorWitness kernel_witness(const OperationClass& psi, int n_max) {
    SubfunctorWitness w;
    w.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) w.by_dim.push_back(kernel_set(psi, n, n_max));
    return w;
}

bool generated_by(const SubfunctorWitness& witness, const FormGenerators& gens, int n_max) {
    SubfunctorWitness closure = pullback_closure(gens, n_max);
    for (int n = 1; n <= n_max; ++n)
        for (const QForm& q : witness.at(n))
            if (!closure.at(n).count(q)) return false;
    return true;
}

std::vector<Poly> search_classes(long long p_max, const FormGenerators& target, int n_max) {
    const KnContext& k2 = k2_context();
    SubfunctorWitness goal = pullback_closure(target, n_max);
    std::vector<Poly> hits;

    const auto& alg = k2.algebra();
    std::size_t ngens = alg->size();
    std::vector<std::uint64_t> expo(ngens, 0);
    // enumerate exponent tuples with total degree <= p_max
    auto degree_of = [&] {
        long long d = 0;
        for (std::size_t v = 0; v < ngens; ++v)
            d += static_cast<long long>(expo[v]) * alg->var(static_cast<int>(v)).degree;
        return d;
    };
    std::vector<std::vector<std::uint64_t>> tuples;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == ngens) {
            tuples.push_back(expo);
            return;
        }
        long long dv = alg->var(static_cast<int>(v)).degree;
        for (expo[v] = 0; degree_of() <= p_max; ++expo[v]) {
            rec(v + 1);
            if (dv == 0) break;
        }
        expo[v] = 0;
    };
    rec(0);

    for (const auto& t : tuples) {
        Poly m = Poly::one(alg);
        long long deg = 0;
        for (std::size_t v = 0; v < ngens; ++v) {
            m *= Poly::var(alg, static_cast<int>(v)).pow(t[v]);
            deg += static_cast<long long>(t[v]) * alg->var(static_cast<int>(v)).degree;
        }
        if (deg <= 2 || deg > p_max) continue;  // need target degree p > q = 2
        OperationClass psi = OperationClass::make(k2, m);
        if (kernel_witness(psi, n_max) == goal) hits.push_back(m);
    }
    return hits;
}

}  // namespace st2
