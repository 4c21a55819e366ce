#include "steenrod2/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace st2 {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("exponent overflow");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw std::overflow_error("exponent overflow");
    return a * b;
}

AlgebraPtr Algebra::make(std::vector<Variable> vars) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].degree < 1) throw std::invalid_argument("variable degree must be >= 1");
        auto [it, fresh] = a->index_.emplace(vars[i].name, static_cast<int>(i));
        if (!fresh) throw std::invalid_argument("duplicate variable name: " + vars[i].name);
    }
    a->vars_ = std::move(vars);
    return a;
}

int Algebra::index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

Monomial::Monomial(Factors f) : factors_(std::move(f)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].second == 0) throw std::invalid_argument("zero exponent stored");
        if (i > 0 && factors_[i - 1].first >= factors_[i].first)
            throw std::invalid_argument("monomial factors not sorted");
    }
}

std::uint64_t Monomial::exponent(int var) const {
    for (const auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

long long Monomial::degree(const Algebra& a) const {
    std::uint64_t d = 0;
    for (const auto& [v, e] : factors_)
        d = checked_add(d, checked_mul(e, static_cast<std::uint64_t>(a.var(v).degree)));
    if (d > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
        throw std::overflow_error("degree overflow");
    return static_cast<long long>(d);
}

Monomial Monomial::times(const Monomial& o) const {
    Factors out;
    out.reserve(factors_.size() + o.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first))
            out.push_back(factors_[i++]);
        else if (i == factors_.size() || o.factors_[j].first < factors_[i].first)
            out.push_back(o.factors_[j++]);
        else {
            out.emplace_back(factors_[i].first, checked_add(factors_[i].second, o.factors_[j].second));
            ++i, ++j;
        }
    }
    Monomial m;
    m.factors_ = std::move(out);
    return m;
}

Monomial Monomial::pow(std::uint64_t e) const {
    Monomial m;
    if (e == 0) return m;
    m.factors_ = factors_;
    for (auto& [v, ex] : m.factors_) ex = checked_mul(ex, e);
    return m;
}

bool Monomial::before(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < o.factors_.size()) {
        if (factors_[i].first != o.factors_[j].first)
            // The one supported on the earlier variable has the higher power there.
            return factors_[i].first < o.factors_[j].first;
        if (factors_[i].second != o.factors_[j].second)
            return factors_[i].second > o.factors_[j].second;
        ++i, ++j;
    }
    return i < factors_.size();  // longer support on later vars sorts after
}

Poly Poly::one(AlgebraPtr a) {
    Poly p(std::move(a));
    p.terms_.push_back(Monomial());
    return p;
}

Poly Poly::var(AlgebraPtr a, int index) {
    if (index < 0 || static_cast<std::size_t>(index) >= a->size())
        throw std::invalid_argument("variable index out of range");
    Poly p(std::move(a));
    p.terms_.push_back(Monomial(Monomial::Factors{{index, 1}}));
    return p;
}

Poly Poly::from_monomial(AlgebraPtr a, Monomial m) {
    Poly p(std::move(a));
    p.terms_.push_back(std::move(m));
    return p;
}

namespace {
void require_same(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a.get() != b.get()) throw std::invalid_argument("mismatched ambient algebras");
}
bool mono_less(const Monomial& a, const Monomial& b) { return a.before(b); }
}  // namespace

Poly Poly::operator+(const Poly& o) const {
    if (!alg_) return o;
    if (!o.alg_) return *this;
    require_same(alg_, o.alg_);
    Poly out(alg_);
    // symmetric difference of the two sorted term lists
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].before(o.terms_[j])))
            out.terms_.push_back(terms_[i++]);
        else if (i == terms_.size() || o.terms_[j].before(terms_[i]))
            out.terms_.push_back(o.terms_[j++]);
        else
            ++i, ++j;  // equal terms cancel over F2
    }
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    require_same(alg_, o.alg_);
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) prods.push_back(s.times(t));
    std::sort(prods.begin(), prods.end(), mono_less);
    Poly out(alg_);
    for (std::size_t i = 0; i < prods.size();) {
        std::size_t j = i;
        while (j < prods.size() && prods[j] == prods[i]) ++j;
        if ((j - i) % 2 == 1) out.terms_.push_back(prods[i]);
        i = j;
    }
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (is_zero() && o.is_zero()) return true;
    return alg_.get() == o.alg_.get() && terms_ == o.terms_;
}

Poly Poly::pow(std::uint64_t e) const {
    Poly base = *this;
    Poly acc = Poly::one(alg_);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

long long Poly::degree() const {
    long long d = -1;
    for (const auto& m : terms_) d = std::max(d, m.degree(*alg_));
    return d;
}

bool Poly::homogeneous(long long* deg) const {
    long long d = -1;
    for (const auto& m : terms_) {
        long long md = m.degree(*alg_);
        if (d == -1) d = md;
        else if (md != d) return false;
    }
    if (deg) *deg = d;
    return true;
}

Poly Poly::component(long long d) const {
    Poly out(alg_);
    for (const auto& m : terms_)
        if (m.degree(*alg_) == d) out.terms_.push_back(m);
    return out;
}

std::map<long long, Poly> Poly::components() const {
    std::map<long long, Poly> out;
    for (const auto& m : terms_) {
        long long d = m.degree(*alg_);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Poly(alg_)).first;
        it->second.terms_.push_back(m);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& m : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        if (m.is_one()) {
            os << "1";
            continue;
        }
        bool first_factor = true;
        for (const auto& [v, e] : m.factors()) {
            if (!first_factor) os << "*";
            first_factor = false;
            os << alg_->var(v).name;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Poly substitute(const Poly& p, const AlgebraPtr& target, const std::map<int, Poly>& images) {
    const Algebra& src = *p.algebra();
    std::vector<std::optional<Poly>> img(src.size());
    for (const auto& [v, q] : images) {
        if (v < 0 || static_cast<std::size_t>(v) >= src.size())
            throw std::invalid_argument("substitute: bad variable index");
        long long d = -1;
        if (!q.homogeneous(&d)) throw std::invalid_argument("substitute: image not homogeneous");
        if (!q.is_zero() && d != src.var(v).degree)
            throw std::invalid_argument("substitute: image degree mismatch for " + src.var(v).name);
        if (q.algebra().get() != target.get())
            throw std::invalid_argument("substitute: image not in target algebra");
        img[static_cast<std::size_t>(v)] = q;
    }
    for (std::size_t v = 0; v < src.size(); ++v) {
        if (img[v]) continue;
        int tv = target->index_of(src.var(static_cast<int>(v)).name);
        if (tv < 0)
            throw std::invalid_argument("substitute: no image for variable " + src.var(static_cast<int>(v)).name);
        img[v] = Poly::var(target, tv);
    }
    Poly out(target);
    for (const auto& m : p.terms()) {
        Poly t = Poly::one(target);
        for (const auto& [v, e] : m.factors()) t *= img[static_cast<std::size_t>(v)]->pow(e);
        out += t;
    }
    return out;
}

namespace {

struct Lexer {
    std::string_view s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

std::uint64_t lex_number(Lexer& lx) {
    lx.skip_ws();
    std::uint64_t n = 0;
    std::size_t start = lx.i;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
        n = checked_add(checked_mul(n, 10), static_cast<std::uint64_t>(lx.s[lx.i] - '0'));
        ++lx.i;
    }
    if (lx.i == start) throw std::invalid_argument("polynomial parse error: expected number");
    return n;
}

std::string lex_ident(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.i;
    while (lx.i < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
        ++lx.i;
    if (lx.i == start) throw std::invalid_argument("polynomial parse error: expected name");
    return std::string(lx.s.substr(start, lx.i - start));
}

}  // namespace

Poly parse_poly(const AlgebraPtr& a, std::string_view text) {
    Lexer lx{text};
    Poly out(a);
    if (lx.eof()) throw std::invalid_argument("polynomial parse error: empty input");
    while (true) {
        // one term
        Poly term = Poly::one(a);
        bool zero_term = false;
        while (true) {
            if (lx.eof()) throw std::invalid_argument("polynomial parse error: truncated term");
            char c = lx.peek();
            if (c == '0' || c == '1') {
                std::uint64_t n = lex_number(lx);
                if (n == 0) zero_term = true;
                else if (n != 1) throw std::invalid_argument("polynomial parse error: bad constant");
            } else {
                std::string name = lex_ident(lx);
                int v = a->index_of(name);
                if (v < 0) throw std::invalid_argument("unknown variable: " + name);
                std::uint64_t e = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    ++lx.i;
                    e = lex_number(lx);
                }
                term *= Poly::var(a, v).pow(e);
            }
            if (lx.eof() || lx.peek() != '*') break;
            ++lx.i;
        }
        if (!zero_term) out += term;
        if (lx.eof()) break;
        if (lx.peek() != '+') throw std::invalid_argument("polynomial parse error: expected '+'");
        ++lx.i;
    }
    return out;
}

std::vector<unsigned long long> free_algebra_dims(const std::vector<long long>& generator_degrees,
                                                  long long D) {
    if (D < 0) throw std::invalid_argument("free_algebra_dims: negative cap");
    std::vector<unsigned long long> dims(static_cast<std::size_t>(D) + 1, 0);
    dims[0] = 1;
    for (long long g : generator_degrees) {
        if (g < 1) throw std::invalid_argument("free_algebra_dims: generator degree must be >= 1");
        for (long long d = g; d <= D; ++d)
            dims[static_cast<std::size_t>(d)] += dims[static_cast<std::size_t>(d - g)];
    }
    return dims;
}

}  // namespace st2
