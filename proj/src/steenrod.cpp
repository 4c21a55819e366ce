#include "steenrod2/steenrod.hpp"

#include <algorithm>
#include <sstream>

#include "steenrod2/action.hpp"

namespace st2 {

long long word_degree(const Word& w) {
    long long d = 0;
    for (long long i : w) d += i;
    return d;
}

bool is_admissible(const Word& w) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] < 2 * w[j + 1]) return false;
    return true;
}

long long excess(const Word& w) {
    if (!is_admissible(w)) throw std::invalid_argument("excess: word is not admissible");
    if (w.empty()) return 0;
    return w[0] - (word_degree(w) - w[0]);
}

namespace {

// binom(n, k) mod 2 by Lucas; zero for k < 0 or k > n.
bool binom_odd(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return false;
    return (static_cast<unsigned long long>(k) & ~static_cast<unsigned long long>(n)) == 0;
}

std::map<Word, WordSum> adem_memo;  // guarded by adem_mutex
std::mutex adem_mutex;

void xor_into(WordSum& acc, const Word& w) {
    auto [it, fresh] = acc.insert(w);
    if (!fresh) acc.erase(it);
}

WordSum normalize_rec(const Word& w) {
    // drop Sq^0 letters
    Word v;
    v.reserve(w.size());
    for (long long i : w) {
        if (i < 0) throw std::invalid_argument("adem_normalize: negative entry");
        if (i > 0) v.push_back(i);
    }
    std::size_t j = 0;
    while (j + 1 < v.size() && v[j] >= 2 * v[j + 1]) ++j;
    if (j + 1 >= v.size()) return WordSum{v};  // admissible

    {
        std::lock_guard<std::mutex> lk(adem_mutex);
        auto it = adem_memo.find(v);
        if (it != adem_memo.end()) return it->second;
    }

    // Adem relation on the leftmost inadmissible pair (a, b), a < 2b:
    // Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c
    long long a = v[j], b = v[j + 1];
    WordSum out;
    for (long long c = 0; 2 * c <= a; ++c) {
        if (!binom_odd(b - c - 1, a - 2 * c)) continue;
        Word next(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j));
        next.push_back(a + b - c);
        if (c > 0) next.push_back(c);
        next.insert(next.end(), v.begin() + static_cast<std::ptrdiff_t>(j) + 2, v.end());
        for (const Word& t : normalize_rec(next)) xor_into(out, t);
    }
    std::lock_guard<std::mutex> lk(adem_mutex);
    adem_memo.emplace(v, out);
    return out;
}

}  // namespace

WordSum adem_normalize(const Word& w) { return normalize_rec(w); }

WordSum adem_normalize(const WordSum& s) {
    WordSum out;
    for (const Word& w : s)
        for (const Word& t : normalize_rec(w)) xor_into(out, t);
    return out;
}

Poly act_word(const Word& w, const Poly& f) {
    Poly g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) g = sq(*it, g);
    return g;
}

namespace {

void collect_admissible(Word& current, long long deg_left, std::vector<Word>& out) {
    out.push_back(current);
    long long lo = current.empty() ? 1 : 2 * current.front();
    for (long long j = lo; j <= deg_left; ++j) {
        current.insert(current.begin(), j);
        collect_admissible(current, deg_left - j, out);
        current.erase(current.begin());
    }
}

std::vector<Word> admissible_words_up_to(long long max_word_degree) {
    std::vector<Word> out;
    if (max_word_degree < 0) return out;
    Word w;
    collect_admissible(w, max_word_degree, out);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        long long da = word_degree(a), db = word_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<Word> serre_words(int n, long long cap) {
    if (n < 1) throw std::invalid_argument("serre_words: n must be >= 1");
    std::vector<Word> out;
    for (const Word& w : admissible_words_up_to(cap - n))
        if (excess(w) < n) out.push_back(w);
    return out;
}

std::vector<Word> f_basis_words(int n, long long cap) {
    if (n < 0) throw std::invalid_argument("f_basis_words: n must be >= 0");
    std::vector<Word> out;
    for (const Word& w : admissible_words_up_to(cap - n))
        if (excess(w) <= n) out.push_back(w);
    return out;
}

std::vector<long long> f_dims(int n, long long cap) {
    std::vector<long long> dims(static_cast<std::size_t>(cap) + 1, 0);
    for (const Word& w : f_basis_words(n, cap)) dims[static_cast<std::size_t>(n + word_degree(w))]++;
    return dims;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << "Sq^" << w[i];
    }
    return os.str();
}

std::string wordsum_str(const WordSum& s) {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Word& w : s) {
        if (!first) os << " + ";
        first = false;
        os << word_str(w);
    }
    return os.str();
}

Word parse_word(std::string_view text) {
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "1" && w.empty()) continue;
        if (tok.rfind("Sq^", 0) != 0)
            throw std::invalid_argument("word parse error: expected Sq^k, got '" + tok + "'");
        long long k = std::stoll(tok.substr(3));
        if (k < 0) throw std::invalid_argument("word parse error: negative exponent");
        if (k > 0) w.push_back(k);
    }
    return w;
}

namespace {

// H*(K_2) generator aliases from the Milnor presentation: the excess <= 1
// admissible words are exactly the chains (2^{i-1}, ..., 2, 1), and
// Sq^{2^{i-1}} ... Sq^2 Sq^1 iota_2 = Q_{i-1}(iota_2).
bool is_q_chain(const Word& w) {
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[w.size() - 1 - j] != (1LL << j)) return false;
    return true;
}

std::string generator_name(int n, const Word& w) {
    if (w.empty()) return "i" + std::to_string(n);
    if (n == 2 && is_q_chain(w)) return "q" + std::to_string(w.size() - 1);
    std::string s;
    for (long long i : w) s += "sq" + std::to_string(i);
    return s + "i" + std::to_string(n);
}

}  // namespace

KnContext::KnContext(int n, long long cap) : n_(n), cap_(cap) {
    if (n < 1 || cap < n) throw std::invalid_argument("KnContext: need n >= 1 and cap >= n");
    gens_ = serre_words(n, cap);
    std::vector<Variable> vars;
    vars.reserve(gens_.size());
    for (const Word& w : gens_)
        vars.push_back(Variable{generator_name(n, w), n + word_degree(w)});
    alg_ = Algebra::make(std::move(vars));
}

Poly KnContext::fundamental() const { return Poly::var(alg_, 0); }

Poly KnContext::straighten(const Word& w) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = straighten_memo_.find(w);
        if (it != straighten_memo_.end()) return it->second;
    }
    Poly result(alg_);
    long long e = excess(w);
    if (e > n_) {
        // zero on the fundamental class
    } else if (e == n_ && !w.empty()) {
        // Sq^{|x|} x = x^2 for the value x of the tail
        Word tail(w.begin() + 1, w.end());
        result = straighten(tail).square();
    } else {
        // polynomial generator
        auto it = std::find(gens_.begin(), gens_.end(), w);
        if (it == gens_.end())
            throw resource_error("KnContext: generator of degree " +
                                 std::to_string(n_ + word_degree(w)) + " beyond cap " +
                                 std::to_string(cap_));
        result = Poly::var(alg_, static_cast<int>(it - gens_.begin()));
    }
    std::lock_guard<std::mutex> lk(mu_);
    straighten_memo_.emplace(w, result);
    return result;
}

Poly KnContext::apply_to_fundamental(const Word& w) const {
    Poly out(alg_);
    for (const Word& t : adem_normalize(w)) out += straighten(t);
    return out;
}

Poly KnContext::sq_factors(std::vector<std::pair<int, std::uint64_t>> factors, long long k) const {
    if (k < 0) return Poly::zero(alg_);
    if (factors.empty()) return k == 0 ? Poly::one(alg_) : Poly::zero(alg_);
    // peel one copy of the first generator and apply the Cartan formula
    auto [v, e] = factors.front();
    if (e == 1) factors.erase(factors.begin());
    else factors.front().second = e - 1;
    long long dv = alg_->var(v).degree;
    Poly out(alg_);
    for (long long a = 0; a <= std::min(k, dv); ++a) {
        Poly rest = sq_factors(factors, k - a);
        if (rest.is_zero()) continue;
        Poly head;
        if (a == 0) {
            head = Poly::var(alg_, v);
        } else {
            Word w = gens_[static_cast<std::size_t>(v)];
            w.insert(w.begin(), a);
            head = apply_to_fundamental(w);
        }
        out += head * rest;
    }
    return out;
}

Poly KnContext::sq_on_K(const Poly& g, long long k) const {
    if (g.algebra().get() != alg_.get())
        throw std::invalid_argument("sq_on_K: class not in this presentation");
    if (k == 0) return g;
    Poly out(alg_);
    for (const Monomial& m : g.terms()) out += sq_factors(m.factors(), k);
    return out;
}

Poly KnContext::act_on_K(const Word& w, const Poly& g) const {
    Poly out = g;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = sq_on_K(out, *it);
    return out;
}

}  // namespace st2
