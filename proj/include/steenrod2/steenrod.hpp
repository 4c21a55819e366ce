#ifndef STEENROD2_STEENROD_HPP
#define STEENROD2_STEENROD_HPP

#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "steenrod2/poly.hpp"

namespace st2 {

// A composite Sq^{i_1} ... Sq^{i_k}; entries positive, the empty word is the
// identity operation.
using Word = std::vector<long long>;
// F2-sum of words; the rewriting engine keeps every member admissible.
using WordSum = std::set<Word>;

long long word_degree(const Word& w);
bool is_admissible(const Word& w);
// i_1 - (i_2 + ... + i_k); requires an admissible word.
long long excess(const Word& w);

// Adem normalization to the admissible basis. Idempotent on admissible input.
// Coefficients binom(b-c-1, a-2c) mod 2 via the Lucas bitwise criterion.
WordSum adem_normalize(const Word& w);
WordSum adem_normalize(const WordSum& s);

// Apply a word to a polynomial in degree-1 variables, rightmost letter first.
Poly act_word(const Word& w, const Poly& f);

// Admissible words I with excess(I) < n and n + deg I <= cap: the polynomial
// generators Sq^I iota_n of H*(K_n). Sorted by degree, then lexicographically.
std::vector<Word> serre_words(int n, long long cap);
// Basis of the free unstable module F(n) through total degree cap:
// admissible words with excess <= n, as words applied to iota_n.
std::vector<Word> f_basis_words(int n, long long cap);
// Per-degree dimensions of F(n), degrees 0..cap.
std::vector<long long> f_dims(int n, long long cap);

std::string word_str(const Word& w);             // e.g. "Sq^2 Sq^1"; identity is "1"
std::string wordsum_str(const WordSum& s);
Word parse_word(std::string_view text);          // grammar: whitespace-separated Sq^k

// H*(K_n) through a fixed degree cap, presented as the polynomial algebra on
// its Serre generators. Holds the straightening cache for evaluating
// admissible words on the fundamental class.
class KnContext {
public:
    KnContext(int n, long long cap);

    int n() const { return n_; }
    long long cap() const { return cap_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Word>& generators() const { return gens_; }
    const Word& generator_word(int var) const { return gens_.at(static_cast<std::size_t>(var)); }

    Poly fundamental() const;  // the class iota_n

    // Value of Sq^I iota_n in the Serre presentation. Words of excess > n act
    // as zero; excess = n splits as the square of the tail's value.
    Poly apply_to_fundamental(const Word& w) const;

    // Sq^k extended multiplicatively (Cartan) over a class in the presentation.
    Poly sq_on_K(const Poly& g, long long k) const;
    // Compose a whole word, rightmost letter first.
    Poly act_on_K(const Word& w, const Poly& g) const;

    Poly parse(std::string_view text) const { return parse_poly(alg_, text); }

private:
    Poly straighten(const Word& admissible_word) const;
    Poly sq_factors(std::vector<std::pair<int, std::uint64_t>> factors, long long k) const;

    int n_;
    long long cap_;
    AlgebraPtr alg_;
    std::vector<Word> gens_;
    mutable std::map<Word, Poly> straighten_memo_;
    mutable std::mutex mu_;
};

}  // namespace st2

#endif
