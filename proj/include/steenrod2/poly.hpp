#ifndef STEENROD2_POLY_HPP
#define STEENROD2_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace st2 {

// Thrown when a computation would exceed a configured resource cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Variable {
    std::string name;
    long long degree = 1;  // cohomological degree, >= 1
};

// Immutable list of weighted variables. Polynomials refer to their ambient
// algebra through a shared pointer; two polynomials interoperate only if
// they share the same Algebra instance.
class Algebra {
public:
    static std::shared_ptr<const Algebra> make(std::vector<Variable> vars);

    std::size_t size() const { return vars_.size(); }
    const Variable& var(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
    // -1 if the name is not present.
    int index_of(std::string_view name) const;

private:
    Algebra() = default;
    std::vector<Variable> vars_;
    std::map<std::string, int, std::less<>> index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Exponent arithmetic is 64-bit with overflow checked; wraparound is never
// silent.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

class Monomial {
public:
    // (variable index, exponent) pairs, sorted by index, exponents > 0.
    using Factors = std::vector<std::pair<int, std::uint64_t>>;

    Monomial() = default;  // the empty monomial, i.e. 1
    explicit Monomial(Factors f);

    const Factors& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::uint64_t exponent(int var) const;
    long long degree(const Algebra& a) const;

    Monomial times(const Monomial& o) const;
    Monomial pow(std::uint64_t e) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    // Canonical term order: compare exponent sequences along the variable
    // list, higher power on an earlier variable first.
    bool before(const Monomial& o) const;

private:
    Factors factors_;
};

// F2-polynomial: a set of monomials, kept sorted in canonical order.
// Addition is symmetric difference of the term sets.
class Poly {
public:
    Poly() = default;  // zero with no ambient algebra; usable only as a target of assignment
    explicit Poly(AlgebraPtr a) : alg_(std::move(a)) {}

    static Poly zero(AlgebraPtr a) { return Poly(std::move(a)); }
    static Poly one(AlgebraPtr a);
    static Poly var(AlgebraPtr a, int index);
    static Poly from_monomial(AlgebraPtr a, Monomial m);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    bool operator==(const Poly& o) const;

    Poly pow(std::uint64_t e) const;
    Poly square() const { return pow(2); }

    // -1 for the zero polynomial, otherwise the maximal term degree.
    long long degree() const;
    bool homogeneous(long long* deg = nullptr) const;
    Poly component(long long d) const;
    std::map<long long, Poly> components() const;

    std::string str() const;

private:
    friend Poly substitute(const Poly&, const AlgebraPtr&, const std::map<int, Poly>&);
    AlgebraPtr alg_;
    std::vector<Monomial> terms_;
};

// Ring-homomorphism extension of the variable images. Variables absent from
// `images` are sent to the variable of the same name in `target`. Each image
// must be homogeneous of the degree of its variable (zero is allowed).
Poly substitute(const Poly& p, const AlgebraPtr& target, const std::map<int, Poly>& images);

// Text grammar: terms joined by '+', a term is '*'-joined factors
// `name` or `name^k`; "0" and "1" are accepted. Round-trips with Poly::str().
Poly parse_poly(const AlgebraPtr& a, std::string_view text);

// Dimension of the degree-d part of the free commutative F2-algebra on
// generators of the given degrees, for d = 0..D.
std::vector<unsigned long long> free_algebra_dims(const std::vector<long long>& generator_degrees,
                                                  long long D);

}  // namespace st2

#endif
