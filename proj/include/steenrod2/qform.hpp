#ifndef STEENROD2_QFORM_HPP
#define STEENROD2_QFORM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steenrod2/poly.hpp"

namespace st2 {

// Linear map F2^cols -> F2^rows, columns stored as bit vectors.
struct LinMap {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> col;  // col[j] = image of e_j

    std::uint32_t apply(std::uint32_t x) const {
        std::uint32_t y = 0;
        for (int j = 0; j < cols; ++j)
            if ((x >> j) & 1) y ^= col[static_cast<std::size_t>(j)];
        return y;
    }
};

// All invertible n x n matrices over F2, n <= 4. Cached.
const std::vector<LinMap>& gl_matrices(int n);

// Quadratic form sum c_ij x_i x_j (i <= j) on F2^n, coefficients packed into
// a bit string in row-major upper-triangular order. That bit string is the
// canonical serialization used for set membership and orbit minima.
class QForm {
public:
    QForm() = default;
    QForm(int n, std::uint32_t bits);

    static int coeff_count(int n) { return n * (n + 1) / 2; }
    static QForm zero(int n) { return QForm(n, 0); }

    int dim() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    bool coeff(int i, int j) const;  // i <= j
    bool eval(std::uint32_t x) const;
    // polarization b(x,y) = q(x+y) + q(x) + q(y)
    bool bilinear(std::uint32_t x, std::uint32_t y) const;

    // phi: F2^m -> F2^n; result is the form x |-> q(phi(x)) on F2^m.
    QForm pullback(const LinMap& phi) const;

    int polar_rank() const;      // rank of the alternating bilinear form, even
    bool defective() const;      // q nonzero on the radical of its bilinear form
    // Arf invariant by zero counting; requires a nondefective form.
    int arf() const;
    // Independent oracle: Arf via symplectic basis reduction on V/radical.
    int arf_by_reduction() const;

    Poly to_poly(const AlgebraPtr& a) const;
    static QForm from_poly(const Poly& p);
    std::string str() const;  // uses the standard variable names for its dimension

    bool operator==(const QForm& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator<(const QForm& o) const {
        return n_ != o.n_ ? n_ < o.n_ : bits_ < o.bits_;
    }

private:
    int idx(int i, int j) const;  // i <= j
    std::vector<std::uint32_t> radical_basis() const;

    int n_ = 0;
    std::uint32_t bits_ = 0;
};

// Standard ambient algebra for dimension n: u, v, w for n <= 3, else x1..xn.
AlgebraPtr form_algebra(int n);
QForm parse_form(int n, std::string_view text);

struct FormClass {
    int rank = 0;
    bool defective = false;
    std::optional<int> arf;  // defined iff not defective
    QForm representative;    // lexicographically minimal coefficient string in the orbit

    bool operator==(const FormClass& o) const {
        return representative == o.representative;
    }
    std::string label() const;
};

// GL-orbit data; n <= 4 enforced as a resource bound.
FormClass classify(const QForm& q);
std::vector<std::pair<FormClass, std::size_t>> orbit_census(int n);

}  // namespace st2

#endif
