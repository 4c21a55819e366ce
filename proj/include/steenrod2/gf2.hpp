#ifndef STEENROD2_GF2_HPP
#define STEENROD2_GF2_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace st2 {

// Bit-packed GF(2) row vector.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    // index of lowest set bit, or size() if none
    std::size_t lowest() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) {
                std::uint64_t x = w_[k];
                std::size_t b = 0;
                while (!(x & 1)) x >>= 1, ++b;
                return k * 64 + b;
            }
        return n_;
    }
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row space maintained in echelon form; supports rank and membership.
class RowSpace {
public:
    // Returns true if the row was independent (and absorbed).
    bool add(BitVec v) {
        reduce(v);
        if (v.zero()) return false;
        rows_.push_back(std::move(v));
        return true;
    }
    bool contains(BitVec v) const {
        reduce(v);
        return v.zero();
    }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }

private:
    void reduce(BitVec& v) const {
        for (const auto& r : rows_) {
            std::size_t p = r.lowest();
            if (p < v.size() && v.get(p)) v ^= r;
        }
    }
    std::vector<BitVec> rows_;  // each with a distinct pivot
};

inline std::size_t gf2_rank(std::vector<BitVec> rows) {
    RowSpace sp;
    for (auto& r : rows) sp.add(std::move(r));
    return sp.rank();
}

inline bool same_span(const std::vector<BitVec>& a, const std::vector<BitVec>& b) {
    RowSpace sa, sb;
    for (auto v : a) sa.add(v);
    for (auto v : b) sb.add(v);
    if (sa.rank() != sb.rank()) return false;
    for (const auto& v : a)
        if (!sb.contains(v)) return false;
    return true;
}

}  // namespace st2

#endif
