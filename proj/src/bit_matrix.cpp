#include "lcdscan/bit_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace lcdscan {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative dimension");
    words_ = (cols + 63) / 64;
    if (words_ == 0) words_ = 1;  // keep row pointers valid for 0-column matrices
    data_.assign(static_cast<size_t>(rows_) * words_, 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::xor_row_into(int src, int dst) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* ra = row(a);
    uint64_t* rb = row(b);
    for (int w = 0; w < words_; ++w) std::swap(ra[w], rb[w]);
}

int BitMatrix::row_weight(int r) const {
    const uint64_t* p = row(r);
    int total = 0;
    for (int w = 0; w < words_; ++w) total += std::popcount(p[w]);
    return total;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

bool BitMatrix::is_zero() const {
    for (uint64_t w : data_)
        if (w) return false;
    return true;
}

std::string BitMatrix::to_string() const {
    std::string out;
    out.reserve(static_cast<size_t>(rows_) * (cols_ + 1));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    // Accumulate rows of b selected by the set bits of each row of a.
    for (int r = 0; r < a.rows(); ++r) {
        uint64_t* dst = out.row(r);
        for (int c = 0; c < a.cols(); ++c) {
            if (!a.get(r, c)) continue;
            const uint64_t* src = b.row(c);
            for (int w = 0; w < out.words_per_row(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

int rank(const BitMatrix& a) {
    BitMatrix m = a;
    int rk = 0;
    for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rk; r < m.rows(); ++r) {
            if (m.get(r, c)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        m.swap_rows(rk, pivot);
        for (int r = 0; r < m.rows(); ++r)
            if (r != rk && m.get(r, c)) m.xor_row_into(rk, r);
        ++rk;
    }
    return rk;
}

BitMatrix gram(const BitMatrix& g) {
    const int k = g.rows();
    BitMatrix out(k, k);
    for (int i = 0; i < k; ++i) {
        const uint64_t* ri = g.row(i);
        for (int j = i; j < k; ++j) {
            const uint64_t* rj = g.row(j);
            int acc = 0;
            for (int w = 0; w < g.words_per_row(); ++w) acc += std::popcount(ri[w] & rj[w]);
            if (acc & 1) { out.set(i, j, true); out.set(j, i, true); }
        }
    }
    return out;
}

bool is_invertible(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("is_invertible: non-square matrix");
    return rank(a) == a.rows();
}

BitMatrix inverse(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const int n = a.rows();
    BitMatrix m = a;
    BitMatrix inv = BitMatrix::identity(n);
    int rk = 0;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = rk; r < n; ++r)
            if (m.get(r, c)) { pivot = r; break; }
        if (pivot < 0) throw std::invalid_argument("inverse: singular matrix");
        m.swap_rows(rk, pivot);
        inv.swap_rows(rk, pivot);
        for (int r = 0; r < n; ++r) {
            if (r != rk && m.get(r, c)) {
                m.xor_row_into(rk, r);
                inv.xor_row_into(rk, r);
            }
        }
        ++rk;
    }
    return inv;
}

}  // namespace lcdscan
