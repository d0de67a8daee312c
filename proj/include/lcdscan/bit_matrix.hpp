// Bit-packed linear algebra over GF(2): products, rank, inverses, Gram matrices.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcdscan {

// Row-major packed GF(2) matrix. Bits beyond `cols` in the last word of a row
// are kept zero so whole-word operations (XOR, popcount, compare) are exact.
// 0xN and Nx0 matrices are legal and have rank 0.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), words_(0) {}
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);
    static BitMatrix zero(int rows, int cols) { return BitMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool v) {
        uint64_t& w = data_[static_cast<size_t>(r) * words_ + (c >> 6)];
        const uint64_t bit = uint64_t(1) << (c & 63);
        if (v) w |= bit; else w &= ~bit;
    }
    void flip(int r, int c) {
        data_[static_cast<size_t>(r) * words_ + (c >> 6)] ^= uint64_t(1) << (c & 63);
    }

    const uint64_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * words_; }
    uint64_t* row(int r) { return data_.data() + static_cast<size_t>(r) * words_; }
    int words_per_row() const { return words_; }

    void xor_row_into(int src, int dst);   // row[dst] ^= row[src]
    void swap_rows(int a, int b);
    int row_weight(int r) const;           // popcount of a row

    BitMatrix transpose() const;

    bool is_zero() const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    std::string to_string() const;          // '0'/'1' grid, one row per line

private:
    int rows_, cols_, words_;
    std::vector<uint64_t> data_;
};

// Standard GF(2) product; throws std::invalid_argument on inner-dimension mismatch.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

// GF(2) row rank via Gaussian elimination on a copy.
int rank(const BitMatrix& a);

// G * G^T (symmetric).
BitMatrix gram(const BitMatrix& g);

// rank == rows for a square matrix; throws std::invalid_argument if non-square.
bool is_invertible(const BitMatrix& a);

// Inverse of a square invertible matrix (throws std::invalid_argument otherwise).
BitMatrix inverse(const BitMatrix& a);

}  // namespace lcdscan
