// Simplex-column point table: the ordered nonzero columns of S_k.
#pragma once

#include <cstdint>
#include <vector>

#include "lcdscan/bit_matrix.hpp"

namespace lcdscan {

// The N = 2^k - 1 nonzero columns of the simplex generator S_k, in the order
// produced by the recursion S_{k+1} = [ S_k 0^T S_k / 0 1 1 ].  Column i
// (1-based) encodes to the integer whose bit r-1 is row r of the column; the
// recursion yields exactly the integers 1..N in increasing order, which the
// constructor asserts.  This order is a data contract: every defining-vector
// literal in the bundled reference tables is written in it.
struct PointTable {
    int k = 0;
    int N = 0;                       // 2^k - 1
    std::vector<uint32_t> columns;   // columns[i] = integer encoding of alpha_{i+1}
    std::vector<int> index_of;       // size 2^k; index_of[v] = 0-based column index, index_of[0] = -1

    int index(uint32_t value) const { return index_of[value]; }
};

// Build the table for 2 <= k <= 8 (throws std::invalid_argument outside the cap).
PointTable build_point_table(int k);

// Generator matrix of the [2^k-1, k, 2^{k-1}] simplex code (columns in table order).
BitMatrix build_simplex(int k);

// Generator of the MacDonald code MD_{k,m} = [2^k - 2^m, k, 2^{k-1} - 2^{m-1}]:
// the last 2^k - 2^m columns of S_k.  Requires 1 <= m <= k-1.
BitMatrix build_macdonald(int k, int m);

}  // namespace lcdscan
