// Spectral pair (P_k, Q_k): incidence of points with simplex codewords.
#pragma once

#include <cstdint>
#include <vector>

namespace lcdscan {

// P_k is the N x N 0/1 matrix whose rows are the nonzero codewords of S_k
// (row i = codeword generated by the message whose bits select rows of S_k),
// built by the recursion P_{k+1} = [ P_k 0^T P_k / 0 1 1 / P_k 1^T Q_k ] with
// Q_k = J - P_k.  Key facts, all asserted by tests:
//   * P symmetric, every P row has 2^{k-1} ones, every Q row 2^{k-1} - 1;
//   * P * (J - 2Q) == 2^{k-1} * I over the integers, i.e.
//     P^{-1} = (1/2^{k-1}) (J - 2Q).
struct SpectralPair {
    int k = 0;
    int N = 0;
    std::vector<std::vector<int>> P;   // 0/1 entries
    std::vector<std::vector<int>> Q;   // J - P
    // row_mask[i] packs row i of P into bits (bit j == P[i][j]); used by the
    // weight kernels.  Only meaningful for k <= 6 here (N <= 63).
    std::vector<uint64_t> row_mask;
};

// Build for 2 <= k <= 8 via the recursion; throws std::invalid_argument outside.
SpectralPair build_spectral(int k);

}  // namespace lcdscan
