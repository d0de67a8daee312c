#include "lcdscan/spectral.hpp"

#include <bit>
#include <stdexcept>

namespace lcdscan {

SpectralPair build_spectral(int k) {
    if (k < 2 || k > 8) throw std::invalid_argument("build_spectral: k must be in [2,8]");
    // P_2 = [[1,0,1],[0,1,1],[1,1,0]].
    std::vector<std::vector<int>> P = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
    for (int kk = 2; kk < k; ++kk) {
        const int n = (1 << kk) - 1;
        const int m = 2 * n + 1;
        std::vector<std::vector<int>> nxt(m, std::vector<int>(m, 0));
        // Top band: [ P 0^T P ]
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                nxt[i][j] = P[i][j];
                nxt[i][n + 1 + j] = P[i][j];
            }
        }
        // Middle row: [ 0 1 1 ]
        for (int j = n; j < m; ++j) nxt[n][j] = 1;
        // Bottom band: [ P 1^T Q ]
        for (int i = 0; i < n; ++i) {
            nxt[n + 1 + i][n] = 1;
            for (int j = 0; j < n; ++j) {
                nxt[n + 1 + i][j] = P[i][j];
                nxt[n + 1 + i][n + 1 + j] = 1 - P[i][j];
            }
        }
        P = std::move(nxt);
    }

    SpectralPair sp;
    sp.k = k;
    sp.N = (1 << k) - 1;
    sp.P = std::move(P);
    sp.Q.assign(sp.N, std::vector<int>(sp.N, 0));
    for (int i = 0; i < sp.N; ++i)
        for (int j = 0; j < sp.N; ++j)
            sp.Q[i][j] = 1 - sp.P[i][j];
    // P[i][j] equals the parity of popcount((i+1) & (j+1)) in the integer
    // column order; cheap independent cross-check of the recursion.
    for (int i = 0; i < sp.N; ++i)
        for (int j = 0; j < sp.N; ++j)
            if (sp.P[i][j] != (std::popcount(unsigned((i + 1) & (j + 1))) & 1))
                throw std::logic_error("build_spectral: recursion broke the parity identity");
    if (k <= 6) {
        sp.row_mask.assign(sp.N, 0);
        for (int i = 0; i < sp.N; ++i) {
            uint64_t m = 0;
            for (int j = 0; j < sp.N; ++j)
                if (sp.P[i][j]) m |= uint64_t(1) << j;
            sp.row_mask[i] = m;
        }
    }
    return sp;
}

}  // namespace lcdscan
