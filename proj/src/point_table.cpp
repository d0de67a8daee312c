#include "lcdscan/point_table.hpp"

#include <stdexcept>

namespace lcdscan {

namespace {

// Expand the column list of S_{k+1} = [ S_k 0^T S_k / 0 1 1 ] from that of S_k:
// the old columns (top bit 0), then the new unit column 2^k, then the old
// columns with the top bit set.
std::vector<uint32_t> recurse_columns(const std::vector<uint32_t>& prev, int k_prev) {
    const uint32_t top = uint32_t(1) << k_prev;
    std::vector<uint32_t> next;
    next.reserve(prev.size() * 2 + 1);
    for (uint32_t c : prev) next.push_back(c);
    next.push_back(top);
    for (uint32_t c : prev) next.push_back(c | top);
    return next;
}

}  // namespace

PointTable build_point_table(int k) {
    if (k < 2 || k > 8) throw std::invalid_argument("build_point_table: k must be in [2,8]");
    // S_2 columns: (1,0), (0,1), (1,1) -> integers 1, 2, 3.
    std::vector<uint32_t> cols = {1, 2, 3};
    for (int kk = 2; kk < k; ++kk) cols = recurse_columns(cols, kk);

    PointTable t;
    t.k = k;
    t.N = (1 << k) - 1;
    t.columns = std::move(cols);
    t.index_of.assign(size_t(1) << k, -1);
    for (int i = 0; i < t.N; ++i) {
        const uint32_t v = t.columns[i];
        if (v == 0 || v > uint32_t(t.N) || t.index_of[v] != -1)
            throw std::logic_error("build_point_table: recursion produced bad column set");
        t.index_of[v] = i;
        // The recursion happens to emit column i+1 as the integer i+1; the
        // rest of the toolkit relies on that, so fail loudly if it breaks.
        if (v != uint32_t(i + 1))
            throw std::logic_error("build_point_table: columns left increasing-integer order");
    }
    return t;
}

BitMatrix build_simplex(int k) {
    const PointTable t = build_point_table(k);
    BitMatrix g(k, t.N);
    for (int c = 0; c < t.N; ++c)
        for (int r = 0; r < k; ++r)
            if ((t.columns[c] >> r) & 1u) g.set(r, c, true);
    return g;
}

BitMatrix build_macdonald(int k, int m) {
    if (m < 1 || m > k - 1) throw std::invalid_argument("build_macdonald: need 1 <= m <= k-1");
    const PointTable t = build_point_table(k);
    const int skip = (1 << m) - 1;           // drop the first 2^m - 1 columns
    const int n = t.N - skip;
    BitMatrix g(k, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < k; ++r)
            if ((t.columns[c + skip] >> r) & 1u) g.set(r, c, true);
    return g;
}

}  // namespace lcdscan
