// Defining vectors: multiplicity vectors over the simplex point table, plus
// the conversions between them, generator matrices, and weight vectors.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcdscan/bit_matrix.hpp"
#include "lcdscan/point_table.hpp"
#include "lcdscan/spectral.hpp"

namespace lcdscan {

// L = (l_1, ..., l_N): l_i copies of simplex column alpha_i.  n = sum l_i.
// A vector whose support does not span GF(2)^k generates a dimension-deficient
// code; that is flagged by is_degenerate(), never forbidden, because search
// intermediates hit it.
struct DefiningVector {
    int k = 5;
    std::vector<int> entries;

    DefiningVector() = default;
    DefiningVector(int k_, std::vector<int> e) : k(k_), entries(std::move(e)) {}

    int N() const { return (1 << k) - 1; }
    long long n() const;                 // code length = sum of entries
    int l_min() const;
    int l_max() const;

    bool operator==(const DefiningVector& o) const { return k == o.k && entries == o.entries; }
    bool operator!=(const DefiningVector& o) const { return !(*this == o); }
    bool operator<(const DefiningVector& o) const { return entries < o.entries; }
};

// Multiset of entry values: ordered (value, multiplicity) pairs, values ascending.
struct TypeSignature {
    std::vector<std::pair<int, int>> pairs;

    bool operator==(const TypeSignature& o) const { return pairs == o.pairs; }
    bool operator<(const TypeSignature& o) const { return pairs < o.pairs; }
    // Renders as "]](0)_1|(1)_16|(2)_14]]".
    std::string to_string() const;
};

// W = P_k L^T with the derived quantities of the excess decomposition
// W = d*1 + Lambda, sigma = sum Lambda.
struct WeightVector {
    int k = 5;
    std::vector<long long> weights;

    long long d() const;                         // min weight
    long long sigma() const;                     // sum(w_i) - d * N
    std::vector<long long> lambda() const;       // W - d*1
};

DefiningVector parse_defining_vector(const std::string& text, int k = 5);
std::string format_defining_vector(const DefiningVector& l);   // digit string when all entries <= 9, else comma-separated

TypeSignature type_signature(const DefiningVector& l);

WeightVector weight_vector(const DefiningVector& l, const SpectralPair& sp);
WeightVector weight_vector(const DefiningVector& l);           // builds/caches the spectral pair

// sigma = 2^{k-1} n - d (2^k - 1); may be negative, which certifies infeasibility.
long long sigma(long long n, int k, long long d);

// Exact inverse of weight_vector via L^T = (1/2^{k-1}) (J - 2Q) W^T.
// Empty when any entry is non-integral or negative (the feasibility filter).
std::optional<DefiningVector> defining_vector_from_weights(const WeightVector& w);

// (l_min, L - l_min * 1).
std::pair<int, DefiningVector> normalize(const DefiningVector& l);

// L + m*1: juxtaposition with m simplex copies; every weight shifts by m*2^{k-1}.
DefiningVector juxtapose(const DefiningVector& l, int m);

// Point reduction through column p (0-based): merge the multiplicities of each
// pair {alpha, alpha ^ alpha_p} into one (k-1)-dimensional point, dropping the
// l_p copies of alpha_p itself.  Returns (l_p, reduced vector).  The reduced
// code has length n - l_p and minimum distance >= d.
std::pair<int, DefiningVector> reduce_at_point(const DefiningVector& l, int p);

// Append an overall parity column to a generator matrix.
BitMatrix extend_parity(const BitMatrix& g);

// k x n generator: l_i copies of column alpha_i, grouped in table order.
BitMatrix generator_from(const DefiningVector& l);

// True when the support of l does not span GF(2)^k (code dimension < k).
bool is_degenerate(const DefiningVector& l);

// Process-wide cached tables (built once, shared read-only).
const PointTable& point_table(int k);
const SpectralPair& spectral_pair(int k);

}  // namespace lcdscan
