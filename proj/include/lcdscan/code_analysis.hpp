// Code-level predicates and quantities: hull dimension, LCD/SO tests, weight
// enumerators, the Griesmer bound, and the optimal-distance tables d_a / d_l.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcdscan/bit_matrix.hpp"
#include "lcdscan/defining_vector.hpp"

namespace lcdscan {

// Histogram weight -> count over the 2^k - 1 nonzero codewords.  When
// symbolic_base is nonzero the terms are stored with absolute weights but may
// be rendered with exponents split as "16s+c" (k=5 reports); symbolic_base
// carries the 16*s part.
struct WeightEnumerator {
    std::map<long long, long long> terms;
    long long symbolic_base = 0;

    long long total() const;                       // sum of counts (nonzero words)
    bool operator==(const WeightEnumerator& o) const { return terms == o.terms; }
    // "1+23y^22+7y^24+1y^30", or with symbolic_base=16: "1+23y^{16s+6}+...".
    std::string to_string(bool symbolic = false) const;
};

struct CodeProfile {
    long long n = 0;
    int k = 0;
    long long d = 0;
    int h = 0;
    bool is_lcd = false;
    bool is_so = false;
    bool degenerate = false;
    WeightEnumerator weight_enumerator;
};

// k - rank(G G^T).  For a generator without full row rank the value refers to
// the spanning row set; callers detect that case via CodeProfile.degenerate.
int hull_dimension(const BitMatrix& g);

bool is_lcd(const BitMatrix& g);              // gram invertible
bool is_self_orthogonal(const BitMatrix& g);  // gram == 0

// Hull dimension straight from a defining vector: the Gram entry (r,c) is the
// parity of the total multiplicity on points with both bits r and c set, so
// only L mod 2 matters.  Agrees with hull_dimension(generator_from(l)).
int hull_dimension(const DefiningVector& l);

// Same computation from just the parity bits (bit j of odd_mask = l_{j+1} mod
// 2); allocation-free for enumeration hot loops.  k in [2,6].
int hull_dimension_bits(std::uint32_t odd_mask, int k);

WeightEnumerator weight_enumerator(const DefiningVector& l);

CodeProfile analyze(const DefiningVector& l);

// Griesmer sum n(k,d) = sum_{i<k} ceil(d / 2^i); requires d >= 1.
long long griesmer_length(int k, long long d);

// Largest d with griesmer_length(k,d) <= n (the k=5 attainment range is
// n >= 14; smaller n are handled by the oracle table below).
long long griesmer_max_distance(int k, long long n);

// Optimal-distance rows for [n,5] codes.  status records where the value
// comes from: "griesmer" (bound attained), "oracle" (exhaustive search over
// defining vectors, n <= 13), "verified" (nonexistence certified by this
// toolkit's engine at d_l + 1), or "cited" (surveyed values).
struct BoundsRow {
    long long n = 0;
    int s = 0;
    int t = 0;
    long long d_a = 0;
    long long d_l = 0;
    std::string status;

    std::string to_csv() const;  // "n,s,t,d_a,d_l,status"
};

long long d_a(long long n);   // n >= 5, k = 5
long long d_l(long long n);   // n >= 5, k = 5
BoundsRow bounds_row(long long n);

// 16s + offset tables for t = 0..30 (valid for n = 31s + t >= 14).
extern const int kDaOffset[31];
extern const int kDlOffset[31];

// Exhaustively derived [n,5] values for 5 <= n <= 13 (computed once by the
// enumeration engine and frozen here; re-derived by tests).
extern const long long kSmallDa[9];
extern const long long kSmallDl[9];

}  // namespace lcdscan
