// Monomial equivalence of codes given by defining vectors.  Since all columns
// are simplex points, two codes are equivalent exactly when an invertible
// k x k matrix over GF(2) permutes one multiplicity vector into the other, so
// equivalence testing, stabilizer counting and classification all reduce to
// search over GL(k,2) acting on the point set.
#pragma once

#include <cstdint>
#include <vector>

#include "lcdscan/code_analysis.hpp"
#include "lcdscan/defining_vector.hpp"
#include "lcdscan/enumeration.hpp"

namespace lcdscan {

// Row-bitmask representation of an invertible matrix over GF(2): bit j of
// rows[i] is the entry in row i, column j.
struct GLMatrix {
    int k = 5;
    std::uint8_t rows[8] = {0};
};

// |GL(k,2)| = prod_{i<k} (2^k - 2^i); 9 999 360 for k = 5, 20160 for k = 4.
std::uint64_t gl_order(int k);

bool is_invertible(const GLMatrix& a);

// The point permutation induced by a: image[p] for p in [1, 2^k - 1], where
// point p is the column whose bits are the binary digits of p.  image[0] = 0.
std::vector<int> point_permutation(const GLMatrix& a);

// L'[a(p)] = L[p]: the defining vector of the transformed code.
DefiningVector apply_transform(const GLMatrix& a, const DefiningVector& l);

// Uniform-ish random invertible matrix (rejection sampling), reproducible
// from the generator state.
GLMatrix random_gl(int k, std::uint64_t& state);

// Backtracking over images of the basis points with per-point multiplicity
// consistency; complete and exact.
bool are_equivalent(const DefiningVector& a, const DefiningVector& b);

// Number of elements of GL(k,2) fixing l; divides gl_order(k).
std::uint64_t stabilizer_order(const DefiningVector& l);

// Same quantity by scanning every invertible matrix (2^{k^2} candidates, so
// k <= 5 only); slow independent oracle for stabilizer_order.
std::uint64_t stabilizer_order_scan(const DefiningVector& l);

// All 2^{k^2} matrices filtered to the invertible ones; practical for k <= 4
// (20160 elements).  Used as an independent oracle against the backtracking
// routines.
std::vector<GLMatrix> full_gl(int k);

struct EquivalenceClass {
    DefiningVector representative;   // first member seen in enumeration order
    std::uint64_t member_count = 0;  // members inside the enumerated stratum
    std::uint64_t stabilizer = 0;    // |Aut(representative)|
    std::uint64_t orbit_size = 0;    // gl_order(k) / stabilizer
    int h = 0;                       // hull dimension (equivalence invariant)
    TypeSignature type;              // entry multiset (equivalence invariant)
    WeightEnumerator we;             // weight enumerator (equivalence invariant)
};

struct Classification {
    SearchSpec spec;
    std::vector<EquivalenceClass> classes;  // ordered by first appearance
    EnumStats stats;
    // Full-stratum solution count: equals stats.solutions for a plain run.
    // Under spec.fix_zero only the zero-pinned slice is enumerated and this is
    // recovered as the sum of orbit sizes.
    std::uint64_t stratum_size = 0;
    // True when the run exhausted the search space and every class passed the
    // orbit-stabilizer audit: member_count == orbit_size (or, with fix_zero,
    // member_count * N == orbit_size * z for a representative with z zeros)
    // and the expected counts sum to the solution total.  A stratum is closed
    // under GL(k,2) because every search constraint is an invariant of the
    // action, so any failure indicates a bug rather than an unlucky input.
    bool verified = false;
};

// Enumerates the stratum and buckets solutions into equivalence classes by
// invariant fingerprint plus exact equivalence tests.
Classification classify(const SearchSpec& spec, const EnumBudget& budget = {});

// classify() behind a process-wide cache keyed by the search spec, so table
// reproduction and certification share one enumeration per stratum.  The
// budget only applies to a cache miss; an unverified (budget-truncated) entry
// is recomputed on the next call rather than served stale.
const Classification& classify_cached(const SearchSpec& spec, const EnumBudget& budget = {});

// The cached classification for `spec` if a verified one is already in
// memory, else nullptr.  Never computes.
const Classification* classify_cached_peek(const SearchSpec& spec);

}  // namespace lcdscan
