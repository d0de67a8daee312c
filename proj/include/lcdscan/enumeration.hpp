// Exhaustive enumeration of defining vectors subject to length, minimum
// distance, and entry-bound constraints.  The search runs over the N = 2^k - 1
// multiplicities l_p in depth-first order with sound pruning:
//
//   * per-lane reachable weight  w_i + min(R, max_entry * inc_i) >= d,
//   * per-lane forced weight     w_i + max(0, R - max_entry*(rem - inc_i)) <= cap,
//   * sum of forced weights      sum_i max(lb_i, d) <= 2^{k-1} n,
//   * remaining-sum feasibility  0 <= R <= max_entry * rem,
//
// where cap = 2^{k-1} n - (N-1) d is the largest weight any single nonzero
// codeword can take when all others weigh at least d.  The per-lane checks are
// evaluated by the runtime-dispatched kernels (see kernels.hpp).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "lcdscan/defining_vector.hpp"

namespace lcdscan {

struct SearchSpec {
    int k = 5;
    int n = 0;
    int d = 0;                   // target minimum distance, >= 1
    int max_entry = 0;           // 0 => use the derived bound
    int min_entry = 0;
    bool require_zero = false;   // keep only vectors with some entry == 0
    bool exact_distance = true;  // true: min weight == d; false: min weight >= d
    // Pin the first point's entry to 0 and enumerate only that slice of the
    // stratum.  Because GL(k,2) is transitive on the points, every equivalence
    // class with a zero entry meets the slice, so classification and the
    // minimum hull dimension stay exact; a class whose representative has z
    // zero entries contributes exactly orbit_size * z / N solutions to the
    // slice (double counting point-zero incidences over the orbit).  Cuts the
    // search tree roughly by the branching factor of the root.
    bool fix_zero = false;
    // Pin the first point's entry to this value (-1 = unpinned); fix_zero is
    // the v = 0 case.  The same transitivity argument applies: every class
    // with some entry equal to v meets the slice, so the slice's minimum hull
    // dimension equals that of the whole {l_max = v} branch when v is the
    // entry ceiling.
    int fix_first = -1;
};

struct EnumBudget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0.0;     // 0 = unlimited
    int threads = 1;
};

struct EnumStats {
    std::uint64_t nodes = 0;      // candidate assignments examined
    std::uint64_t solutions = 0;  // vectors accepted
    bool budget_exhausted = false;
    double seconds = 0.0;
};

struct SolutionSet {
    SearchSpec spec;
    std::vector<DefiningVector> vectors;
    EnumStats stats;
};

// Largest multiplicity any point can carry in an [n,k,>=d] solution:
// min(floor((d + sigma)/2^{k-1}), n - g_{k-1}(d)), at least 0.
int derived_max_entry(int n, int k, int d);

// Collects every solution.  Deterministic output order (lexicographic by
// entries) for any thread count.
SolutionSet enumerate_defining_vectors(const SearchSpec& spec, const EnumBudget& budget = {});

// Streams solutions to `visit`; return false from the callback to stop early.
// With budget.threads > 1 the callback is invoked under a mutex and the
// delivery order across subtrees is unspecified.
EnumStats for_each_defining_vector(const SearchSpec& spec, const EnumBudget& budget,
                                   const std::function<bool(const DefiningVector&)>& visit);

// Histogram of hull dimensions h = 0..k over all solutions.
struct HullHistogram {
    std::array<std::uint64_t, 9> count{};
    std::uint64_t total = 0;
    // Smallest h with count > 0, or -1 when the solution set is empty.
    int min_h() const;
};

HullHistogram hull_histogram(const SearchSpec& spec, const EnumBudget& budget = {},
                             EnumStats* stats = nullptr);

// First solution with hull dimension 0, in lexicographic order.  Always runs
// single-threaded so the witness is reproducible.
std::optional<DefiningVector> find_lcd_vector(const SearchSpec& spec, const EnumBudget& budget = {},
                                              EnumStats* stats = nullptr);

// Independent minimum-distance check: builds the generator matrix and scans
// all 2^k - 1 nonzero messages by row XOR + popcount.  Deliberately avoids the
// spectral identity the enumeration relies on.
int oracle_min_distance(const DefiningVector& l);

// Text round-trip: '#'-prefixed header lines carrying the spec, then one
// formatted defining vector per line.
void write_solutions(std::ostream& os, const SolutionSet& set);
SolutionSet read_solutions(std::istream& is);

}  // namespace lcdscan
