// Machine-checkable nonexistence certificates for LCD codes at given (n, d):
// a case analysis over defining-vector shapes in which every branch either is
// empty, carries an enumerated hull-dimension floor, or defers to a smaller
// certified instance (dimension-reduced or parity-extended).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcdscan/defining_vector.hpp"
#include "lcdscan/enumeration.hpp"
#include "lcdscan/equivalence.hpp"

namespace lcdscan {

// One branch of the case analysis.
struct Stratum {
    std::string description;  // e.g. "l_max = s+2: reduced [38,4,>=20]"
    // "empty"          : the branch admits no code (search returned nothing)
    // "enumeration"    : exhaustive scan of the branch, min_h from histogram
    // "classification" : same, plus equivalence classes with audit
    // "reduction"      : bound inherited from a [n-m, k-1, >=d] family
    // "extension"      : bound inherited from the parity-extended instance
    std::string method;
    int min_h = -1;  // -1 when the branch is empty
    bool exhausted = false;  // the branch hit its budget and claims no floor
    SearchSpec spec{};                      // the search this branch ran, if any
    HullHistogram histogram{};              // filled for enumeration/classification
    std::vector<EquivalenceClass> classes;  // filled for classification
};

// Outcome of an LCD witness search at (n, d): a defining vector whose code is
// LCD with minimum distance at least d, re-validated against the generator-
// matrix oracle, or nothing within budget.
struct WitnessResult {
    int n = 0;
    int d = 0;
    std::optional<DefiningVector> witness;
    EnumStats stats;
    int phase = -1;  // which search phase produced the hit (0..3), -1 = none
};

struct Certificate {
    int n = 0;
    int k = 5;
    int d = 0;
    int s = 0;  // n = 31 s + t, 0 <= t <= 30
    int t = 0;
    std::vector<Stratum> strata;
    int min_h = -1;             // over the nonempty strata; -1 = no code exists
    bool lcd_nonexistent = false;
    bool code_exists = true;    // false when every branch came back empty
    std::optional<WitnessResult> witness;  // companion LCD witness at d-1, if attached
    std::vector<std::string> paper_diffs;  // discrepancies vs bundled reference tables
    std::vector<std::string> notes;  // audit trail (pigeonhole bounds, lemmas used)
};

struct CertifyOptions {
    EnumBudget budget{};
    bool classify_strata = false;  // attach equivalence classes to k=5 strata
};

// Builds the case analysis for [n,5,d]:
//   - branches l_max = m for m above the juxtaposition range reduce to the
//     [n-m, 4, >=d] family (hull floor minus one, valid when the floor is >= 2);
//   - branches l_min = s-c, l_max <= s+1 normalize to [31c+t, 5, d-16(s-c)]
//     with entries <= c+1 and a forced zero, enumerated exhaustively;
//   - when d is odd and direct branches cannot reach a floor of 1, the parity
//     extension [n+1, 5, d+1] is certified instead and its floor lowered by one.
// Results are memoized per (n, d) within the process.
Certificate certify_no_lcd(int n, int d, const CertifyOptions& options = {});

// Serializes the certificate with the stable field set
// {n,k,d,s,t,strata[{description,method,min_h,classes}],min_h,lcd_nonexistent,
//  witness,paper_diffs}.
std::string certificate_to_json(const Certificate& cert, int indent = 2);

// Deterministic phased search for an LCD [n,5,d] code: identity-type probes,
// local perturbations of bundled seeds, seeded randomized repair, then a
// bounded exhaustive scan.  `seed` fixes the randomized phase.
WitnessResult search_lcd_witness(int n, int d, std::uint64_t seed = 0,
                                 const EnumBudget& budget = {});

}  // namespace lcdscan
