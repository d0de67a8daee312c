// Bundled reference tables (the printed classification tables for the six
// optimal-code families plus the named in-text representatives) and the
// reproduction engine that reclassifies each family from scratch and
// reconciles every printed row against the computed equivalence classes.
//
// The bundled rows are carried verbatim, defects included.  Recomputed values
// are ground truth: where a printed row disagrees, the report lists both
// values as an erratum entry; a caption-level class-count mismatch is fatal.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcdscan/code_analysis.hpp"
#include "lcdscan/defining_vector.hpp"
#include "lcdscan/enumeration.hpp"
#include "lcdscan/equivalence.hpp"

namespace lcdscan {

// One printed row of a bundled classification table (ids 2..7).
struct FixtureRow {
    int table = 0;  // table id, 2..7
    int row = 0;    // 1-based position
    std::string vector_text;  // printed defining-vector digits, verbatim
    int h = 0;                // printed hull dimension
    // Printed enumerator as (exponent offset, coefficient) pairs; exponents in
    // the tables read "16s + offset", so the absolute weight at the family's
    // base parameter is 16*s0 + offset.
    std::vector<std::pair<int, int>> we_offsets;
    std::vector<std::string> flags;  // visible transcription defects, if any
};

// The normalized code family behind one classification table.
struct TableFamily {
    int id = 0;         // 2..7
    int t = 0;          // length residue: parent lengths are n = 31 s + t
    int s0 = 0;         // base parameter the printed data lives at
    int n = 0;          // normalized length  (31 c + t with c = s0 - l_min)
    int d = 0;          // normalized minimum distance, exact
    int max_entry = 0;  // stratum entry bound for the normalized vectors
    std::size_t caption_count = 0;  // class count claimed by the caption
};

// A named in-text representative ([44,5,22] and [48,5,24] case analyses).
struct NamedRep {
    int n = 0;
    std::string label;        // e.g. "L'_{1,1}"
    std::string vector_text;  // printed defining vector
    int h = 0;                // printed hull dimension
    std::vector<std::pair<int, int>> we_offsets;  // printed enumerator
};

// What the printed vector of a row turned out to be.
enum class RowVectorStatus {
    kOk,              // parses and is a member of the family
    kDuplicate,       // identical text to an earlier row of the same table
    kWrongParameters, // parses but has the wrong length or minimum distance
    kMalformed,       // does not parse as a 31-entry defining vector
};

// Reconciliation outcome for one printed row.
struct RowFinding {
    int row = 0;
    RowVectorStatus vector_status = RowVectorStatus::kOk;
    int matched_class = -1;           // index into the report's classification
    bool matched_by_profile = false;  // resolved via printed (h, enumerator)
    std::vector<std::string> diffs;   // erratum entries, printed vs recomputed
};

struct TableReport {
    TableFamily family;
    int s = 0;  // requested parameter (>= family.s0); affects rendering only
    Classification classification;  // full classification, true orbit classes
    std::size_t profile_count = 0;  // distinct (h, enumerator) over classes
    std::vector<RowFinding> rows;
    // Classes no printed row resolves to: inequivalent codes sharing a printed
    // row's (h, enumerator) profile, and classes whose type the table omits.
    std::vector<std::string> refinements;
    bool caption_ok = false;  // rows cover caption_count distinct classes and
                              // profile_count equals the caption
    bool fatal = false;       // caption-level count check failed
    std::vector<std::string> diffs;  // flattened row diffs + table-level notes
};

// Families and rows of the bundled tables.  fixture_rows honors the
// LCDSCAN_FIXTURES environment variable: a CSV file
// `table,row,defining_vector,h,weight_enumerator` (enumerator written as
// off:coeff pairs joined by '|') whose rows replace the bundled rows of every
// table id present in the file.
const TableFamily& table_family(int table_id);
std::vector<FixtureRow> fixture_rows(int table_id);

// The named [44,5,22] / [48,5,24] representatives (n selects the family).
std::vector<NamedRep> bundled_noted_reps(int n);

// Classifies the family behind table `table_id`, resolves every printed row
// to a computed class (by vector when sound, by printed profile otherwise),
// and reports per-row errata plus the classes the table does not list.
// `s` < 0 means the family's base parameter.
TableReport reproduce_table(int table_id, int s = -1, const EnumBudget& budget = {});

// Distinct (h, weight enumerator) profiles over a classification's classes —
// the granularity at which the bundled tables count "inequivalent" codes.
std::size_t profile_count(const Classification& cls);

// Renders a report as markdown (one table) or CSV rows; used by the CLI.
std::string table_report_markdown(const TableReport& report);
std::string table_report_csv(const TableReport& report);

}  // namespace lcdscan
