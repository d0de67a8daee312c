#include "lcdscan/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lcdscan {

namespace {

struct RawFixtureRow {
    int table;
    int row;
    const char* vector_text;
    int h;
    const char* we;     // "off:coeff,off:coeff"
    const char* flags;  // semicolon-joined, may be empty
};

struct RawNamedRep {
    int n;
    const char* label;
    const char* vector_text;
    int h;
    const char* we;
};

#include "fixtures_data.inc"

const TableFamily kFamilies[] = {
    // id   t  s0   n   d  max  caption
    {2, 10, 1, 41, 20, 2, 19},
    {3, 10, 2, 72, 36, 3, 13},
    {4, 14, 1, 45, 22, 2, 21},
    {5, 14, 2, 76, 38, 3, 10},
    {6, 18, 1, 49, 24, 2, 15},
    {7, 18, 2, 80, 40, 3, 7},
};

std::vector<std::pair<int, int>> parse_we_pairs(const std::string& text, char sep) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) continue;
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("enumerator term '" + tok + "' is not off:coeff");
        out.emplace_back(std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> split_flags(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

FixtureRow to_fixture_row(const RawFixtureRow& raw) {
    FixtureRow row;
    row.table = raw.table;
    row.row = raw.row;
    row.vector_text = raw.vector_text;
    row.h = raw.h;
    row.we_offsets = parse_we_pairs(raw.we, ',');
    row.flags = split_flags(raw.flags);
    return row;
}

// CSV override: `table,row,defining_vector,h,weight_enumerator` with the
// enumerator's off:coeff terms joined by '|'.  Tables present in the file
// replace their bundled rows entirely.
std::map<int, std::vector<FixtureRow>> load_override(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture override: " + path);
    std::map<int, std::vector<FixtureRow>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.rfind("table,", 0) == 0) continue;  // header
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 5 fields, got " + std::to_string(fields.size()));
        FixtureRow row;
        row.table = std::stoi(fields[0]);
        row.row = std::stoi(fields[1]);
        row.vector_text = fields[2];
        row.h = std::stoi(fields[3]);
        row.we_offsets = parse_we_pairs(fields[4], '|');
        rows[row.table].push_back(row);
    }
    return rows;
}

std::string render_we_offsets(const std::vector<std::pair<int, int>>& pairs) {
    std::string out;
    for (const auto& [off, coeff] : pairs) {
        if (!out.empty()) out += ",";
        out += std::to_string(off) + ":" + std::to_string(coeff);
    }
    return out;
}

std::vector<std::pair<int, int>> we_to_offsets(const WeightEnumerator& we, int base) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [w, c] : we.terms) out.emplace_back(static_cast<int>(w - base), static_cast<int>(c));
    return out;
}

std::string render_type(const TypeSignature& type) { return type.to_string(); }

}  // namespace

const TableFamily& table_family(int table_id) {
    for (const auto& fam : kFamilies)
        if (fam.id == table_id) return fam;
    throw std::out_of_range("no bundled classification table with id " + std::to_string(table_id));
}

std::vector<FixtureRow> fixture_rows(int table_id) {
    table_family(table_id);  // validate id
    if (const char* env = std::getenv("LCDSCAN_FIXTURES")) {
        auto override_rows = load_override(env);
        auto it = override_rows.find(table_id);
        if (it != override_rows.end()) return it->second;
    }
    std::vector<FixtureRow> rows;
    for (const auto& raw : kBundledRows)
        if (raw.table == table_id) rows.push_back(to_fixture_row(raw));
    return rows;
}

std::vector<NamedRep> bundled_noted_reps(int n) {
    std::vector<NamedRep> reps;
    for (const auto& raw : kBundledReps) {
        if (raw.n != n) continue;
        NamedRep rep;
        rep.n = raw.n;
        rep.label = raw.label;
        rep.vector_text = raw.vector_text;
        rep.h = raw.h;
        rep.we_offsets = parse_we_pairs(raw.we, ',');
        reps.push_back(rep);
    }
    return reps;
}

std::size_t profile_count(const Classification& cls) {
    std::set<std::pair<int, std::map<long long, long long>>> profiles;
    for (const auto& c : cls.classes) profiles.insert({c.h, c.we.terms});
    return profiles.size();
}

TableReport reproduce_table(int table_id, int s, const EnumBudget& budget) {
    TableReport report;
    report.family = table_family(table_id);
    report.s = s < 0 ? report.family.s0 : s;
    if (report.s < report.family.s0)
        throw std::invalid_argument("table " + std::to_string(table_id) + " requires s >= " +
                                    std::to_string(report.family.s0));
    const int base = 16 * report.family.s0;  // absolute weight = base + printed offset

    SearchSpec spec;
    spec.n = report.family.n;
    spec.k = 5;
    spec.d = report.family.d;
    spec.exact_distance = true;
    spec.max_entry = report.family.max_entry;
    spec.require_zero = true;
    spec.fix_zero = true;
    report.classification = classify_cached(spec, budget);
    const auto& classes = report.classification.classes;
    report.profile_count = profile_count(report.classification);

    const std::vector<FixtureRow> rows = fixture_rows(table_id);
    std::vector<bool> taken(classes.size(), false);

    auto class_blurb = [&](std::size_t i) {
        const auto& c = classes[i];
        return format_defining_vector(c.representative) + " h=" + std::to_string(c.h) +
               " we=" + render_we_offsets(we_to_offsets(c.we, base)) + " type=" + render_type(c.type);
    };

    std::set<std::string> seen_vectors;
    for (const auto& row : rows) {
        RowFinding finding;
        finding.row = row.row;
        const bool duplicate = !seen_vectors.insert(row.vector_text).second;

        // Stage 1: take the printed vector at face value.
        DefiningVector parsed;
        bool parse_ok = false;
        std::string defect;
        try {
            parsed = parse_defining_vector(row.vector_text, 5);
            parse_ok = true;
        } catch (const std::exception& e) {
            defect = e.what();
            finding.vector_status = RowVectorStatus::kMalformed;
        }
        CodeProfile profile;
        if (parse_ok) {
            profile = analyze(parsed);
            if (profile.n != report.family.n || profile.d != report.family.d ||
                parsed.l_max() > report.family.max_entry || parsed.l_min() != 0) {
                finding.vector_status = RowVectorStatus::kWrongParameters;
                defect = "n=" + std::to_string(profile.n) + " d=" + std::to_string(profile.d) +
                         " entries in [" + std::to_string(parsed.l_min()) + "," +
                         std::to_string(parsed.l_max()) + "]";
            } else if (duplicate) {
                finding.vector_status = RowVectorStatus::kDuplicate;
            }
        }

        if (finding.vector_status == RowVectorStatus::kOk) {
            // Sound vector: locate its orbit among the computed classes.
            for (std::size_t i = 0; i < classes.size(); ++i) {
                const auto& c = classes[i];
                if (c.h != profile.h || !(c.we == profile.weight_enumerator)) continue;
                if (type_signature(parsed) == c.type && are_equivalent(parsed, c.representative)) {
                    finding.matched_class = static_cast<int>(i);
                    break;
                }
            }
            if (finding.matched_class < 0) {
                finding.diffs.push_back("row " + std::to_string(row.row) +
                                        ": sound vector not equivalent to any computed class (" +
                                        row.vector_text + ")");
            } else if (taken[finding.matched_class]) {
                finding.diffs.push_back("row " + std::to_string(row.row) +
                                        ": vector lands in the same class as an earlier row");
            } else {
                taken[finding.matched_class] = true;
            }
            if (finding.matched_class >= 0) {
                const auto& c = classes[finding.matched_class];
                if (row.h != c.h)
                    finding.diffs.push_back("row " + std::to_string(row.row) + ": printed h=" +
                                            std::to_string(row.h) + ", recomputed h=" +
                                            std::to_string(c.h));
                const auto computed = we_to_offsets(c.we, base);
                if (computed != row.we_offsets)
                    finding.diffs.push_back("row " + std::to_string(row.row) +
                                            ": printed enumerator " + render_we_offsets(row.we_offsets) +
                                            ", recomputed " + render_we_offsets(computed));
            }
        } else {
            // Defective vector: resolve by the printed (h, enumerator) profile.
            const char* kind =
                finding.vector_status == RowVectorStatus::kDuplicate      ? "duplicates an earlier row's vector"
                : finding.vector_status == RowVectorStatus::kMalformed    ? "does not parse"
                                                                          : "has wrong parameters";
            std::string diff = "row " + std::to_string(row.row) + ": printed vector " + kind;
            if (!defect.empty()) diff += " (" + defect + ")";
            int exact = -1, nearest = -1;
            long long nearest_dist = -1;
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (taken[i] || classes[i].h != row.h) continue;
                const auto computed = we_to_offsets(classes[i].we, base);
                if (computed == row.we_offsets) {
                    exact = static_cast<int>(i);
                    break;
                }
                // Coefficient distance on the union of supports; tolerates
                // printed coefficient slips like a 21 that should read 20.
                std::map<int, long long> delta;
                for (const auto& [o, c] : computed) delta[o] += c;
                for (const auto& [o, c] : row.we_offsets) delta[o] -= c;
                long long dist = 0;
                for (const auto& [o, dv] : delta) dist += dv < 0 ? -dv : dv;
                if (nearest < 0 || dist < nearest_dist) {
                    nearest = static_cast<int>(i);
                    nearest_dist = dist;
                }
            }
            if (exact >= 0) {
                finding.matched_class = exact;
                finding.matched_by_profile = true;
                taken[exact] = true;
                finding.diffs.push_back(diff + "; resolved by printed profile to class " +
                                        class_blurb(exact));
            } else if (nearest >= 0 && nearest_dist <= 2) {
                finding.matched_class = nearest;
                finding.matched_by_profile = true;
                taken[nearest] = true;
                finding.diffs.push_back(diff + "; printed enumerator " +
                                        render_we_offsets(row.we_offsets) +
                                        " off by " + std::to_string(nearest_dist) +
                                        "; resolved to class " + class_blurb(nearest));
            } else {
                finding.diffs.push_back(diff + "; no computed class matches the printed profile");
            }
        }
        report.rows.push_back(std::move(finding));
    }

    // Classes the printed rows never reached.
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (taken[i]) continue;
        std::string note = "class not listed: " + class_blurb(i);
        // Same-profile partner among the listed classes, if any.
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (j == i || !taken[j]) continue;
            if (classes[j].h == classes[i].h && classes[j].we == classes[i].we) {
                note += "; inequivalent to the listed class with the same (h, enumerator) profile (stabilizers " +
                        std::to_string(classes[i].stabilizer) + " vs " +
                        std::to_string(classes[j].stabilizer) + ")";
                break;
            }
        }
        bool type_listed = false;
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (j != i && taken[j] && classes[j].type == classes[i].type) type_listed = true;
        if (!type_listed) note += "; its entry type appears nowhere in the table";
        report.refinements.push_back(std::move(note));
    }

    std::size_t resolved = 0;
    for (const auto& f : report.rows) resolved += f.matched_class >= 0;
    std::set<int> distinct;
    for (const auto& f : report.rows)
        if (f.matched_class >= 0) distinct.insert(f.matched_class);
    report.caption_ok = distinct.size() == report.family.caption_count &&
                        report.profile_count == report.family.caption_count &&
                        resolved == report.rows.size();
    report.fatal = !report.caption_ok;

    for (const auto& f : report.rows)
        for (const auto& d : f.diffs) report.diffs.push_back(d);
    if (classes.size() != report.family.caption_count)
        report.diffs.push_back(
            "table lists " + std::to_string(report.family.caption_count) +
            " classes; full classification finds " + std::to_string(classes.size()) +
            " (distinct (h, enumerator) profiles: " + std::to_string(report.profile_count) + ")");
    return report;
}

std::string table_report_markdown(const TableReport& report) {
    std::ostringstream out;
    const auto& fam = report.family;
    const long long parent_n = 31LL * report.s + fam.t;
    const long long parent_d = fam.d + 16LL * (report.s - fam.s0);
    out << "## Table " << fam.id << " at s=" << report.s << ": [" << parent_n << ",5," << parent_d
        << "] via normalized [" << fam.n << ",5," << fam.d << "]\n\n";
    out << "| row | defining vector | printed h | printed enumerator | status |\n";
    out << "|-----|-----------------|-----------|--------------------|--------|\n";
    const auto rows = fixture_rows(fam.id);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& f = report.rows[i];
        std::string status;
        switch (f.vector_status) {
            case RowVectorStatus::kOk: status = f.diffs.empty() ? "ok" : "value erratum"; break;
            case RowVectorStatus::kDuplicate: status = "duplicate vector"; break;
            case RowVectorStatus::kWrongParameters: status = "invalid vector"; break;
            case RowVectorStatus::kMalformed: status = "malformed vector"; break;
        }
        if (f.matched_by_profile) status += ", resolved by profile";
        std::string we;
        for (const auto& [off, c] : row.we_offsets) {
            if (!we.empty()) we += "+";
            we += std::to_string(c) + "y^{16s+" + std::to_string(off) + "}";
        }
        out << "| " << row.row << " | " << row.vector_text << " | " << row.h << " | 1+" << we << " | "
            << status << " |\n";
    }
    out << "\ncaption count " << fam.caption_count << ", computed classes "
        << report.classification.classes.size() << ", profiles " << report.profile_count
        << (report.caption_ok ? " — caption reproduced" : " — CAPTION MISMATCH") << "\n";
    if (!report.diffs.empty()) {
        out << "\nerrata:\n";
        for (const auto& d : report.diffs) out << "- " << d << "\n";
    }
    if (!report.refinements.empty()) {
        out << "\nrefinements (classes beyond the listed rows):\n";
        for (const auto& r : report.refinements) out << "- " << r << "\n";
    }
    return out.str();
}

std::string table_report_csv(const TableReport& report) {
    std::ostringstream out;
    out << "table,row,defining_vector,printed_h,printed_we,status,matched_class,diffs\n";
    const auto rows = fixture_rows(report.family.id);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& f = report.rows[i];
        std::string status;
        switch (f.vector_status) {
            case RowVectorStatus::kOk: status = "ok"; break;
            case RowVectorStatus::kDuplicate: status = "duplicate"; break;
            case RowVectorStatus::kWrongParameters: status = "invalid"; break;
            case RowVectorStatus::kMalformed: status = "malformed"; break;
        }
        std::string diffs;
        for (const auto& d : f.diffs) {
            if (!diffs.empty()) diffs += "; ";
            diffs += d;
        }
        out << report.family.id << "," << row.row << "," << row.vector_text << "," << row.h << ","
            << render_we_offsets(row.we_offsets) << "," << status << "," << f.matched_class << ",\""
            << diffs << "\"\n";
    }
    return out.str();
}

}  // namespace lcdscan
