// lcdscan: command-line surface over the defining-vector toolkit.
//
// Commands: analyze | enumerate | classify | certify | table | witness.
// Output formats: json | csv | markdown.  Exit codes: 0 success, 1 usage
// error, 2 search budget exhausted, 3 fatal reference-table mismatch.
//
// A line-oriented key=value config file (budgets, seed, fixture path) can be
// passed with --config; command-line flags override file values.  The
// LCDSCAN_FIXTURES environment variable (or --fixtures) points at a CSV
// replacing the bundled table rows: table,row,defining_vector,h,we.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcdscan/certify.hpp"
#include "lcdscan/code_analysis.hpp"
#include "lcdscan/defining_vector.hpp"
#include "lcdscan/enumeration.hpp"
#include "lcdscan/equivalence.hpp"
#include "lcdscan/fixtures.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitFixtureFatal = 3;

struct GlobalOptions {
    std::string format = "markdown";
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
    int threads = 1;
    std::uint64_t seed = 0;
    std::string fixtures;
    std::string output;

    lcdscan::EnumBudget budget() const { return {max_nodes, max_seconds, threads}; }
};

// Writes to --output when given, else stdout.
void deliver(const GlobalOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

ordered_json we_json(const lcdscan::WeightEnumerator& we) {
    ordered_json j = ordered_json::object();
    for (const auto& [w, c] : we.terms) j[std::to_string(w)] = c;
    return j;
}

// ---- analyze ----------------------------------------------------------------

int cmd_analyze(const GlobalOptions& opt, const std::string& vector_text, int k) {
    const lcdscan::DefiningVector l = lcdscan::parse_defining_vector(vector_text, k);
    const lcdscan::CodeProfile p = lcdscan::analyze(l);
    if (opt.format == "json") {
        ordered_json j;
        j["defining_vector"] = lcdscan::format_defining_vector(l);
        j["type"] = lcdscan::type_signature(l).to_string();
        j["n"] = p.n;
        j["k"] = p.k;
        j["d"] = p.d;
        j["h"] = p.h;
        j["is_lcd"] = p.is_lcd;
        j["is_so"] = p.is_so;
        j["degenerate"] = p.degenerate;
        j["weight_enumerator"] = we_json(p.weight_enumerator);
        deliver(opt, j.dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "n,k,d,h,is_lcd,is_so,degenerate,weight_enumerator\n";
        os << p.n << ',' << p.k << ',' << p.d << ',' << p.h << ',' << p.is_lcd << ','
           << p.is_so << ',' << p.degenerate << ',' << p.weight_enumerator.to_string(false);
        deliver(opt, os.str());
    } else {
        std::ostringstream os;
        os << "defining vector: " << lcdscan::format_defining_vector(l) << "\n"
           << "type:            " << lcdscan::type_signature(l).to_string() << "\n"
           << "parameters:      [" << p.n << "," << p.k << "," << p.d << "]\n"
           << "hull dimension:  " << p.h << (p.is_lcd ? "  (LCD)" : "")
           << (p.is_so ? "  (self-orthogonal)" : "") << "\n"
           << "weight enum.:    " << p.weight_enumerator.to_string(false);
        deliver(opt, os.str());
    }
    return kExitOk;
}

// ---- enumerate / classify -----------------------------------------------------

lcdscan::SearchSpec make_spec(int n, int d, int k, int max_entry, int min_entry,
                              bool require_zero, bool fix_zero, bool at_least) {
    lcdscan::SearchSpec spec;
    spec.k = k;
    spec.n = n;
    spec.d = d;
    spec.max_entry = max_entry;
    spec.min_entry = min_entry;
    spec.require_zero = require_zero;
    spec.fix_zero = fix_zero;
    spec.exact_distance = !at_least;
    return spec;
}

int cmd_enumerate(const GlobalOptions& opt, const lcdscan::SearchSpec& spec, bool list) {
    int exit_code = kExitOk;
    if (list) {
        const lcdscan::SolutionSet set = lcdscan::enumerate_defining_vectors(spec, opt.budget());
        if (set.stats.budget_exhausted) exit_code = kExitBudget;
        if (opt.format == "json") {
            ordered_json j;
            j["n"] = spec.n;
            j["k"] = spec.k;
            j["d"] = spec.d;
            j["exact_distance"] = spec.exact_distance;
            j["max_entry"] = spec.max_entry;
            j["min_entry"] = spec.min_entry;
            j["require_zero"] = spec.require_zero;
            j["fix_zero"] = spec.fix_zero;
            j["total"] = set.vectors.size();
            j["budget_exhausted"] = set.stats.budget_exhausted;
            j["solutions"] = ordered_json::array();
            for (const auto& v : set.vectors)
                j["solutions"].push_back(lcdscan::format_defining_vector(v));
            deliver(opt, j.dump(2));
        } else {
            std::ostringstream os;
            lcdscan::write_solutions(os, set);
            deliver(opt, os.str());
        }
        return exit_code;
    }
    lcdscan::EnumStats stats;
    const lcdscan::HullHistogram hist = lcdscan::hull_histogram(spec, opt.budget(), &stats);
    if (stats.budget_exhausted) exit_code = kExitBudget;
    if (opt.format == "json") {
        ordered_json j;
        j["n"] = spec.n;
        j["k"] = spec.k;
        j["d"] = spec.d;
        j["exact_distance"] = spec.exact_distance;
        j["max_entry"] = spec.max_entry;
        j["min_entry"] = spec.min_entry;
        j["require_zero"] = spec.require_zero;
        j["fix_zero"] = spec.fix_zero;
        j["total"] = hist.total;
        j["min_h"] = hist.min_h();
        j["budget_exhausted"] = stats.budget_exhausted;
        j["hull_histogram"] = ordered_json::object();
        for (std::size_t h = 0; h < hist.count.size(); ++h)
            if (hist.count[h]) j["hull_histogram"][std::to_string(h)] = hist.count[h];
        deliver(opt, j.dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "h,count\n";
        for (std::size_t h = 0; h < hist.count.size(); ++h)
            if (hist.count[h]) os << h << ',' << hist.count[h] << '\n';
        deliver(opt, os.str());
    } else {
        std::ostringstream os;
        os << "[" << spec.n << "," << spec.k << "," << (spec.exact_distance ? "" : ">=") << spec.d
           << "] max_entry=" << spec.max_entry << " min_entry=" << spec.min_entry
           << (spec.require_zero ? " require_zero" : "") << (spec.fix_zero ? " fix_zero" : "")
           << "\n";
        os << "solutions: " << hist.total;
        if (stats.budget_exhausted) os << "  (budget exhausted, lower bound)";
        os << "\nhull histogram:";
        for (std::size_t h = 0; h < hist.count.size(); ++h)
            if (hist.count[h]) os << "  h=" << h << ": " << hist.count[h];
        deliver(opt, os.str());
    }
    return exit_code;
}

int cmd_classify(const GlobalOptions& opt, const lcdscan::SearchSpec& spec) {
    const lcdscan::Classification& cls = lcdscan::classify_cached(spec, opt.budget());
    const int exit_code = cls.stats.budget_exhausted ? kExitBudget : kExitOk;
    if (opt.format == "json") {
        ordered_json j;
        j["n"] = spec.n;
        j["k"] = spec.k;
        j["d"] = spec.d;
        j["exact_distance"] = spec.exact_distance;
        j["max_entry"] = spec.max_entry;
        j["require_zero"] = spec.require_zero;
        j["class_count"] = cls.classes.size();
        j["profile_count"] = lcdscan::profile_count(cls);
        j["stratum_size"] = cls.stratum_size;
        j["verified"] = cls.verified;
        j["classes"] = ordered_json::array();
        for (const auto& c : cls.classes) {
            ordered_json jc;
            jc["representative"] = lcdscan::format_defining_vector(c.representative);
            jc["h"] = c.h;
            jc["weight_enumerator"] = c.we.to_string(false);
            jc["member_count"] = c.member_count;
            jc["orbit_size"] = c.orbit_size;
            jc["type"] = c.type.to_string();
            jc["stabilizer_order"] = c.stabilizer;
            j["classes"].push_back(std::move(jc));
        }
        deliver(opt, j.dump(2));
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "class_id,representative,member_count,orbit_size,h,weight_enumerator\n";
        for (std::size_t i = 0; i < cls.classes.size(); ++i) {
            const auto& c = cls.classes[i];
            os << i << ',' << lcdscan::format_defining_vector(c.representative) << ','
               << c.member_count << ',' << c.orbit_size << ',' << c.h << ','
               << c.we.to_string(false) << '\n';
        }
        deliver(opt, os.str());
    } else {
        std::ostringstream os;
        os << "[" << spec.n << "," << spec.k << "," << (spec.exact_distance ? "" : ">=") << spec.d
           << "] max_entry=" << spec.max_entry << (spec.require_zero ? " require_zero" : "")
           << ": " << cls.classes.size() << " classes ("
           << lcdscan::profile_count(cls) << " distinct (h, enumerator) profiles)\n\n";
        os << "| class | representative | h | orbit | members | type | weight enumerator |\n";
        os << "|-------|----------------|---|-------|---------|------|-------------------|\n";
        for (std::size_t i = 0; i < cls.classes.size(); ++i) {
            const auto& c = cls.classes[i];
            os << "| " << i << " | " << lcdscan::format_defining_vector(c.representative) << " | "
               << c.h << " | " << c.orbit_size << " | " << c.member_count << " | "
               << c.type.to_string() << " | " << c.we.to_string(false) << " |\n";
        }
        deliver(opt, os.str());
    }
    return exit_code;
}

// ---- certify ------------------------------------------------------------------

int cmd_certify(const GlobalOptions& opt, int n, int d, bool fast) {
    lcdscan::CertifyOptions copt;
    copt.budget = opt.budget();
    copt.classify_strata = !fast;
    const lcdscan::Certificate cert = lcdscan::certify_no_lcd(n, d, copt);
    bool truncated = false;
    for (const auto& st : cert.strata) truncated = truncated || st.exhausted;
    if (opt.format == "markdown") {
        std::ostringstream os;
        os << "certificate [" << cert.n << ",5," << cert.d << "]  (s=" << cert.s
           << ", t=" << cert.t << ")\n";
        os << "lcd_nonexistent: " << (cert.lcd_nonexistent ? "true" : "false")
           << "   code_exists: " << (cert.code_exists ? "true" : "false")
           << "   min_h: " << cert.min_h << "\n\nstrata:\n";
        for (const auto& st : cert.strata)
            os << "- [" << st.method << "] " << st.description << "\n";
        for (const auto& note : cert.notes) os << "note: " << note << "\n";
        for (const auto& diff : cert.paper_diffs) os << "diff: " << diff << "\n";
        deliver(opt, os.str());
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "stratum,method,min_h,solution_count,description\n";
        for (std::size_t i = 0; i < cert.strata.size(); ++i) {
            const auto& st = cert.strata[i];
            os << i << ',' << st.method << ',' << st.min_h << ',' << st.histogram.total << ",\""
               << st.description << "\"\n";
        }
        deliver(opt, os.str());
    } else {
        deliver(opt, lcdscan::certificate_to_json(cert, 2));
    }
    return truncated ? kExitBudget : kExitOk;
}

// ---- table --------------------------------------------------------------------

int cmd_table(const GlobalOptions& opt, int id, int s) {
    if (id == 1) {
        const int s_eff = s < 0 ? 1 : s;
        std::ostringstream md, csv;
        ordered_json rows = ordered_json::array();
        md << "| n | s | t | d_a | d_l | status |\n|---|---|---|-----|-----|--------|\n";
        csv << "n,s,t,d_a,d_l,status\n";
        for (int t = 0; t <= 30; ++t) {
            const int n = 31 * s_eff + t;
            if (n < 5) continue;
            const lcdscan::BoundsRow row = lcdscan::bounds_row(n);
            md << "| " << row.n << " | " << row.s << " | " << row.t << " | " << row.d_a << " | "
               << row.d_l << " | " << row.status << " |\n";
            csv << row.to_csv() << "\n";
            ordered_json jr;
            jr["n"] = row.n;
            jr["s"] = row.s;
            jr["t"] = row.t;
            jr["d_a"] = row.d_a;
            jr["d_l"] = row.d_l;
            jr["status"] = row.status;
            rows.push_back(std::move(jr));
        }
        if (opt.format == "json") {
            ordered_json j;
            j["table"] = 1;
            j["s"] = s_eff;
            j["rows"] = std::move(rows);
            deliver(opt, j.dump(2));
        } else {
            deliver(opt, opt.format == "csv" ? csv.str() : md.str());
        }
        return kExitOk;
    }

    const lcdscan::TableReport report = lcdscan::reproduce_table(id, s, opt.budget());
    if (opt.format == "json") {
        ordered_json j;
        j["table"] = report.family.id;
        j["s"] = report.s;
        j["caption_count"] = report.family.caption_count;
        j["class_count"] = report.classification.classes.size();
        j["profile_count"] = report.profile_count;
        j["caption_ok"] = report.caption_ok;
        j["fatal"] = report.fatal;
        j["rows"] = ordered_json::array();
        for (const auto& f : report.rows) {
            ordered_json jr;
            jr["row"] = f.row;
            jr["vector_status"] = static_cast<int>(f.vector_status);
            jr["matched_class"] = f.matched_class;
            jr["matched_by_profile"] = f.matched_by_profile;
            jr["diffs"] = f.diffs;
            j["rows"].push_back(std::move(jr));
        }
        j["diffs"] = report.diffs;
        j["refinements"] = report.refinements;
        deliver(opt, j.dump(2));
    } else if (opt.format == "csv") {
        deliver(opt, lcdscan::table_report_csv(report));
    } else {
        deliver(opt, lcdscan::table_report_markdown(report));
    }
    return report.fatal ? kExitFixtureFatal : kExitOk;
}

// ---- witness ------------------------------------------------------------------

int cmd_witness(const GlobalOptions& opt, int n, int d) {
    const lcdscan::WitnessResult res = lcdscan::search_lcd_witness(n, d, opt.seed, opt.budget());
    if (opt.format == "json") {
        ordered_json j;
        j["n"] = n;
        j["d"] = d;
        j["seed"] = opt.seed;
        if (res.witness) {
            const lcdscan::CodeProfile p = lcdscan::analyze(*res.witness);
            ordered_json jw;
            jw["defining_vector"] = lcdscan::format_defining_vector(*res.witness);
            jw["d"] = p.d;
            jw["h"] = p.h;
            j["witness"] = std::move(jw);
        } else {
            j["witness"] = nullptr;
        }
        j["budget_exhausted"] = res.stats.budget_exhausted;
        deliver(opt, j.dump(2));
    } else {
        std::ostringstream os;
        if (res.witness) {
            const lcdscan::CodeProfile p = lcdscan::analyze(*res.witness);
            os << "LCD [" << p.n << ",5," << p.d << "] witness (requested d >= " << d
               << "): " << lcdscan::format_defining_vector(*res.witness);
        } else {
            os << "no LCD [" << n << ",5,>=" << d << "] witness found"
               << (res.stats.budget_exhausted ? " (budget exhausted)" : " (search complete)");
        }
        deliver(opt, os.str());
    }
    if (!res.witness && res.stats.budget_exhausted) return kExitBudget;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"defining-vector calculus for binary [n,5] codes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "line-oriented key=value config (budgets, seed, fixture path)");

    GlobalOptions opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}))
        ->capture_default_str();
    app.add_option("--max-nodes", opt.max_nodes, "search node budget (0 = unlimited)");
    app.add_option("--max-seconds", opt.max_seconds, "search time budget (0 = unlimited)");
    app.add_option("--threads", opt.threads, "enumeration worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "random seed (witness search)");
    app.add_option("--fixtures", opt.fixtures,
                   "CSV overriding bundled table rows (table,row,defining_vector,h,we)");
    app.add_option("--output", opt.output, "write the report to this file instead of stdout");

    // analyze
    std::string vector_text;
    int analyze_k = 5;
    CLI::App* analyze = app.add_subcommand("analyze", "profile one defining vector");
    analyze->add_option("vector", vector_text, "defining vector (digits or comma-separated)")
        ->required();
    analyze->add_option("--k", analyze_k, "dimension")->check(CLI::Range(2, 6));

    // enumerate / classify share the spec flags
    int n = 0, d = -1, k = 5, max_entry = 0, min_entry = 0;
    bool require_zero = false, fix_zero = false, at_least = false, list = false;
    auto add_spec_flags = [&](CLI::App* cmd, bool with_k) {
        cmd->add_option("--n", n, "code length")->required();
        cmd->add_option("--d", d, "minimum distance");
        if (with_k) cmd->add_option("--k", k, "dimension")->check(CLI::Range(2, 6));
        cmd->add_option("--max-entry", max_entry, "entry ceiling (0 = derived bound)");
        cmd->add_option("--min-entry", min_entry, "entry floor");
        cmd->add_flag("--require-zero", require_zero, "keep only vectors with a zero entry");
        cmd->add_flag("--fix-zero", fix_zero, "pin the first entry to zero (slice)");
        cmd->add_flag("--at-least", at_least, "treat d as a lower bound instead of exact");
    };
    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive defining-vector search");
    add_spec_flags(enumerate, true);
    enumerate->add_flag("--list", list, "print every solution instead of the histogram");

    CLI::App* classify = app.add_subcommand("classify", "equivalence classification");
    add_spec_flags(classify, false);

    // certify
    int cert_n = 0, cert_d = -1;
    bool cert_fast = false;
    CLI::App* certify = app.add_subcommand("certify", "LCD nonexistence certificate");
    certify->add_option("--n", cert_n, "code length")->required();
    certify->add_option("--d", cert_d, "minimum distance (default: the bundled optimal d_a)");
    certify->add_flag("--fast", cert_fast,
                      "dimension-reduction arguments only; skip stratum classification");

    // table
    int table_id = 0, table_s = -1;
    CLI::App* table = app.add_subcommand("table", "reproduce a bundled reference table");
    table->add_option("--id", table_id, "table id (1 = bounds, 2..7 = classifications)")
        ->required()
        ->check(CLI::Range(1, 7));
    table->add_option("--s", table_s, "parameter s (default: the table's base value)");

    // witness
    int wit_n = 0, wit_d = 0;
    CLI::App* witness = app.add_subcommand("witness", "search for an LCD code");
    witness->add_option("--n", wit_n, "code length")->required();
    witness->add_option("--d", wit_d, "minimum distance")->required();

    CLI11_PARSE(app, argc, argv);

    if (!opt.fixtures.empty()) setenv("LCDSCAN_FIXTURES", opt.fixtures.c_str(), 1);

    try {
        if (*analyze) return cmd_analyze(opt, vector_text, analyze_k);
        if (*enumerate || *classify) {
            if (d < 0) d = lcdscan::d_a(n);
            const lcdscan::SearchSpec spec =
                make_spec(n, d, *classify ? 5 : k, max_entry, min_entry, require_zero, fix_zero,
                          at_least);
            return *enumerate ? cmd_enumerate(opt, spec, list) : cmd_classify(opt, spec);
        }
        if (*certify) {
            if (cert_d < 0) cert_d = lcdscan::d_a(cert_n);
            return cmd_certify(opt, cert_n, cert_d, cert_fast);
        }
        if (*table) return cmd_table(opt, table_id, table_s);
        if (*witness) return cmd_witness(opt, wit_n, wit_d);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
