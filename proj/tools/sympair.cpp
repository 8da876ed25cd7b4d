// Command-line front end: construct codes, compute exact Hamming and
// symbol-pair distances, and verify MDS symbol-pair claims.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sympair/families.hpp"
#include "sympair/io.hpp"

namespace {

using namespace sympair;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    u64 ms() const {
        return static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count());
    }
};

/// Factored generator in a compact human form, e.g. "(4,1)^3 (2,1)".
std::string factored_pretty(const ConstacyclicCode& code) {
    std::string s;
    for (const auto& [m, e] : code.factors().factors()) {
        if (!s.empty()) s += ' ';
        s += "(" + poly_to_string(m) + ")";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string dist_pretty(u64 d) {
    return d == kInfiniteDistance ? std::string("inf") : std::to_string(d);
}

/// Where the code under analysis comes from: a named family or a spec file.
struct CodeInput {
    std::string name;
    u64 p = 0;
    std::string spec_path;
};

ConstacyclicCode load_code(const CodeInput& in) {
    if (!in.spec_path.empty()) {
        std::ifstream f(in.spec_path);
        if (!f) throw BadFormat("cannot open spec file: " + in.spec_path);
        json j;
        try {
            j = json::parse(f);
        } catch (const json::parse_error& e) {
            throw BadFormat(std::string("spec file is not valid JSON: ") + e.what());
        }
        return code_from_spec_json(j);
    }
    return family_code(in.name, in.p);
}

/// Rejects under- and over-specified inputs before any work happens.
bool input_is_valid(const CodeInput& in, std::string& why) {
    const bool named = !in.name.empty() || in.p != 0;
    const bool spec = !in.spec_path.empty();
    if (named && spec) {
        why = "give either --name/--p or --spec, not both";
        return false;
    }
    if (!named && !spec) {
        why = "one of --name/--p or --spec is required";
        return false;
    }
    if (named && (in.name.empty() || in.p == 0)) {
        why = "--name and --p must be given together";
        return false;
    }
    return true;
}

void print_class_progress(const ClassStat& cs) {
    std::cerr << "  class (w=" << cs.w << ", r=" << cs.r << "): " << cs.patterns
              << " patterns scanned, " << (cs.solvable ? "codeword found" : "no codeword")
              << "\n";
}

void print_code_summary(std::ostream& os, const ConstacyclicCode& code) {
    os << "[" << code.n() << ", " << code.k() << "] constacyclic code over F_"
       << code.field().modulus() << ", eta = " << code.eta() << "\n"
       << "  generator: " << poly_to_string(code.generator()) << "\n"
       << "  factored:  " << factored_pretty(code) << "\n";
}

void print_level_table(std::ostream& os, const DistanceCertificate& cert) {
    os << "  level minima (weight multiplier * quotient distance):\n";
    os << "    " << std::setw(6) << "t" << std::setw(8) << "P_t" << std::setw(10) << "dh_bar"
       << std::setw(10) << "product" << "\n";
    for (const auto& lv : cert.per_level) {
        os << "    " << std::setw(6) << lv.t << std::setw(8) << lv.pt << std::setw(10)
           << dist_pretty(lv.dh_bar) << std::setw(10) << dist_pretty(lv.product);
        if (lv.t == cert.witness_t && cert.dh != kInfiniteDistance) os << "  <- minimum";
        os << "\n";
    }
}

void print_class_table(std::ostream& os, const PairDistanceCertificate& cert) {
    if (cert.classes.empty()) {
        os << "  no intermediate support classes (pair distance forced by Hamming weight)\n";
        return;
    }
    os << "  support classes scanned (weight w, runs r):\n";
    os << "    " << std::setw(4) << "w" << std::setw(4) << "r" << std::setw(12) << "patterns"
       << "  solvable\n";
    for (const auto& cs : cert.classes) {
        os << "    " << std::setw(4) << cs.w << std::setw(4) << cs.r << std::setw(12)
           << cs.patterns << "  " << (cs.solvable ? "yes" : "no") << "\n";
    }
}

/// Writes the JSON report to `path` ("-" means standard output, which then
/// replaces the human report); otherwise runs the human printer.
void emit_report(const json& j, const std::string& path, const std::function<void()>& human) {
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (!path.empty()) {
        std::ofstream f(path);
        if (!f) throw BadFormat("cannot write report file: " + path);
        f << j.dump(2) << "\n";
    }
    human();
}

/// Hamming-distance computation shared by the subcommands: uses the level
/// certificate when the code is cyclic with repeated roots, otherwise falls
/// back to direct search.
struct HammingReport {
    u64 value = kInfiniteDistance;
    json body;
    bool has_cert = false;
    DistanceCertificate cert;
};

HammingReport compute_dh(const ConstacyclicCode& code) {
    HammingReport out;
    if (code.k() == 0) {
        out.value = kInfiniteDistance;
        out.body = json{{"value", nullptr}, {"engine", "trivial"}};
        return out;
    }
    if (code.eta() == 1 && code.e() >= 1) {
        out.cert = dh_repeated_root(code);
        out.has_cert = true;
        out.value = out.cert.dh;
        out.body = distance_certificate_json(out.cert);
        out.body["engine"] = "level-minima";
        if (out.value != kInfiniteDistance)
            out.body["witness"] = vector_to_string(min_weight_codeword(code, out.cert));
    } else {
        Polynomial w(code.field());
        out.value = min_hamming_distance_direct(code, &w);
        out.body = json{{"value", out.value == kInfiniteDistance ? json() : json(out.value)},
                        {"engine", "direct"}};
        if (out.value != kInfiniteDistance)
            out.body["witness"] = vector_to_string(Codeword::from_polynomial(w, code.n()));
    }
    return out;
}

int run_family(const std::string& name, u64 p, const std::string& json_path, unsigned threads) {
    const auto code = family_code(name, p);
    const auto claim = family_claim(name, p);

    Timer t_dh;
    const auto dh_rep = compute_dh(code);
    const u64 dh_ms = t_dh.ms();
    Timer t_dp;
    const auto cert = exact_pair_distance(code, threads, print_class_progress);
    const u64 dp_ms = t_dp.ms();

    std::vector<std::string> mismatches;
    if (code.n() != claim.n) mismatches.emplace_back("n");
    if (code.k() != claim.k) mismatches.emplace_back("k");
    if (dh_rep.value != claim.dh) mismatches.emplace_back("dh");
    if (cert.dp != claim.dp) mismatches.emplace_back("dp");
    if (!cert.mds) mismatches.emplace_back("mds");
    const bool ok = mismatches.empty();

    json j{{"schema", kReportSchema},
           {"family", name},
           {"p", p},
           {"code", code_spec_json(code)},
           {"claim", {{"n", claim.n}, {"k", claim.k}, {"dh", claim.dh}, {"dp", claim.dp}}},
           {"computed",
            {{"n", code.n()},
             {"k", code.k()},
             {"dh", dh_rep.value == kInfiniteDistance ? json() : json(dh_rep.value)},
             {"dp", cert.dp},
             {"mds", cert.mds}}},
           {"dh", dh_rep.body},
           {"dp", pair_certificate_json(cert)},
           {"verified", ok}};
    if (!ok) j["mismatches"] = mismatches;
    j["timing_ms"] = json{{"dh", dh_ms}, {"dp", dp_ms}, {"total", dh_ms + dp_ms}};

    emit_report(j, json_path, [&] {
        std::cout << "family " << name << " at p = " << p << ": ";
        print_code_summary(std::cout, code);
        std::cout << "  claim:    dh = " << claim.dh << ", dp = " << claim.dp
                  << " (MDS symbol-pair)\n"
                  << "  computed: dh = " << dist_pretty(dh_rep.value) << ", dp = " << cert.dp
                  << ", MDS symbol-pair: " << (cert.mds ? "yes" : "no") << "\n"
                  << "  matches claims: " << (ok ? "yes" : "no") << "\n";
        if (!ok) {
            std::cout << "  mismatched quantities:";
            for (const auto& m : mismatches) std::cout << " " << m;
            std::cout << "\n";
        }
    });
    return ok ? 0 : 1;
}

int run_dh(const ConstacyclicCode& code, const std::string& json_path, bool brute) {
    Timer t;
    auto rep = compute_dh(code);
    bool agree = true;
    if (brute) {
        const u64 b = dh_bruteforce(code);
        rep.body["brute_force"] = b == kInfiniteDistance ? json() : json(b);
        agree = b == rep.value;
    }
    json j{{"schema", kReportSchema},
           {"code", code_spec_json(code)},
           {"dh", rep.body},
           {"timing_ms", {{"total", t.ms()}}}};
    emit_report(j, json_path, [&] {
        print_code_summary(std::cout, code);
        std::cout << "  dh = " << dist_pretty(rep.value) << "\n";
        if (rep.has_cert) print_level_table(std::cout, rep.cert);
        if (rep.body.contains("witness"))
            std::cout << "  minimum-weight codeword: " << rep.body["witness"].get<std::string>()
                      << "\n";
        if (brute) std::cout << "  brute force agrees: " << (agree ? "yes" : "no") << "\n";
    });
    if (!agree) {
        std::cerr << "error: exact engine disagrees with brute force\n";
        return 1;
    }
    return 0;
}

int run_dp(const ConstacyclicCode& code, const std::string& json_path, bool brute,
           unsigned threads) {
    Timer t;
    const auto cert = exact_pair_distance(code, threads, print_class_progress);
    json body = pair_certificate_json(cert);
    bool agree = true;
    if (brute) {
        const u64 b = dp_bruteforce(code);
        body["brute_force"] = b;
        agree = b == cert.dp;
    }
    json j{{"schema", kReportSchema},
           {"code", code_spec_json(code)},
           {"dp", body},
           {"timing_ms", {{"total", t.ms()}}}};
    emit_report(j, json_path, [&] {
        print_code_summary(std::cout, code);
        std::cout << "  dh = " << cert.dh << "\n  dp = " << cert.dp << "\n  MDS symbol-pair: "
                  << (cert.mds ? "yes" : "no") << "\n";
        print_class_table(std::cout, cert);
        std::cout << "  pair-weight-" << cert.dp
                  << " codeword: " << body["witness"].get<std::string>() << "\n";
        if (brute) std::cout << "  brute force agrees: " << (agree ? "yes" : "no") << "\n";
    });
    if (!agree) {
        std::cerr << "error: exact engine disagrees with brute force\n";
        return 1;
    }
    return 0;
}

int run_verify(const ConstacyclicCode& code, u64 target_dp, const std::string& json_path,
               bool brute, unsigned threads) {
    Timer total;
    Timer t_dh;
    const auto dh_rep = compute_dh(code);
    const u64 dh_ms = t_dh.ms();

    json report{{"schema", kReportSchema},
                {"code", code_spec_json(code)},
                {"target_dp", target_dp},
                {"verified", false},
                {"dh", dh_rep.body}};
    bool verified = false;
    std::string failure;
    u64 dp_value = 0;
    bool have_dp = false;

    Timer t_dp;
    try {
        const auto v = verify_mds_pair(code, target_dp, threads, print_class_progress);
        verified = v.verified;
        dp_value = v.cert.dp;
        have_dp = true;
        json dp_body = pair_certificate_json(v.cert);
        if (brute) {
            const u64 b = dp_bruteforce(code);
            dp_body["brute_force"] = b;
            if (b != v.cert.dp) {
                verified = false;
                failure = "exact engine disagrees with brute force";
            }
        }
        report["dp"] = dp_body;
        if (!verified && failure.empty())
            failure = "computed pair distance " + std::to_string(v.cert.dp) +
                      " does not certify the target";
    } catch (const DimensionMismatch& e) {
        failure = e.what();
    }
    report["verified"] = verified;
    if (!failure.empty()) report["failure"] = failure;
    report["timing_ms"] = json{{"dh", dh_ms}, {"dp", t_dp.ms()}, {"total", total.ms()}};

    emit_report(report, json_path, [&] {
        print_code_summary(std::cout, code);
        std::cout << "  dh = " << dist_pretty(dh_rep.value) << "\n";
        if (have_dp) std::cout << "  dp = " << dp_value << " (target " << target_dp << ")\n";
        std::cout << "  verified: " << (verified ? "yes" : "no") << "\n";
        if (!failure.empty()) std::cout << "  reason: " << failure << "\n";
    });
    return verified ? 0 : 1;
}

int run_table(bool quick, const std::string& json_path, unsigned threads) {
    struct Row {
        std::string name;
        u64 p;
    };
    const std::vector<Row> rows = quick
        ? std::vector<Row>{{"thm1", 3}, {"thm1", 5}, {"thm2", 11}, {"thm3", 11}}
        : std::vector<Row>{{"thm1", 3},  {"thm1", 5},  {"thm1", 13}, {"thm2", 11},
                           {"thm2", 31}, {"thm3", 11}, {"thm3", 31}};

    json jrows = json::array();
    bool all_ok = true;
    std::ostringstream table;
    table << std::setw(8) << "family" << std::setw(6) << "p" << std::setw(6) << "n" << std::setw(6)
          << "k" << std::setw(5) << "dh" << std::setw(5) << "dp" << std::setw(6) << "mds"
          << std::setw(10) << "verified" << std::setw(10) << "ms" << "\n";
    for (const auto& row : rows) {
        const auto code = family_code(row.name, row.p);
        const auto claim = family_claim(row.name, row.p);
        std::cerr << "verifying " << row.name << " p=" << row.p << " [" << code.n() << ", "
                  << code.k() << "]\n";
        Timer t;
        const auto v = verify_mds_pair(code, claim.dp, threads, print_class_progress);
        const u64 ms = t.ms();
        all_ok = all_ok && v.verified;
        jrows.push_back(json{{"family", row.name},
                             {"p", row.p},
                             {"n", code.n()},
                             {"k", code.k()},
                             {"dh", v.cert.dh},
                             {"dp", v.cert.dp},
                             {"mds", v.cert.mds},
                             {"verified", v.verified},
                             {"ms", ms}});
        table << std::setw(8) << row.name << std::setw(6) << row.p << std::setw(6) << code.n()
              << std::setw(6) << code.k() << std::setw(5) << v.cert.dh << std::setw(5) << v.cert.dp
              << std::setw(6) << (v.cert.mds ? "yes" : "no") << std::setw(10)
              << (v.verified ? "yes" : "no") << std::setw(10) << ms << "\n";
    }
    json j{{"schema", kReportSchema}, {"rows", jrows}, {"all_verified", all_ok}};
    emit_report(j, json_path, [&] { std::cout << table.str(); });
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hamming and symbol-pair distances of constacyclic codes"};
    app.require_subcommand(1);

    // family
    auto* fam = app.add_subcommand("family", "build a named family code, recompute its claims");
    std::string fam_name, fam_json;
    u64 fam_p = 0;
    unsigned fam_threads = 1;
    fam->add_option("--name", fam_name, "family name (thm1, thm2, thm3)")->required();
    fam->add_option("--p", fam_p, "prime parameter")->required();
    fam->add_option("--threads", fam_threads, "worker threads for the pair scan");
    fam->add_option("--json", fam_json, "write the JSON report to this path ('-' = stdout)");

    // shared options for verify / dh / dp
    CodeInput v_in, dh_in, dp_in;
    u64 v_target = 0;
    unsigned v_threads = 1, dp_threads = 1, tab_threads = 1;
    std::string v_json, dh_json, dp_json, tab_json;
    bool dh_brute = false, dp_brute = false, v_brute = false, tab_quick = false;

    auto add_input = [](CLI::App* sub, CodeInput& in) {
        sub->add_option("--name", in.name, "family name (thm1, thm2, thm3)");
        sub->add_option("--p", in.p, "prime parameter for --name");
        sub->add_option("--spec", in.spec_path, "path to a code-spec JSON file");
    };

    auto* ver = app.add_subcommand("verify", "verify the MDS symbol-pair property");
    add_input(ver, v_in);
    ver->add_option("--dp", v_target, "target pair distance (default: the family claim)");
    ver->add_option("--threads", v_threads, "worker threads for the pair scan");
    ver->add_flag("--brute-force", v_brute, "cross-check against exhaustive search");
    ver->add_option("--json", v_json, "write the JSON report to this path ('-' = stdout)");

    auto* dhc = app.add_subcommand("dh", "compute the exact minimum Hamming distance");
    add_input(dhc, dh_in);
    dhc->add_flag("--brute-force", dh_brute, "cross-check against exhaustive search");
    dhc->add_option("--json", dh_json, "write the JSON report to this path ('-' = stdout)");

    auto* dpc = app.add_subcommand("dp", "compute the exact minimum symbol-pair distance");
    add_input(dpc, dp_in);
    dpc->add_option("--threads", dp_threads, "worker threads for the pair scan");
    dpc->add_flag("--brute-force", dp_brute, "cross-check against exhaustive search");
    dpc->add_option("--json", dp_json, "write the JSON report to this path ('-' = stdout)");

    auto* tab = app.add_subcommand("table", "verify the built-in family instances");
    tab->add_flag("--quick", tab_quick, "small instances only");
    tab->add_option("--threads", tab_threads, "worker threads for the pair scan");
    tab->add_option("--json", tab_json, "write the JSON report to this path ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fam->parsed()) return run_family(fam_name, fam_p, fam_json, fam_threads);
        if (ver->parsed()) {
            std::string why;
            if (!input_is_valid(v_in, why)) {
                std::cerr << "error: " << why << "\n";
                return 2;
            }
            u64 target = v_target;
            if (target == 0) {
                if (v_in.spec_path.empty()) {
                    target = family_claim(v_in.name, v_in.p).dp;
                } else {
                    std::cerr << "error: --dp is required with --spec\n";
                    return 2;
                }
            }
            return run_verify(load_code(v_in), target, v_json, v_brute, v_threads);
        }
        if (dhc->parsed()) {
            std::string why;
            if (!input_is_valid(dh_in, why)) {
                std::cerr << "error: " << why << "\n";
                return 2;
            }
            return run_dh(load_code(dh_in), dh_json, dh_brute);
        }
        if (dpc->parsed()) {
            std::string why;
            if (!input_is_valid(dp_in, why)) {
                std::cerr << "error: " << why << "\n";
                return 2;
            }
            return run_dp(load_code(dp_in), dp_json, dp_brute, dp_threads);
        }
        if (tab->parsed()) return run_table(tab_quick, tab_json, tab_threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
