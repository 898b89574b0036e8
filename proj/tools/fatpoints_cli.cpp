// Command-line front end: exact cohomology, regularity bounds, claim
// verification sweeps and reference reproductions for fat point schemes
// over a prime field.
//
// Exit codes: 0 ok, 1 violation/disagreement, 2 usage or guard error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fatpoints/bounds.hpp"
#include "fatpoints/cohomology.hpp"
#include "fatpoints/geometry.hpp"
#include "fatpoints/reproduce.hpp"
#include "fatpoints/scheme_io.hpp"
#include "fatpoints/verify.hpp"

namespace {

using fatpoints::FatPointScheme;
using fatpoints::FieldContext;
using json = fatpoints::json;

struct SchemeOptions {
    std::string scheme_file;
    std::string gen;
    int n = 3;
    int s = 0;
    std::vector<int> mults;
    int gen_d = 2;  // degree parameter of the cone generator
    int b = 0;      // on-curve point count for the rnc-plus-general generator
    std::uint64_t seed = 1;
};

void add_scheme_options(CLI::App* cmd, SchemeOptions& opt) {
    auto* file = cmd->add_option("--scheme", opt.scheme_file, "Scheme JSON file");
    auto* gen = cmd->add_option("--gen", opt.gen,
                                "Generator: general|rnc|appendix1|appendix2|cone|"
                                "rnc-plus-general");
    file->excludes(gen);
    gen->excludes(file);
    cmd->add_option("--n", opt.n, "Ambient projective dimension");
    cmd->add_option("--s", opt.s, "Number of points");
    cmd->add_option("--mults", opt.mults, "Multiplicities (default: all 1)")
        ->delimiter(',');
    cmd->add_option("--seed", opt.seed, "Generator seed");
    cmd->add_option("--gen-d", opt.gen_d, "Cone generator degree parameter");
    cmd->add_option("--b", opt.b, "On-curve point count (rnc-plus-general)");
}

FatPointScheme build_scheme(const SchemeOptions& opt, const FieldContext& F) {
    if (!opt.scheme_file.empty()) {
        FatPointScheme Z = fatpoints::load_scheme(opt.scheme_file);
        if (Z.field.p() != F.p())
            throw CLI::ValidationError(
                "--prime", "scheme file prime differs from requested prime");
        return Z;
    }
    if (opt.gen.empty())
        throw CLI::ValidationError("--scheme", "need exactly one of --scheme/--gen");
    if (opt.gen == "appendix1") return fatpoints::gen_appendix(1, F);
    if (opt.gen == "appendix2") return fatpoints::gen_appendix(2, F);
    if (opt.gen == "cone") return fatpoints::gen_cone_example(F, opt.n, opt.gen_d, opt.seed);
    if (opt.gen == "rnc-plus-general")
        return fatpoints::gen_rnc_plus_general(F, opt.n, opt.b, opt.s, opt.mults, opt.seed);
    if (opt.s < 1) throw CLI::ValidationError("--s", "need s >= 1");
    std::vector<int> mults = opt.mults;
    if (mults.empty()) mults.assign(static_cast<std::size_t>(opt.s), 1);
    if (static_cast<int>(mults.size()) != opt.s)
        throw CLI::ValidationError("--mults", "length differs from --s");
    std::vector<fatpoints::PrimePoint> pts;
    if (opt.gen == "general")
        pts = fatpoints::gen_general(F, opt.n, opt.s, opt.seed);
    else if (opt.gen == "rnc")
        pts = fatpoints::gen_rnc(F, opt.n, opt.s, opt.seed);
    else
        throw CLI::ValidationError("--gen", "unknown generator " + opt.gen);
    std::sort(mults.begin(), mults.end(), std::greater<int>());
    return fatpoints::make_scheme(F, opt.n, std::move(pts), std::move(mults));
}

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

void parse_degree_range(const std::string& degrees, int degree, bool have_range,
                        bool have_single, int& lo, int& hi) {
    if (have_range) {
        const auto sep = degrees.find("..");
        if (sep == std::string::npos)
            throw CLI::ValidationError("--degrees", "expected A..B");
        lo = std::stoi(degrees.substr(0, sep));
        hi = std::stoi(degrees.substr(sep + 2));
    } else if (have_single) {
        lo = hi = degree;
    } else {
        throw CLI::ValidationError("--degree", "need --degree or --degrees");
    }
}

void ensure_prime_exceeds_degree(const FieldContext& F, int max_degree) {
    if (F.p() <= static_cast<std::uint32_t>(std::max(max_degree, 0)))
        throw CLI::ValidationError("--prime",
                                   "prime must exceed every requested degree");
}

std::vector<FieldContext> consensus_fields(const FieldContext& base,
                                           const std::vector<std::uint32_t>& extra) {
    std::vector<FieldContext> out{base};
    for (auto p : extra)
        if (p != base.p()) out.emplace_back(p);
    return out;
}

// Re-renders a scheme in another prime: explicit schemes re-reduce their
// integer coordinates, generated schemes re-run the generator.
FatPointScheme scheme_in_prime(const SchemeOptions& opt, const FieldContext& F) {
    if (!opt.scheme_file.empty()) {
        json j;
        std::ifstream in(opt.scheme_file);
        in >> j;
        j["prime"] = F.p();
        return fatpoints::scheme_from_json(j);
    }
    return build_scheme(opt, F);
}

int run_cohomology(const SchemeOptions& opt, std::uint32_t prime,
                   const std::vector<std::uint32_t>& primes, const std::string& degrees,
                   int degree, bool have_range, bool have_single,
                   const std::string& format, const std::string& out_path) {
    int lo = 0, hi = -1;
    parse_degree_range(degrees, degree, have_range, have_single, lo, hi);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    const auto fields = consensus_fields(FieldContext(prime), primes);
    for (const auto& F : fields) ensure_prime_exceeds_degree(F, hi);

    bool consensus = true;
    for (int d = lo; d <= hi; ++d) {
        std::vector<fatpoints::CohomologyReport> reps;
        for (const auto& F : fields) reps.push_back(cohomology(scheme_in_prime(opt, F), d));
        for (std::size_t i = 1; i < reps.size(); ++i)
            if (reps[i].rank != reps[0].rank || reps[i].h1 != reps[0].h1)
                consensus = false;
        if (format == "human") {
            const auto& r = reps[0];
            os << "d=" << r.degree << "  rank=" << r.rank << "  h0=" << r.h0
               << "  h1=" << r.h1 << "  HF=" << r.hilbert << "  degZ=" << r.deg_scheme
               << "  p=" << r.prime << '\n';
        } else {
            json j = fatpoints::report_to_json(reps[0]);
            if (reps.size() > 1) {
                json per = json::array();
                for (const auto& r : reps) per.push_back(fatpoints::report_to_json(r));
                j["primes"] = per;
                j["consensus"] = consensus;
            }
            os << j.dump() << '\n';
        }
    }
    if (!consensus) {
        std::cerr << "multi-prime disagreement detected\n";
        return 1;
    }
    return 0;
}

int run_regindex(const SchemeOptions& opt, std::uint32_t prime,
                 const std::vector<std::uint32_t>& primes, bool paranoid,
                 const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    const auto fields = consensus_fields(FieldContext(prime), primes);

    std::vector<fatpoints::BoundReport> reps;
    for (const auto& F : fields) {
        FatPointScheme Z = scheme_in_prime(opt, F);
        ensure_prime_exceeds_degree(F, static_cast<int>(Z.weight()));
        if (paranoid) (void)fatpoints::regularity_index(Z, true);
        reps.push_back(fatpoints::bound_report(Z));
    }
    bool consensus = true;
    for (std::size_t i = 1; i < reps.size(); ++i)
        if (reps[i].measured_reg != reps[0].measured_reg) consensus = false;

    const auto& r = reps[0];
    if (format == "human") {
        os << "n=" << r.n << " s=" << r.s << " w=" << r.weight << " p=" << r.prime
           << "\nmeasured reg = " << r.measured_reg << "\n\n";
        os << "bound               value  holds\n";
        auto row = [&](const char* name, const std::optional<std::int64_t>& v) {
            if (!v) return;
            std::ostringstream val;
            val << *v;
            os << name << std::string(20 - std::string(name).size(), ' ')
               << val.str() << std::string(7 - val.str().size(), ' ')
               << (r.holds(*v) ? "yes" : "NO") << '\n';
        };
        row("segre_p2", r.segre_p2);
        row("fulton", r.fulton);
        row("segre_pn", r.segre_pn);
        row("generalized_segre", r.generalized_segre);
        row("bdp", r.bdp);
    } else if (format == "csv") {
        os << fatpoints::bound_report_csv_header() << '\n'
           << fatpoints::bound_report_to_csv(r) << '\n';
    } else {
        json j = fatpoints::bound_report_to_json(r);
        if (reps.size() > 1) {
            json per = json::array();
            for (const auto& rr : reps) per.push_back(fatpoints::bound_report_to_json(rr));
            j["primes"] = per;
            j["consensus"] = consensus;
        }
        os << j.dump() << '\n';
    }
    if (!consensus) {
        std::cerr << "multi-prime disagreement detected\n";
        return 1;
    }
    return 0;
}

int run_verify(fatpoints::SweepPlan plan, const std::string& plan_file,
               const std::string& replay_file, const std::string& log_path,
               const std::string& summary_path, bool allow_violations) {
    if (!replay_file.empty()) {
        std::ifstream in(replay_file);
        if (!in) throw CLI::ValidationError("--replay", "cannot open " + replay_file);
        std::string line;
        std::size_t mismatches = 0, total = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto logged = fatpoints::record_from_json(json::parse(line));
            auto again = fatpoints::replay(logged);
            ++total;
            if (again.verdict != logged.verdict || again.measured != logged.measured) {
                ++mismatches;
                std::cerr << "replay mismatch for record " << logged.id << '\n';
            }
        }
        std::cout << "replayed " << total << " records, " << mismatches
                  << " mismatches\n";
        return mismatches == 0 ? 0 : 1;
    }

    if (!plan_file.empty()) {
        std::ifstream in(plan_file);
        if (!in) throw CLI::ValidationError("--plan", "cannot open " + plan_file);
        json j;
        in >> j;
        plan.claim = j.value("claim", plan.claim);
        plan.prime = j.value("prime", plan.prime);
        plan.ns = j.value("ns", plan.ns);
        plan.records = j.value("records", plan.records);
        plan.master_seed = j.value("master_seed", plan.master_seed);
        plan.max_mult = j.value("max_mult", plan.max_mult);
        plan.geometries = j.value("geometries", plan.geometries);
        plan.degrees = j.value("degrees", plan.degrees);
        plan.seeds_on = j.value("seeds_on", plan.seeds_on);
        plan.seeds_per_case = j.value("seeds_per_case", plan.seeds_per_case);
    }
    if (plan.timestamp.empty()) plan.timestamp = now_iso8601();

    const auto result = fatpoints::sweep(plan);
    if (!log_path.empty()) fatpoints::write_record_log(result, log_path);
    const json summary = fatpoints::sweep_summary(plan, result);
    if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        out << summary.dump(2) << '\n';
    }
    std::cout << summary.dump() << '\n';
    if (!result.ok() && plan.fatal_violations && !allow_violations) return 1;
    return 0;
}

// CSV of every tabulated comparison cell alongside the direct formulas.
void dump_tables_csv(std::ostream& os) {
    os << "n,s,w,mu,lambda,segre_term,bdp_term\n";
    for (int n = 2; n <= 8; ++n)
        for (int s = n + 4; s <= 2 * n + 6; ++s)
            for (std::int64_t mu = 1; mu <= 4; ++mu)
                for (int lambda = 0; lambda <= n - 1; ++lambda) {
                    const std::int64_t w = mu * n + lambda;
                    const auto row = fatpoints::compare_bounds(n, s, w);
                    os << n << ',' << s << ',' << w << ',' << row.mu << ','
                       << row.lambda << ',' << row.mu + row.segre_offset << ','
                       << row.mu + row.bdp_offset << '\n';
                }
}

int run_reproduce_cmd(const std::string& target, std::uint32_t prime,
                      const std::string& format) {
    if (target == "tables" && format == "csv") {
        dump_tables_csv(std::cout);
        return fatpoints::run_reproduce("tables", FieldContext(prime)).pass ? 0 : 1;
    }
    std::vector<std::string> targets;
    if (target == "all")
        targets = fatpoints::reproduce_targets();
    else
        targets.push_back(target);
    bool all_pass = true;
    for (const auto& t : targets) {
        const auto res = fatpoints::run_reproduce(t, FieldContext(prime));
        all_pass &= res.pass;
        if (format == "json") {
            json j;
            j["target"] = res.target;
            j["pass"] = res.pass;
            json checks = json::array();
            for (const auto& c : res.checks)
                checks.push_back(json{{"name", c.name},
                                      {"expected", c.expected},
                                      {"actual", c.actual},
                                      {"pass", c.pass}});
            j["checks"] = std::move(checks);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.target << '\n';
            for (const auto& c : res.checks)
                if (!c.pass)
                    std::cout << "      " << c.name << ": expected " << c.expected
                              << ", got " << c.actual << '\n';
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact cohomology, regularity bounds and claim verification for fat "
        "point schemes over a prime field"};
    app.require_subcommand(1);

    std::uint32_t prime = fatpoints::kDefaultPrime;
    std::vector<std::uint32_t> primes;
    std::string format = "json";
    std::string out_path;
    app.add_option("--prime", prime, "Field characteristic (prime)")
        ->capture_default_str();
    app.add_option("--primes", primes, "Extra primes for consensus checking")
        ->delimiter(',');
    app.add_option("--format", format, "Output format: json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    app.add_option("--out", out_path, "Write output to a file");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "h0/h1/Hilbert function per degree");
    SchemeOptions coh_opt;
    add_scheme_options(coh, coh_opt);
    int degree = 0;
    std::string degrees;
    auto* deg_single = coh->add_option("--degree", degree, "Single degree");
    auto* deg_range = coh->add_option("--degrees", degrees, "Degree range A..B");
    deg_single->excludes(deg_range);

    // regindex
    auto* reg = app.add_subcommand("regindex", "Regularity index and every bound");
    SchemeOptions reg_opt;
    add_scheme_options(reg, reg_opt);
    bool paranoid = false;
    reg->add_flag("--paranoid", paranoid, "Also verify vanishing at reg+1");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a claim checker sweep");
    fatpoints::SweepPlan plan;
    std::string plan_file, replay_file, log_path, summary_path;
    bool allow_violations = false;
    ver->add_option("--claim", plan.claim,
                    "One of: generalized-segre, segre-vanishing, rnc-speciality, "
                    "rnc-sharpness, cone-speciality, seven-points-p4, self-test")
        ->capture_default_str();
    ver->add_option("--records", plan.records, "Record count")->capture_default_str();
    ver->add_option("--master-seed", plan.master_seed, "Master seed")
        ->capture_default_str();
    ver->add_option("--n", plan.ns, "Ambient dimensions")->delimiter(',');
    ver->add_option("--max-mult", plan.max_mult, "Largest multiplicity drawn");
    ver->add_option("--geometries", plan.geometries, "Geometry tags")->delimiter(',');
    ver->add_option("--degrees-list", plan.degrees, "Degrees (rnc-speciality)")
        ->delimiter(',');
    ver->add_option("--seeds-on", plan.seeds_on, "On-curve instances (rnc-speciality)");
    ver->add_option("--seeds-per-case", plan.seeds_per_case, "Seeds per case");
    ver->add_option("--timestamp", plan.timestamp,
                    "Pin the run timestamp (reproducible logs)");
    ver->add_option("--plan", plan_file, "Plan JSON file");
    ver->add_option("--replay", replay_file, "Re-check a JSONL record log");
    ver->add_option("--log", log_path, "Write JSONL record log");
    ver->add_option("--summary", summary_path, "Write summary JSON");
    ver->add_flag("--allow-violations", allow_violations,
                  "Exit 0 even when records are violated (exploratory runs)");

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "Reproduce a named reference value");
    std::string target;
    rep->add_option("target", target, "appendix1|appendix2|ex-1.2|ex-3.8|ex-3.9|ex-4.8|tables|lemma-2.4|all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (coh->parsed())
            return run_cohomology(coh_opt, prime, primes, degrees, degree,
                                  deg_range->count() > 0, deg_single->count() > 0,
                                  format, out_path);
        if (reg->parsed())
            return run_regindex(reg_opt, prime, primes, paranoid, format, out_path);
        if (ver->parsed()) {
            plan.prime = prime;
            return run_verify(plan, plan_file, replay_file, log_path, summary_path,
                              allow_violations);
        }
        if (rep->parsed()) return run_reproduce_cmd(target, prime, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
