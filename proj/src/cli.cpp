#include "crossint/cli.hpp"

#include "crossint/cascade.hpp"
#include "crossint/errors.hpp"
#include "crossint/families.hpp"
#include "crossint/oracle.hpp"
#include "crossint/regions.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace crossint {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

Json config_json(const RunConfig& c)
{
    return Json{{"tolerance", c.tolerance}, {"j_cap", c.j_cap},   {"i_max", c.i_max},
                {"sweep_budget", c.sweep_budget}, {"output", c.output}, {"seed", c.seed}};
}

class Reporter {
public:
    Reporter(const RunConfig& cfg, std::string command) : cfg_(cfg), command_(std::move(command)), start_(Clock::now())
    {
    }

    Json header() const { return Json{{"schema", kSchemaVersion}, {"command", command_}, {"config", config_json(cfg_)}}; }

    Json elapsed() const
    {
        if (!cfg_.timing)
            return nullptr;
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

private:
    const RunConfig& cfg_;
    std::string command_;
    Clock::time_point start_;
};

Json elements_json(Mask m)
{
    return elements(m);
}

Json family_json(std::span<const Mask> members)
{
    Json out = Json::array();
    for (Mask m : members)
        out.push_back(elements_json(m));
    return out;
}

Json oracle_json(const OracleResult& r)
{
    Json w = Json::array();
    for (const auto& x : r.witnesses) {
        Json item{{"size_a", x.size_a.str()}, {"size_b", x.size_b.str()}};
        if (x.family)
            item["family"] = family_json(x.family->members());
        w.push_back(item);
    }
    return Json{{"n", r.n},
                {"k", r.k},
                {"l", r.l},
                {"value", r.value.str()},
                {"method", to_string(r.method)},
                {"closed_form", r.closed_form},
                {"optimal_count", r.optimal_count},
                {"witnesses", w},
                {"witnesses_truncated", r.witnesses_truncated}};
}

Json uniqueness_json(const UniquenessReport& u)
{
    Json sizes = Json::array();
    for (const auto& s : u.maximizing_sizes)
        sizes.push_back(s.str());
    Json out{{"value", u.value.str()},
             {"star_product", u.star_product.str()},
             {"maximizing_sizes", sizes},
             {"sizes_truncated", u.sizes_truncated},
             {"unique_size", u.unique_size},
             {"star_forced", u.star_forced}};
    out["enumeration_all_stars"] = u.enumeration_all_stars ? Json(*u.enumeration_all_stars) : Json(nullptr);
    return out;
}

OracleOptions oracle_options(const RunConfig& cfg)
{
    OracleOptions o;
    o.sweep_budget = cfg.sweep_budget;
    return o;
}

void print_json(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

void require_json(const RunConfig& cfg, const char* command)
{
    if (cfg.output != "json")
        throw InvalidArgument(fmt::format("{} supports only --output json", command));
}

// ---- mnkl -------------------------------------------------------------------

struct MnklArgs {
    int n = 0, k = 0, l = 0;
    std::string method = "cascade";
    std::size_t witness_cap = kDefaultWitnessCap;
};

int cmd_mnkl(const RunConfig& cfg, const MnklArgs& a, std::ostream& out)
{
    Reporter rep(cfg, "mnkl");
    OracleOptions opts = oracle_options(cfg);
    opts.witness_cap = a.witness_cap;
    std::vector<OracleResult> results;
    if (a.method == "cascade" || a.method == "both")
        results.push_back(max_product_cascade(a.n, a.k, a.l, opts));
    if (a.method == "enum" || a.method == "both")
        results.push_back(max_product_enumeration(a.n, a.k, a.l, opts));
    const bool agree = std::all_of(results.begin(), results.end(),
                                   [&](const OracleResult& r) { return r.value == results.front().value; });
    if (cfg.output == "csv") {
        out << "n,k,l,method,value,optimal_count\n";
        for (const auto& r : results)
            out << fmt::format("{},{},{},{},{},{}\n", r.n, r.k, r.l, to_string(r.method), r.value.str(), r.optimal_count);
    } else {
        Json j = rep.header();
        j["n"] = a.n;
        j["k"] = a.k;
        j["l"] = a.l;
        j["value"] = results.front().value.str();
        j["star_product"] = (binom(a.n - 1, a.k - 1) * binom(a.n - 1, a.l - 1)).str();
        Json rs = Json::array();
        for (const auto& r : results)
            rs.push_back(oracle_json(r));
        j["results"] = rs;
        j["agree"] = agree;
        j["elapsed_ms"] = rep.elapsed();
        print_json(out, j);
    }
    return agree ? kExitOk : kExitFails;
}

// ---- region -----------------------------------------------------------------

struct RegionArgs {
    std::string what = "delta";
    int grid = 100;
    std::vector<double> alpha_range{0.01, 0.49};
    int j_max = 6;
};

int cmd_region(const RunConfig& cfg, const RegionArgs& a, std::ostream& out)
{
    if (a.alpha_range.size() != 2)
        throw InvalidArgument("--alpha-range takes two values");
    std::vector<CurveRow> rows;
    if (a.what == "delta-sample") {
        if (a.grid < 1)
            throw InvalidArgument("--grid must be positive");
        for (const RegionPoint& p : sample_delta(a.grid, cfg.seed))
            rows.push_back({p.alpha, p.beta, "sample"});
    } else {
        CurveOptions o;
        o.grid = a.grid;
        o.alpha_lo = a.alpha_range[0];
        o.alpha_hi = a.alpha_range[1];
        o.j_max = a.j_max;
        o.j_cap = cfg.j_cap;
        rows = curve_samples(parse_curve(a.what), o);
    }
    if (cfg.output == "csv") {
        write_csv(out, rows);
    } else {
        Reporter rep(cfg, "region");
        Json j = rep.header();
        j["what"] = a.what;
        Json rs = Json::array();
        for (const auto& r : rows)
            rs.push_back(Json{{"alpha", r.alpha}, {"value", r.value}, {"label", r.label}});
        j["rows"] = rs;
        j["elapsed_ms"] = rep.elapsed();
        print_json(out, j);
    }
    return kExitOk;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
    std::vector<int> nkl;
    std::optional<double> alpha, beta;
    std::string conditions;
};

struct ConditionRow {
    std::string name;
    Verdict verdict;
    Json detail;
};

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

Verdict from_bool(bool b) { return b ? Verdict::holds : Verdict::fails; }

void claim_rows(const RunConfig& cfg, double alpha, double beta, std::vector<ConditionRow>& rows)
{
    struct Probe {
        int i, eps;
        ClaimKind kind;
    };
    std::vector<Probe> probes = {{2, 1, ClaimKind::A}, {3, 1, ClaimKind::A}, {2, 2, ClaimKind::B}};
    if (alpha > 0.23)
        probes.push_back({3, 1, ClaimKind::B});
    probes.push_back({i0(alpha, cfg.i_max), 0, ClaimKind::C});
    for (const Probe& s : probes) {
        const ClaimSides sides = claim_sides(alpha, beta, s.i, s.eps, s.kind);
        rows.push_back({fmt::format("claim-{}-i{}-eps{}", to_string(s.kind), s.i, s.eps),
                        from_bool(claim_conditions(alpha, beta, s.i, s.eps, s.kind)),
                        Json{{"lhs", sides.lhs}, {"rhs", sides.rhs}}});
    }
    for (int t = 4; t <= 50; ++t)
        if (!tail_bound(t, alpha, beta)) {
            rows.push_back({"tail", Verdict::fails, Json{{"t", t}, {"value", tail_value(t, alpha, beta)}}});
            return;
        }
    rows.push_back({"tail", Verdict::holds, Json{{"t_range", {4, 50}}, {"value_at_4", tail_value(4, alpha, beta)}}});
}

int cmd_check(const RunConfig& cfg, const CheckArgs& a, std::ostream& out)
{
    const bool integer_mode = !a.nkl.empty();
    if (integer_mode && a.nkl.size() != 3)
        throw InvalidArgument("check takes n k l as three integers");
    if (a.alpha.has_value() != a.beta.has_value())
        throw InvalidArgument("--alpha and --beta go together");
    const bool real_mode = a.alpha.has_value();
    if (!integer_mode && !real_mode)
        throw InvalidArgument("check needs n k l or --alpha/--beta");
    std::string conds = a.conditions;
    if (conds.empty())
        conds = integer_mode && !real_mode ? "c1,c2" : "delta,delta-prime";

    std::vector<ConditionRow> rows;
    for (const std::string& c : split_list(conds)) {
        if (c == "c1" || c == "c2") {
            if (!integer_mode)
                throw InvalidArgument(c + " needs n k l");
            const int n = a.nkl[0], k = a.nkl[1], l = a.nkl[2];
            if (!in_omega_prime(n, k, l))
                throw InvalidArgument(fmt::format("({}, {}) is not in Omega' for n = {}", k, l, n));
            const ExactRational v = c == "c1" ? c1_value(n, k, l) : c2_value(n, k, l);
            const bool holds = c == "c1" ? v < 1 : v < 0;
            rows.push_back({c, from_bool(holds), Json{{"value", to_string(v)}, {"approx", to_double(v)}}});
            continue;
        }
        if (!real_mode)
            throw InvalidArgument(c + " needs --alpha and --beta");
        const double alpha = *a.alpha, beta = *a.beta;
        RegionPoint p(alpha, beta);
        if (c == "delta") {
            Json d{{"in_omega", in_omega(alpha, beta)}};
            Verdict v = Verdict::fails;
            if (in_omega(alpha, beta)) {
                const DeltaBound b = delta_bound(alpha, cfg.j_cap);
                v = strictly_less(beta, b.value, cfg.tolerance);
                d["min_e"] = b.value;
                d["argmin_j"] = b.argmin;
                d["explicit_through"] = b.explicit_through;
            }
            rows.push_back({c, v, d});
        } else if (c == "delta-prime") {
            rows.push_back({c, from_bool(in_delta_prime(alpha, beta)),
                            Json{{"in_omega", in_omega(alpha, beta)},
                                 {"c1_lhs", delta_prime_c1(alpha, beta)},
                                 {"c2_lhs", delta_prime_c2(alpha, beta)}}});
        } else if (c == "claims") {
            if (!(alpha < 0.5))
                throw InvalidArgument("claims need alpha < 1/2");
            claim_rows(cfg, alpha, beta, rows);
        } else {
            throw InvalidArgument("unknown condition '" + c + "'");
        }
    }

    const bool all = std::all_of(rows.begin(), rows.end(), [](const ConditionRow& r) { return r.verdict == Verdict::holds; });
    if (cfg.output == "csv") {
        out << "condition,holds,verdict\n";
        for (const auto& r : rows)
            out << fmt::format("{},{},{}\n", r.name, r.verdict == Verdict::holds, to_string(r.verdict));
    } else {
        Reporter rep(cfg, "check");
        Json j = rep.header();
        if (integer_mode)
            j["nkl"] = a.nkl;
        if (real_mode) {
            j["alpha"] = *a.alpha;
            j["beta"] = *a.beta;
        }
        Json cs = Json::array();
        for (const auto& r : rows) {
            Json item{{"name", r.name}, {"holds", r.verdict == Verdict::holds}, {"verdict", to_string(r.verdict)}};
            item.update(r.detail);
            cs.push_back(item);
        }
        j["conditions"] = cs;
        j["all_hold"] = all;
        j["elapsed_ms"] = rep.elapsed();
        print_json(out, j);
    }
    return all ? kExitOk : kExitFails;
}

// ---- measure ----------------------------------------------------------------

struct MeasureArgs {
    int n = 0;
    std::string alpha, beta;
    std::size_t witness_cap = kDefaultWitnessCap;
};

int cmd_measure(const RunConfig& cfg, const MeasureArgs& a, std::ostream& out)
{
    require_json(cfg, "measure");
    Reporter rep(cfg, "measure");
    const ExactRational alpha = parse_rational(a.alpha), beta = parse_rational(a.beta);
    const MeasureResult r = measure_oracle(a.n, alpha, beta, a.witness_cap);
    Json j = rep.header();
    j["n"] = r.n;
    j["alpha"] = to_string(alpha);
    j["beta"] = to_string(beta);
    j["value"] = to_string(r.value);
    j["alpha_beta"] = to_string(alpha * beta);
    j["equal"] = r.value == alpha * beta;
    j["method"] = "enumeration";
    j["families_searched"] = r.families_searched;
    j["optimal_count"] = r.optimal_count;
    Json w = Json::array();
    for (const auto& f : r.witnesses)
        w.push_back(family_json(f.members()));
    j["witnesses"] = w;
    j["witnesses_truncated"] = r.witnesses_truncated;
    j["elapsed_ms"] = rep.elapsed();
    print_json(out, j);
    return kExitOk;
}

// ---- scan -------------------------------------------------------------------

struct ScanArgs {
    std::vector<int> n_range, k_range, l_range;
    int j_max = 64;
};

int cmd_scan(const RunConfig& cfg, const ScanArgs& a, std::ostream& out)
{
    require_json(cfg, "scan");
    for (const auto* r : {&a.n_range, &a.k_range, &a.l_range})
        if (r->size() != 2 || (*r)[0] > (*r)[1])
            throw InvalidArgument("ranges take two values lo <= hi");
    int instances = 0, reachable = 0;
    for (int n = a.n_range[0]; n <= a.n_range[1]; ++n)
        for (int k = a.k_range[0]; k <= a.k_range[1]; ++k)
            for (int l = a.l_range[0]; l <= a.l_range[1]; ++l) {
                if (n < 2 || n > kMaxGround || !in_omega_prime(n, k, l))
                    continue;
                ++instances;
                Reporter rep(cfg, "scan");
                const ScanReport s = conjecture_scan(n, k, l, a.j_max, oracle_options(cfg));
                Json j = rep.header();
                j["evidence_only"] = true;
                j["n"] = n;
                j["k"] = k;
                j["l"] = l;
                j["star_product"] = s.star_product.str();
                Json terms = Json::array();
                for (const auto& t : s.terms)
                    terms.push_back(Json{{"j", t.j}, {"product", t.product.str()}, {"below", t.below}});
                j["hypothesis_terms"] = terms;
                j["hypothesis_complete"] = s.hypothesis_complete;
                j["hypothesis"] = s.hypothesis;
                j["value"] = s.oracle_value ? Json(s.oracle_value->str()) : Json(nullptr);
                j["conclusion"] = s.conclusion ? Json(*s.conclusion) : Json(nullptr);
                j["uniqueness"] = s.uniqueness ? uniqueness_json(*s.uniqueness) : Json(nullptr);
                j["label"] = to_string(s.label);
                j["elapsed_ms"] = rep.elapsed();
                out << j.dump() << '\n';
                if (s.oracle_value)
                    ++reachable;
            }
    if (instances == 0)
        throw InvalidArgument("no instance of Omega' in the given ranges");
    if (reachable == 0)
        throw CapacityError("every instance exceeds the sweep budget");
    return kExitOk;
}

// ---- family -----------------------------------------------------------------

struct FamilyMakeArgs {
    std::string kind;
    int n = 0, k = 0, j = 0, i = 1;
};

int cmd_family_make(const FamilyMakeArgs& a, std::ostream& out)
{
    if (a.kind == "star")
        write_family(out, star_uniform(a.n, a.k, a.i));
    else if (a.kind == "a")
        write_family(out, a_family_uniform(a.n, a.k, a.j));
    else if (a.kind == "b")
        write_family(out, b_family_uniform(a.n, a.k, a.j));
    else if (a.kind == "star-measure")
        write_family(out, star_measure(a.n, a.i));
    else if (a.kind == "a-measure")
        write_family(out, a_family_measure(a.n, a.j));
    else if (a.kind == "b-measure")
        write_family(out, b_family_measure(a.n, a.j));
    else
        throw InvalidArgument("unknown family kind '" + a.kind + "'");
    return kExitOk;
}

struct FamilyInfoArgs {
    std::string file;
    std::string cross;
    std::vector<std::string> measures;
};

FamilyFile load_family(const std::string& path)
{
    if (path == "-")
        return read_family(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    return read_family(in);
}

int cmd_family_info(const RunConfig& cfg, const FamilyInfoArgs& a, std::ostream& out)
{
    require_json(cfg, "family info");
    Reporter rep(cfg, "family-info");
    const FamilyFile f = load_family(a.file);
    const GeneralFamily g = f.general();
    Json j = rep.header();
    j["n"] = f.n;
    j["k"] = f.k ? Json(*f.k) : Json(nullptr);
    j["size"] = g.size();
    Json ms = Json::object();
    for (const auto& p : a.measures)
        ms[p] = to_string(measure(g, parse_rational(p)));
    j["measures"] = ms;
    int code = kExitOk;
    if (!a.cross.empty()) {
        const GeneralFamily other = load_family(a.cross).general();
        const bool cross = is_cross_intersecting(g, other);
        j["cross_intersecting"] = cross;
        j["product"] = (Natural(g.size()) * Natural(other.size())).str();
        if (!cross)
            code = kExitFails;
    }
    j["elapsed_ms"] = rep.elapsed();
    print_json(out, j);
    return code;
}

// ---- cascade ----------------------------------------------------------------

struct CascadeArgs {
    std::string m;
    int u = 0;
    std::optional<int> v, s;
};

int cmd_cascade(const RunConfig& cfg, const CascadeArgs& a, std::ostream& out)
{
    require_json(cfg, "cascade");
    Reporter rep(cfg, "cascade");
    Natural m;
    try {
        m = Natural(a.m);
    } catch (const std::exception&) {
        throw InvalidArgument("m must be a nonnegative integer");
    }
    const CascadeForm c = cascade_decompose(m, a.u);
    Json j = rep.header();
    j["m"] = m.str();
    j["u"] = a.u;
    Json terms = Json::array();
    for (const auto& t : c.terms)
        terms.push_back(Json{{"a", t.a}, {"level", t.level}, {"binom", binom(t.a, t.level).str()}});
    j["terms"] = terms;
    if (a.v) {
        j["v"] = *a.v;
        j["shadow_lower_bound"] = shadow_lower_bound(m, a.u, *a.v).str();
    }
    if (a.s) {
        const TruncatedCascade tc = truncate_cascade(c, *a.s);
        j["s"] = tc.s;
        j["x"] = tc.x;
        if (a.v && *a.v < a.u)
            j["lovasz_bound"] = lovasz_bound(tc, *a.v);
    }
    j["elapsed_ms"] = rep.elapsed();
    print_json(out, j);
    return kExitOk;
}

// ---- constants --------------------------------------------------------------

struct ConstantsArgs {
    int i_star_max = 8;
    std::optional<double> alpha;
};

int cmd_constants(const RunConfig& cfg, const ConstantsArgs& a, std::ostream& out)
{
    require_json(cfg, "constants");
    Reporter rep(cfg, "constants");
    const auto [at, bt] = tilde_constants();
    Json j = rep.header();
    j["alpha_tilde"] = at;
    j["beta_tilde"] = bt;
    Json stars = Json::array();
    for (int i = 4; i <= a.i_star_max; ++i) {
        const auto [as, bs] = alpha_beta_star(i);
        stars.push_back(Json{{"i", i}, {"alpha_star", as}, {"beta_star", bs}});
    }
    j["alpha_beta_star"] = stars;
    if (a.alpha) {
        j["alpha"] = *a.alpha;
        j["i0"] = i0(*a.alpha, cfg.i_max);
    }
    j["elapsed_ms"] = rep.elapsed();
    print_json(out, j);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cross-intersecting families: exact oracles, region calculus and figure data", "crossint"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--tolerance", cfg.tolerance, "Comparison tolerance for floating conditions")
        ->check(CLI::PositiveNumber);
    app.add_option("--j-cap", cfg.j_cap, "Explicitly checked e_j indices")->check(CLI::PositiveNumber);
    app.add_option("--i-max", cfg.i_max, "Upper end of the i0 scan")->check(CLI::Range(2, 1'000'000));
    app.add_option("--sweep-budget", cfg.sweep_budget, "Largest C(n,k) the cascade sweep accepts")
        ->check(CLI::PositiveNumber);
    auto* output_opt = app.add_option("--output", cfg.output, "Output format (region defaults to csv)")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "Seed for sampled points");
    app.add_flag("--timing", cfg.timing, "Report elapsed_ms (otherwise null)");

    std::function<int()> action;

    MnklArgs mnkl;
    auto* c_mnkl = app.add_subcommand("mnkl", "Maximum of |A||B| over cross-intersecting k- and l-uniform pairs");
    c_mnkl->add_option("n", mnkl.n)->required();
    c_mnkl->add_option("k", mnkl.k)->required();
    c_mnkl->add_option("l", mnkl.l)->required();
    c_mnkl->add_option("--method", mnkl.method)->check(CLI::IsMember({"cascade", "enum", "both"}));
    c_mnkl->add_option("--witness-cap", mnkl.witness_cap)->check(CLI::PositiveNumber);
    c_mnkl->callback([&] { action = [&] { return cmd_mnkl(cfg, mnkl, out); }; });

    RegionArgs region;
    auto* c_region = app.add_subcommand("region", "Boundary curves as CSV");
    c_region->add_option("--what", region.what)
        ->check(CLI::IsMember({"ej", "delta", "delta-prime", "delta-sample"}));
    c_region->add_option("--grid", region.grid);
    c_region->add_option("--alpha-range", region.alpha_range)->expected(2);
    c_region->add_option("--j-max", region.j_max);
    c_region->callback([&] { action = [&] { return cmd_region(cfg, region, out); }; });

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "Evaluate c1, c2, delta, delta-prime or the claim conditions");
    c_check->add_option("nkl", check.nkl)->expected(0, 3);
    c_check->add_option("--alpha", check.alpha);
    c_check->add_option("--beta", check.beta);
    c_check->add_option("--conditions", check.conditions);
    c_check->callback([&] { action = [&] { return cmd_check(cfg, check, out); }; });

    MeasureArgs meas;
    auto* c_measure = app.add_subcommand("measure", "Exact maximum of mu_alpha(A) mu_beta(B) on 2^[n]");
    c_measure->add_option("n", meas.n)->required();
    c_measure->add_option("--alpha", meas.alpha)->required();
    c_measure->add_option("--beta", meas.beta)->required();
    c_measure->add_option("--witness-cap", meas.witness_cap)->check(CLI::PositiveNumber);
    c_measure->callback([&] { action = [&] { return cmd_measure(cfg, meas, out); }; });

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Conjecture evidence over Omega' instances, one JSON line each");
    c_scan->add_option("--n-range", scan.n_range)->expected(2)->required();
    c_scan->add_option("--k-range", scan.k_range)->expected(2)->required();
    c_scan->add_option("--l-range", scan.l_range)->expected(2)->required();
    c_scan->add_option("--j-max", scan.j_max);
    c_scan->callback([&] { action = [&] { return cmd_scan(cfg, scan, out); }; });

    auto* c_family = app.add_subcommand("family", "Build or inspect families in the text format");
    c_family->require_subcommand(1);
    FamilyMakeArgs make;
    auto* c_make = c_family->add_subcommand("make", "Write a named family");
    c_make->add_option("--kind", make.kind)->required()
        ->check(CLI::IsMember({"star", "a", "b", "star-measure", "a-measure", "b-measure"}));
    c_make->add_option("--n", make.n)->required();
    c_make->add_option("--k", make.k, "Uniformity (k for star and a, l for b)");
    c_make->add_option("--j", make.j);
    c_make->add_option("--i", make.i, "Center of a star");
    c_make->callback([&] { action = [&] { return cmd_family_make(make, out); }; });
    FamilyInfoArgs info;
    auto* c_info = c_family->add_subcommand("info", "Size, measures and cross-intersection of a family file");
    c_info->add_option("file", info.file, "Family file, - for standard input")->required();
    c_info->add_option("--cross", info.cross, "Second family file to test against");
    c_info->add_option("--measure", info.measures, "p/q values for exact measures");
    c_info->callback([&] { action = [&] { return cmd_family_info(cfg, info, out); }; });

    CascadeArgs casc;
    auto* c_cascade = app.add_subcommand("cascade", "u-cascade of m with shadow bounds");
    c_cascade->add_option("m", casc.m)->required();
    c_cascade->add_option("u", casc.u)->required();
    c_cascade->add_option("--v", casc.v);
    c_cascade->add_option("--s", casc.s);
    c_cascade->callback([&] { action = [&] { return cmd_cascade(cfg, casc, out); }; });

    ConstantsArgs consts;
    auto* c_consts = app.add_subcommand("constants", "The cusp constants, alpha_*(i), beta_*(i) and i0");
    c_consts->add_option("--i-star-max", consts.i_star_max)->check(CLI::Range(4, 200));
    c_consts->add_option("--alpha", consts.alpha);
    c_consts->callback([&] { action = [&] { return cmd_constants(cfg, consts, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (output_opt->count() == 0 && c_region->parsed())
        cfg.output = "csv";

    try {
        return action();
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << '\n';
        return kExitFails;
    }
}

} // namespace crossint
