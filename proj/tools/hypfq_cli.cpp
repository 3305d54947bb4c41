// hypfq: evaluate nGn values, count points, run the verification grid.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypfq/arith.hpp"
#include "hypfq/characters.hpp"
#include "hypfq/fields.hpp"
#include "hypfq/hypergeo.hpp"
#include "hypfq/padics.hpp"
#include "hypfq/rational.hpp"
#include "hypfq/varieties.hpp"
#include "hypfq/verify.hpp"
#include "json.hpp"

namespace {

using namespace hypfq;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldOpts {
    std::uint32_t p = 0;
    int r = 1;
};

void add_field_opts(CLI::App* cmd, FieldOpts& f) {
    cmd->add_option("--p", f.p, "Odd prime p")->required();
    cmd->add_option("--r", f.r, "Extension degree r (q = p^r)")->check(CLI::Range(1, kMaxDegree));
}

std::shared_ptr<const FieldCtx> field_of(const FieldOpts& o) {
    if (o.p < 3 || !is_prime(o.p)) throw UsageError("--p must be an odd prime");
    return make_field(o.p, o.r);
}

FqElem parse_elem(const FieldCtx& f, const std::string& s, const char* name) {
    try {
        return f.parse(s);
    } catch (const std::exception& e) {
        throw UsageError(std::string(name) + ": " + e.what());
    }
}

// Largest |n| that the default precision resolves unambiguously.
std::int64_t recovery_bound(std::uint32_t q) {
    const double b = q + 1 + 2 * std::sqrt(static_cast<double>(q));
    return static_cast<std::int64_t>(std::ceil(b * b));
}

int resolve_precision(int requested, std::uint32_t p, int r) {
    const int dflt = default_precision(p, r);
    if (requested < 0) return dflt;
    if (requested < 1) throw UsageError("--precision must be positive");
    if (requested < dflt)
        std::cerr << "warning: precision " << requested << " is below the integer-recovery threshold " << dflt
                  << " for q = " << checked_pow(p, r) << "\n";
    return requested;
}

// ---------------------------------------------------------------- gn

struct GnOpts {
    FieldOpts field;
    std::string top, bottom, t;
    int precision = -1;
    std::string format = "plain";
};

int run_gn(const GnOpts& o) {
    auto f = field_of(o.field);
    GParams params;
    try {
        params = GParams{parse_rational_list(o.top), parse_rational_list(o.bottom)};
        params.validate(f->p());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const FqElem t = parse_elem(*f, o.t, "--t");
    const int M = resolve_precision(o.precision, f->p(), f->r());
    auto ctx = CharacterCtx::make(f, M);
    const PadicRationalZq v = GnEvaluator(*ctx, params, M)(t);
    const std::int64_t bound = recovery_bound(f->q());
    const auto n = v.to_integer(-bound, bound);
    if (o.format == "json") {
        ordered_json j;
        j["field"] = f->name();
        j["params"] = params.str();
        j["t"] = t.str();
        j["precision"] = M;
        j["value"] = v.str();
        j["valuation"] = v.is_zero() ? ordered_json(nullptr) : ordered_json(v.valuation());
        j["integer"] = n ? ordered_json(*n) : ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.str() << "\n";
        if (n) std::cout << "integer " << *n << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- count

struct CountOpts {
    FieldOpts field;
    int d = 0, k = 0;
    std::string lambda, a2 = "0", a4, a6, a;
    bool allow_singular = false;
    bool projective = false;
    std::string format = "plain";
};

void emit(const ordered_json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << " " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

int run_dsurface(const CountOpts& o) {
    auto f = field_of(o.field);
    DiagonalSurfaceParams dp{o.d, o.k, parse_elem(*f, o.lambda, "--lambda")};
    try {
        dp.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::int64_t D = count_projective_D(dp);
    if (o.format == "plain") {
        std::cout << D << "\n";
        return kOk;
    }
    ordered_json j;
    j["projective"] = D;
    j["affine"] = count_affine_N(dp);
    j["r_q"] = r_q(dp);
    j["r_q_prime"] = r_q_prime(dp);
    emit(j, o.format);
    return kOk;
}

int run_ec(const CountOpts& o) {
    auto f = field_of(o.field);
    WeierstrassCurve E{parse_elem(*f, o.a2, "--a2"), parse_elem(*f, o.a4, "--a4"), parse_elem(*f, o.a6, "--a6")};
    if (E.is_singular() && !o.allow_singular) throw UsageError("singular curve (pass --allow-singular to count it)");
    const EcCount c = ec_count(E, o.allow_singular);
    ordered_json j;
    j["points"] = c.points;
    j["a_q"] = c.a_q;
    j["singular"] = E.is_singular();
    emit(j, o.format);
    return kOk;
}

int run_hessian(const CountOpts& o) {
    auto f = field_of(o.field);
    const FqElem a = parse_elem(*f, o.a, "--a");
    if (a.pow(3).is_one()) throw UsageError("--a must satisfy a^3 != 1");
    const std::int64_t n = o.projective ? hessian_count_projective(a) : hessian_count(a);
    if (o.format == "plain") {
        std::cout << n << "\n";
        return kOk;
    }
    ordered_json j;
    j[o.projective ? "projective" : "affine"] = n;
    emit(j, o.format);
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    std::vector<std::string> suites{"all"};
    std::uint32_t pmax = 13;
    int rmax = 2;
    int dmax = 6;
    std::vector<std::uint32_t> qs;
    int precision = -1;
    int threads = 0;
    std::string out;
    std::string format = "json";
    bool timing = false;
    int samples = 10;
    std::uint32_t sample_above = 13;
    std::uint32_t gk_pmax = 7;
    std::uint32_t pair_qmax = 49;
};

std::pair<std::uint32_t, int> split_prime_power(std::uint32_t q) {
    for (std::uint32_t p = 3; p <= q; p += 2) {
        if (q % p) continue;
        if (!is_prime(p)) break;
        int r = 0;
        std::uint32_t m = q;
        while (m % p == 0) m /= p, ++r;
        if (m == 1) return {p, r};
        break;
    }
    throw UsageError("--q " + std::to_string(q) + " is not an odd prime power");
}

int env_threads() {
    const char* s = std::getenv("HYPFQ_THREADS");
    if (!s || !*s) return 1;
    try {
        const int n = std::stoi(s);
        if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError("HYPFQ_THREADS must be a positive integer");
}

int run_verify(const VerifyOpts& o) {
    SuiteConfig cfg;
    try {
        resolve_suites(o.suites);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    cfg.suites = o.suites;
    cfg.pmax = o.pmax;
    cfg.rmax = o.rmax;
    cfg.dmax = o.dmax;
    for (auto q : o.qs) cfg.fields.push_back(split_prime_power(q));
    if (o.precision >= 0) {
        auto grid = cfg.fields;
        if (grid.empty())
            for (int r = 1; r <= o.rmax; ++r)
                for (std::uint32_t p = 3; p <= o.pmax; p += 2)
                    if (is_prime(p)) grid.emplace_back(p, r);
        for (const auto& [p, r] : grid) resolve_precision(o.precision, p, r);
    }
    cfg.precision = o.precision;
    cfg.threads = o.threads > 0 ? o.threads : env_threads();
    cfg.timing = o.timing;
    cfg.samples = o.samples;
    cfg.sample_above = o.sample_above;
    cfg.gk_pmax = o.gk_pmax;
    cfg.pair_qmax = o.pair_qmax;

    const Report report = run_suite(cfg);
    std::string text;
    if (o.format == "json")
        text = to_json(report);
    else if (o.format == "csv")
        text = to_csv(report);
    else
        text = to_plain(report);

    if (o.out.empty() || o.out == "-") {
        std::cout << text;
    } else {
        std::ofstream os(o.out, std::ios::binary);
        if (!os) throw UsageError("cannot open " + o.out);
        os << text;
        std::cerr << "pass " << report.count(Status::pass) << ", fail " << report.count(Status::fail) << ", skip "
                  << report.count(Status::skip) << " -> " << o.out << "\n";
    }
    return report.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic and finite-field hypergeometric functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hypfq 0.1.0");

    GnOpts gn;
    auto* gn_cmd = app.add_subcommand("gn", "Evaluate nGn[top; bottom | t] over F_q");
    add_field_opts(gn_cmd, gn.field);
    gn_cmd->add_option("--top", gn.top, "Top parameters, e.g. 1/4,3/4")->required();
    gn_cmd->add_option("--bottom", gn.bottom, "Bottom parameters, e.g. 0,1/2")->required();
    gn_cmd->add_option("--t", gn.t, "Argument in base-p coefficient syntax c0,c1,...")->required();
    gn_cmd->add_option("--precision", gn.precision, "p-adic precision M");
    gn_cmd->add_option("--format", gn.format)->check(CLI::IsMember({"plain", "json"}));

    CountOpts cnt;
    auto* count_cmd = app.add_subcommand("count", "Point counts");
    count_cmd->require_subcommand(1);
    auto* ds_cmd = count_cmd->add_subcommand("dsurface", "X^d + Y^d = d lambda X^k Y^(d-k) in P^1(F_q)");
    add_field_opts(ds_cmd, cnt.field);
    ds_cmd->add_option("--d", cnt.d)->required();
    ds_cmd->add_option("--k", cnt.k)->required();
    ds_cmd->add_option("--lambda", cnt.lambda)->required();
    auto* ec_cmd = count_cmd->add_subcommand("ec", "y^2 = x^3 + a2 x^2 + a4 x + a6");
    add_field_opts(ec_cmd, cnt.field);
    ec_cmd->add_option("--a2", cnt.a2);
    ec_cmd->add_option("--a4", cnt.a4)->required();
    ec_cmd->add_option("--a6", cnt.a6)->required();
    ec_cmd->add_flag("--allow-singular", cnt.allow_singular);
    auto* hes_cmd = count_cmd->add_subcommand("hessian", "x^3 + y^3 + 1 = 3 a x y");
    add_field_opts(hes_cmd, cnt.field);
    hes_cmd->add_option("--a", cnt.a)->required();
    hes_cmd->add_flag("--projective", cnt.projective, "Include the points at infinity");
    for (auto* c : {ds_cmd, ec_cmd, hes_cmd}) c->add_option("--format", cnt.format)->check(CLI::IsMember({"plain", "json"}));

    VerifyOpts ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run the identity checks over a field grid");
    ver_cmd->add_option("--suite", ver.suites, "all, gk, or check ids (repeatable, comma-separated)")->delimiter(',');
    ver_cmd->add_option("--pmax", ver.pmax);
    ver_cmd->add_option("--rmax", ver.rmax)->check(CLI::Range(1, 4));
    ver_cmd->add_option("--dmax", ver.dmax)->check(CLI::Range(2, 12));
    ver_cmd->add_option("--q", ver.qs, "Explicit field sizes; replaces the pmax/rmax grid")->delimiter(',');
    ver_cmd->add_option("--precision", ver.precision, "p-adic precision M for every field");
    ver_cmd->add_option("--threads", ver.threads, "Worker threads (default: $HYPFQ_THREADS or 1)")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--out", ver.out, "Report path ('-' for stdout)");
    ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "plain"}));
    ver_cmd->add_flag("--timing", ver.timing, "Record per-check wall time");
    ver_cmd->add_option("--samples", ver.samples, "Sampled arguments for large fields")->check(CLI::PositiveNumber);
    ver_cmd->add_option("--sample-above", ver.sample_above, "Fields larger than this are sampled");
    ver_cmd->add_option("--gk-pmax", ver.gk_pmax, "Largest p for the Gauss-sum sweep");
    ver_cmd->add_option("--pair-qmax", ver.pair_qmax, "Largest q for character-pair sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gn_cmd) return run_gn(gn);
        if (*ds_cmd) return run_dsurface(cnt);
        if (*ec_cmd) return run_ec(cnt);
        if (*hes_cmd) return run_hessian(cnt);
        if (*ver_cmd) return run_verify(ver);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
