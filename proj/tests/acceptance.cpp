// Acceptance run: one PASS/FAIL line per criterion.
//
// A criterion listed as unattainable prints FAIL with the reason but does not
// change the exit status; any other FAIL does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hypfq/arith.hpp"
#include "hypfq/fields.hpp"
#include "hypfq/verify.hpp"

using namespace hypfq;

namespace {

using Fields = std::vector<std::pair<std::uint32_t, int>>;

struct Outcome {
    bool pass = true;
    std::string detail;
    bool unattainable = false;
};

Report run(std::vector<std::string> ids, Fields fields, int dmax = 6, int threads = 4) {
    SuiteConfig cfg;
    cfg.suites = std::move(ids);
    cfg.fields = std::move(fields);
    cfg.dmax = dmax;
    cfg.threads = threads;
    return run_suite(cfg);
}

Fields grid(std::vector<std::uint32_t> primes, int rmax) {
    Fields f;
    for (auto p : primes)
        for (int r = 1; r <= rmax; ++r) f.emplace_back(p, r);
    return f;
}

Fields from_q(std::vector<std::uint32_t> qs) {
    Fields f;
    for (auto q : qs)
        for (std::uint32_t p = 3; p <= q; p += 2)
            if (is_prime(p) && q % p == 0) {
                int r = 0;
                for (std::uint32_t m = q; m > 1; m /= p) ++r;
                f.emplace_back(p, r);
                break;
            }
    return f;
}

std::string param(const CheckRecord& r, const std::string& name) {
    for (const auto& [k, v] : r.params)
        if (k == name) return v;
    return "";
}

int iparam(const CheckRecord& r, const std::string& name) { return std::stoi(param(r, name)); }

std::uint32_t q_of(const CheckRecord& r) { return static_cast<std::uint32_t>(checked_pow(iparam(r, "p"), iparam(r, "r"))); }

std::string first_failure(const Report& rep) {
    for (const auto& r : rep.records)
        if (r.status == Status::fail) {
            std::string s = r.id;
            for (const auto& [k, v] : r.params) s += " " + k + "=" + v;
            if (!r.reason.empty()) s += " (" + r.reason + ")";
            if (!r.diagnostics.empty()) s += ": " + r.diagnostics.front();
            return s;
        }
    return "";
}

std::string counts(const Report& rep) {
    return std::to_string(rep.count(Status::pass)) + " pass, " + std::to_string(rep.count(Status::fail)) + " fail, " +
           std::to_string(rep.count(Status::skip)) + " skip";
}

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

bool admissible(std::uint32_t p, int d, int k) { return (d % p) && (k % p) && ((d - k) % p); }

// ---------------------------------------------------------------- criteria

Outcome diagonal_counts() {
    const auto t0 = std::chrono::steady_clock::now();
    const Report rep = run({"diagonal-counts"}, grid({3, 5, 7, 11, 13}, 2), 7);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    std::int64_t expected = 0;
    for (auto [p, r] : grid({3, 5, 7, 11, 13}, 2))
        for (int d = 2; d <= 7; ++d)
            for (int k = 1; k < d; ++k) expected += gcd_i64(d, k) == 1 && admissible(p, d, k);
    if (rep.count(Status::fail)) fail(o, first_failure(rep));
    if (rep.count(Status::pass) != expected)
        fail(o, "expected " + std::to_string(expected) + " passing tuples, got " + std::to_string(rep.count(Status::pass)));
    if (secs > 120) fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = counts(rep) + ", " + std::to_string(static_cast<int>(secs + 0.5)) + " s";
    return o;
}

Outcome diagonal_gn() {
    const Report rep = run({"diagonal-gn"}, grid({3, 5, 7, 11, 13}, 2), 7);
    Outcome o;
    std::int64_t expected = 0;
    for (auto [p, r] : grid({3, 5, 7, 11, 13}, 2))
        for (int d = 2; d <= 7; ++d)
            for (int k = 1; k < d; ++k) expected += admissible(p, d, k);
    if (rep.count(Status::fail)) fail(o, first_failure(rep));
    if (rep.count(Status::pass) != expected)
        fail(o, "expected " + std::to_string(expected) + " passing tuples, got " + std::to_string(rep.count(Status::pass)));
    std::set<std::pair<int, int>> seen;
    for (const auto& r : rep.records)
        if (r.status == Status::pass && r.branch == "non-coprime") seen.emplace(iparam(r, "d"), iparam(r, "k"));
    for (auto dk : {std::pair{4, 2}, std::pair{6, 3}, std::pair{6, 2}})
        if (!seen.count(dk)) fail(o, "no passing non-coprime tuple for d=" + std::to_string(dk.first));
    if (o.pass) o.detail = counts(rep) + ", " + std::to_string(seen.size()) + " non-coprime (d,k)";
    return o;
}

const std::vector<std::uint32_t> kSummationQ{5, 7, 11, 13, 25, 49};

Outcome summation(const std::string& id, const std::set<std::pair<int, int>>& pairs, bool with_zero) {
    const Report rep = run({id}, from_q(kSummationQ), 7);
    Outcome o;
    std::map<std::pair<int, int>, int> passes;
    std::int64_t instances = 0;
    for (const auto& r : rep.records) {
        const std::pair<int, int> dk{iparam(r, "d"), iparam(r, "k")};
        if (!pairs.count(dk)) continue;
        const std::uint32_t p = iparam(r, "p"), q = q_of(r);
        if (r.status == Status::fail) fail(o, first_failure(rep));
        if (r.status == Status::skip && admissible(p, dk.first, dk.second)) fail(o, "admissible tuple skipped: " + r.reason);
        if (r.status != Status::pass) continue;
        ++passes[dk];
        instances += r.instances;
        const std::int64_t want = q <= 13 ? q - (with_zero ? 0 : 1) : 10 + (with_zero ? 1 : 0);
        if (r.instances != want)
            fail(o, "q=" + std::to_string(q) + ": " + std::to_string(r.instances) + " arguments, expected " + std::to_string(want));
    }
    for (const auto& dk : pairs)
        if (!passes[dk]) fail(o, "no passing field for d=" + std::to_string(dk.first) + ", k=" + std::to_string(dk.second));
    if (o.pass) o.detail = std::to_string(instances) + " arguments over " + std::to_string(pairs.size()) + " (d,k)";
    return o;
}

Outcome weierstrass() {
    const Report rep = run({"weierstrass-trace-sum"}, from_q({5, 11, 17, 23}));
    Outcome o;
    std::int64_t diagnostics = 0, records = 0;
    for (const auto& r : rep.records) {
        if (r.status != Status::pass) fail(o, r.status == Status::fail ? first_failure(rep) : "skipped: " + r.reason);
        diagnostics += r.diagnostics.size();
        ++records;
    }
    if (records != 4 + 10 + 16 + 22) fail(o, "expected one record per b, got " + std::to_string(records));
    if (!o.pass) return o;
    o.detail = "identity exact for all " + std::to_string(records) + " b";
    if (diagnostics) {
        o.pass = false;
        o.unattainable = true;
        o.detail += "; " + std::to_string(diagnostics) +
                    " singular-parameter diagnostics (target 0): each b has one singular t with phi(t(t^3-1)) != 0";
    }
    return o;
}

Outcome legendre_sum() {
    const Fields fields = grid({3, 5, 7, 11, 13}, 2);
    const Report rep = run({"legendre-trace-sum"}, fields);
    Outcome o;
    if (rep.count(Status::fail)) fail(o, first_failure(rep));
    if (rep.count(Status::skip)) fail(o, "unexpected skip");
    std::map<std::pair<int, int>, std::set<std::string>> hit;
    for (const auto& r : rep.records) hit[{iparam(r, "p"), iparam(r, "r")}].insert(r.branch);
    for (auto [p, r] : fields) {
        auto f = make_field(p, r);
        std::set<std::string> branches;
        for (const auto& x : f->elements()) {
            if (x.is_zero()) continue;
            const FqElem d = x * x - f->from_int(4);
            branches.insert(d.is_zero() ? "f^2=4" : legendre(d) > 0 ? "f^2-4 square" : "f^2-4 non-square");
        }
        if (hit[{p, r}] != branches) fail(o, "branch coverage differs on q=" + std::to_string(f->q()));
    }
    if (o.pass) o.detail = std::to_string(rep.records.size()) + " values of f, every admissible branch exercised";
    return o;
}

Outcome hessian() {
    const Report rep = run({"hessian-sum"}, from_q({5, 11, 17, 23, 29}));
    Outcome o;
    for (const auto& r : rep.records)
        if (r.status != Status::pass || r.lhs != "1") fail(o, "q=" + std::to_string(q_of(r)) + ": sum " + r.lhs);
    if (rep.records.size() != 5) fail(o, "expected 5 records");
    if (o.pass) o.detail = "sum = 1 on q = 5, 11, 17, 23, 29";
    return o;
}

Outcome gross_koblitz() {
    const Report rep = run({"gross-koblitz"}, grid({3, 5, 7}, 2));
    Outcome o;
    std::int64_t n = 0;
    for (const auto& r : rep.records) {
        if (r.status != Status::pass) fail(o, r.status == Status::fail ? first_failure(rep) : "skipped: " + r.reason);
        if (r.precision < 6) fail(o, "precision " + std::to_string(r.precision));
        if (r.instances != static_cast<std::int64_t>(q_of(r)) - 2) fail(o, "not every a in [1, q-2]");
        n += r.instances;
    }
    if (o.pass) o.detail = std::to_string(n) + " Gauss sums";
    return o;
}

Outcome identity_families() {
    const std::vector<std::string> ids{"theta-expansion", "gauss-norm",       "jacobi-gauss",      "gamma-mult-minus",
                                       "gamma-mult-plus", "gamma-reflection", "floor-d",           "floor-l",
                                       "gamma-phi-sum-bar", "gamma-phi-sum",  "g3-to-g2",          "g2-transform",
                                       "g2-phi-sum",      "g2-cubic-sum",     "greene-cubic-sum",  "phi-sum"};
    const Report rep = run(ids, from_q({5, 7, 9, 11, 13, 25}));
    Outcome o;
    if (rep.count(Status::fail)) fail(o, first_failure(rep));
    std::map<std::string, std::int64_t> passed;
    std::int64_t phi = 0;
    for (const auto& r : rep.records) {
        if (r.status == Status::pass) passed[r.id + (r.branch.empty() ? "" : " [" + r.branch + "]")]++;
        if (r.id == "phi-sum") phi += r.status == Status::pass;
        // a branch may only be skipped for a stated precondition or an empty branch
        if (r.status == Status::skip && r.reason.rfind("requires", 0) != 0 && r.reason.rfind("no ", 0) != 0 &&
            r.reason.rfind("p divides", 0) != 0)
            fail(o, r.id + " skipped: " + r.reason);
    }
    if (phi != 6) fail(o, "phi-sum holds on " + std::to_string(phi) + " of 6 fields");
    for (const std::string b : {"g2-phi-sum [x=1]", "g2-phi-sum [(x-1)/x square]", "g2-phi-sum [(x-1)/x non-square]",
                                "g2-cubic-sum [unit]", "g2-cubic-sum [shifted]", "greene-cubic-sum [unit]",
                                "greene-cubic-sum [shifted]", "g2-transform [inversion]", "g2-transform [twist]",
                                "g2-transform [cubic]", "gamma-reflection [complement]", "gamma-reflection [half-shift]"})
        if (!passed[b]) fail(o, "branch never exercised: " + b);
    if (o.pass) o.detail = counts(rep);
    return o;
}

Outcome shadow() {
    std::vector<std::uint32_t> qs;
    for (std::uint32_t q = 3; q <= 49; q += 2) {
        for (std::uint32_t p = 3; p <= q; p += 2)
            if (is_prime(p) && q % p == 0) {
                std::uint32_t m = q;
                while (m % p == 0) m /= p;
                if (m == 1) qs.push_back(q);
                break;
            }
    }
    const Report rep = run({"complex-shadow"}, from_q(qs));
    Outcome o;
    for (const auto& r : rep.records)
        if (r.status != Status::pass) fail(o, "q=" + std::to_string(q_of(r)) + ": " + r.lhs + r.reason);
    if (o.pass) o.detail = std::to_string(rep.records.size()) + " fields";
    return o;
}

Outcome determinism() {
    SuiteConfig cfg;
    cfg.threads = 1;
    const std::string a = to_json(run_suite(cfg));
    cfg.threads = 4;
    const std::string b = to_json(run_suite(cfg));
    Outcome o;
    if (a != b) fail(o, "JSON reports differ between 1 and 4 threads");
    if (o.pass) o.detail = std::to_string(a.size()) + " bytes, identical for 1 and 4 threads";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"diagonal point counts equal both root counts", diagonal_counts},
        {"1 + nGn (with correction) recovers r_q", diagonal_gn},
        {"odd (d,k) summation identity",
         [] { return summation("odd-summation", {{3, 1}, {5, 1}, {5, 3}, {7, 3}}, false); }},
        {"even d summation identity, x = 0 included",
         [] { return summation("even-summation", {{4, 2}, {4, 3}, {6, 3}, {6, 5}}, true); }},
        {"Weierstrass trace sum equals -q phi(b) 3G3", weierstrass},
        {"Legendre-form trace sum, three branches", legendre_sum},
        {"Hessian sum equals 1", hessian},
        {"Gross-Koblitz", gross_koblitz},
        {"Gauss/Jacobi, Gamma_p, floor, 2G2/3G3 families", identity_families},
        {"complex shadow |g|^2 = q", shadow},
        {"thread-count independent JSON", determinism},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2zu %s: %s -- %s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), o.unattainable ? " [unattainable]" : "");
        std::fflush(stdout);
        if (!o.pass && !o.unattainable) ++unexpected;
    }
    return unexpected ? 1 : 0;
}
