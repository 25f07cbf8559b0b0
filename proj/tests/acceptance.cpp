// Acceptance criteria 1-8. One PASS/FAIL line per criterion; exit status 1 if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "crossbi/cli.hpp"
#include "support.hpp"

using namespace crossbi;
using namespace crossbi::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = "first failure: " + what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

Outcome axiom_suites() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t objects = 0;
    for (const auto &f : {Q, F5}) {
        std::vector<std::pair<std::string, HopfData>> hs;
        for (std::size_t n = 1; n <= 4; ++n)
            hs.emplace_back("k[Z" + std::to_string(n) + "]", group_algebra(n, f));
        hs.emplace_back("H4", sweedler_h4(f));
        for (const auto &[name, H] : hs) {
            const HopfData dual{dualize(H.bia), H.antipode.transpose()};
            for (const auto &[label, X] : {std::pair{name, H}, std::pair{name + "*", dual}}) {
                const auto where = label + " over " + f.name();
                o.require(check_algebra(X.bia.alg).ok(), where + " algebra");
                o.require(check_coalgebra(X.bia.coa).ok(), where + " coalgebra");
                o.require(check_bialgebra(X.bia).ok(), where + " bialgebra");
                o.require(check_hopf(X).report.ok(), where + " hopf");
                ++objects;
            }
        }
    }
    const double s = seconds_since(t0);
    o.require(s < 5.0, "runtime " + fmt(s) + " >= 5s");
    if (o.pass)
        o.detail = std::to_string(objects) + " objects, zero violations, " + fmt(s);
    return o;
}

Outcome crossed_iff() {
    Outcome o;
    std::size_t agree = 0, total = 0, random_norm = 0, catalog = 0, co_agree = 0, unnorm = 0, gauge = 0;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (const auto &e : crossed_corpus(seed)) {
            const auto c = build_crossed_product(e.data);
            if (e.label == "random") {
                // Outside the normalized scope: brz1-5 must still imply
                // validity, and every valid product must come from
                // normalized data that passes brz1-5.
                ++unnorm;
                if (brz_verdict(c.report))
                    o.require(brute_verdict(c.report), "brz without validity on unnormalized data");
                if (brute_verdict(c.report) && !brz_verdict(c.report)) {
                    ++gauge;
                    const auto r = renormalized(e.data);
                    o.require(crossed_multiplication(r) == crossed_multiplication(e.data) &&
                                  brz_verdict(check_crossed_conditions(r)),
                              "unnormalized disagreement not explained by normalization");
                }
                continue;
            }
            ++total;
            random_norm += e.label == "normalized";
            catalog += e.label == "catalog";
            const bool a = brz_verdict(c.report) == brute_verdict(c.report);
            agree += a;
            o.require(a, "crossed verdicts disagree on a " + e.label + " entry (seed " + std::to_string(seed) + ")");
            const auto b = build_crossed_coproduct(dual_cocrossed(e.data));
            const bool ca = cobrz_verdict(b.report) == cobrute_verdict(b.report);
            co_agree += ca;
            o.require(ca, "coproduct verdicts disagree on a dual " + e.label + " entry");
        }
    }
    o.require(random_norm >= 50, "fewer than 50 random entries");
    if (o.pass)
        o.detail = "brz vs brute force " + std::to_string(agree) + "/" + std::to_string(total) + " (" +
                   std::to_string(random_norm) + " unit-normalized random, " + std::to_string(catalog) +
                   " catalog); cobrz vs brute force " + std::to_string(co_agree) + "/" + std::to_string(total) +
                   "; unnormalized random " + std::to_string(unnorm) + ", " + std::to_string(gauge) +
                   " gauge-only disagreements, all renormalize";
    return o;
}

struct Witnessed {
    CrossedData base;
    TwistPair pair;
    CrossedData primed;
    EquivalenceWitness witness;
};

Outcome twist_forward(std::vector<Witnessed> &witnesses) {
    Outcome o;
    Gen g(20240);
    const auto bases = valid_bases(F5);
    std::size_t pairs = 0, passing = 0;
    while (pairs < 150) {
        const auto &d = bases[g.below(bases.size())];
        const auto theta = random_unital_theta(g, d);
        const auto s = solve_gamma(d, theta);
        if (s.kind != GammaSolution::Kind::Unique)
            continue;
        ++pairs;
        const TwistPair p{theta, s.gamma};
        if (!check_twist_conditions(d, p).ok())
            continue;
        ++passing;
        const auto out = derive_twisted_data(d, p);
        o.require(build_crossed_product(out.value).report.ok(), "primed data is not a crossed product");
        try {
            const auto w = build_phi(d, p);
            o.require(verify_crossed_equivalence(out.value, d, w).ok(), "phi is not an equivalence");
            witnesses.push_back({d, p, out.value, w});
        } catch (const Error &e) {
            o.require(false, std::string("build_phi: ") + e.what());
        }
    }
    o.require(passing >= 100, "fewer than 100 passing pairs");
    if (o.pass)
        o.detail = std::to_string(pairs) + " pairs, " + std::to_string(passing) +
                   " pass cros1-cros4, all give crossed products with verified phi";
    return o;
}

Outcome twist_round_trip(const std::vector<Witnessed> &witnesses) {
    Outcome o;
    for (const auto &w : witnesses) {
        try {
            const auto e = extract_twisting_pair(w.primed, w.base, w.witness.phi, w.witness.phi_inv);
            o.require(e.report.ok(), "extraction report fails");
            o.require(e.pair.theta == w.pair.theta && e.pair.gamma == w.pair.gamma, "pair not recovered");
            const auto again = derive_twisted_data(w.base, e.pair);
            o.require(again.value.R == w.primed.R && again.value.sigma == w.primed.sigma, "R', sigma' not regenerated");
        } catch (const Error &e) {
            o.require(false, std::string("extract: ") + e.what());
        }
    }
    o.require(!witnesses.empty(), "no witnesses");
    if (o.pass)
        o.detail = std::to_string(witnesses.size()) + " witnesses, pairs and (R', sigma') reproduced exactly";
    return o;
}

void bialgebra_case(Outcome &o, const BaseCrossBialgebra &b, const TwistPair &p, const std::string &where) {
    o.require(check_extra_conditions(b, p).ok(), where + " extra conditions");
    o.require(check_cucu_lemmas(b, p).ok(), where + " cucu1-cucu6");
    o.require(wprime_long(b, p) == wprime_short(b, p), where + " Wprim vs Wprimnou");
    const auto r = verify_bialgebra_equivalence(b, p);
    o.require(r.report.passed("deltaprim") && r.report.passed("deltaprim_conjugation"), where + " Delta' agreement");
    o.require(r.report.ok(), where + " verify_bialgebra_equivalence");
    const auto e = extract_bialgebra_pair(b, r.value.primed, r.value.witness.phi, r.value.witness.phi_inv);
    o.require(e.report.ok() && e.pair.theta == p.theta && e.pair.gamma == p.gamma, where + " converse round trip");
}

Outcome bialgebra_twist() {
    Outcome o;
    std::size_t cases = 0;
    try {
        for (const auto &f : {Q, F5}) {
            // k[Z2] (x) k[Z2] and k[Z4] as cross product bialgebras over k[Z2].
            for (const auto &crossed : {tensor_crossed(zn(2, f), 2), z4_crossed(f)}) {
                const auto built = base_from(crossed, 2);
                o.require(built.report.ok(), "base over " + f.name());
                const Vec one{f.one(), f.zero()};
                const Vec u{f.from_int(2), -f.one()};
                const Vec ui{f.from_fraction(2, 3), f.from_fraction(1, 3)};
                bialgebra_case(o, built.value, lazy_pair(crossed, {one, u}, {one, ui}), "fixed lazy pair over " + f.name());
                ++cases;
                Gen g(f.characteristic() + 1);
                for (int i = 0; i < 20;) {
                    TwistPair p;
                    if (!random_lazy_pair(g, crossed, p))
                        continue;
                    bialgebra_case(o, built.value, p, "random lazy pair over " + f.name());
                    ++cases;
                    ++i;
                }
            }
        }
    } catch (const Error &e) {
        o.require(false, e.what());
    }
    if (o.pass)
        o.detail = std::to_string(cases) + " lazy pairs on Z2-based bases over Q and F5, all checks and round trips pass";
    return o;
}

Outcome majid() {
    Outcome o;
    double worst = 0;
    for (const auto &f : {Q, F5}) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = majid_equivalence_demo(f);
        const double s = seconds_since(t0);
        worst = std::max(worst, s);
        o.require(r.ok(), "over " + f.name() + ": " + failures(r));
        for (const char *n : {"phi_invertible", "phi_multiplicative", "phi_comultiplicative", "phi_unital",
                              "phi_counital", "phi_right_H_linear", "phi_left_comodule"})
            o.require(r.passed(n), std::string(n) + " over " + f.name());
        o.require(s < 1.0, "runtime " + fmt(s) + " over " + f.name());
    }
    if (o.pass)
        o.detail = "bialgebra iso, right H-module and left H*cop-comodule morphism over Q and F5; slowest " + fmt(worst);
    return o;
}

Outcome double_h4() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto D = drinfeld_double(sweedler_h4(Q));
    const auto r = check_bialgebra(D.carrier);
    const double s = seconds_since(t0);
    o.require(D.carrier.dim() == 16, "dimension");
    o.require(r.ok(), failures(r));
    o.require(s < 60.0, "runtime " + fmt(s));
    if (o.pass)
        o.detail = "dim 16, check_bialgebra exact, " + fmt(s);
    return o;
}

Outcome cli_determinism() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "crossbi_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto run = [](const std::vector<std::string> &args, std::string &out) {
        std::ostringstream os, es;
        const int code = cli::run(args, os, es);
        out = os.str();
        return code;
    };
    std::string a, b;
    o.require(run({"demo", "majid", "--json"}, a) == 0, "demo majid exit code");
    run({"demo", "majid", "--json"}, b);
    o.require(!a.empty() && a == b, "demo majid --json differs between runs");
    std::size_t objects = 0;
    for (const char *field : {"Q", "F5"})
        for (const auto &name : cli::catalog_names()) {
            const auto path = (dir / (name + "_" + field + ".json")).string();
            std::string ignored;
            o.require(run({"export", name, "--field", field, "-o", path}, ignored) == 0, "export " + name);
            std::ifstream in(path);
            const std::string text{std::istreambuf_iterator<char>(in), {}};
            o.require(cli::serialize(cli::parse_bundle(text, path)) == text, "re-serialization of " + name);
            o.require(run({"check", path}, ignored) == 0, "check " + name + " over " + field);
            ++objects;
        }
    std::filesystem::remove_all(dir);
    if (o.pass)
        o.detail = "demo majid --json byte-identical; " + std::to_string(objects) +
                   " exported bundles re-serialize identically and check clean";
    return o;
}

} // namespace

int main() {
    std::vector<Witnessed> witnesses;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"axiom suites", axiom_suites},
        {"crossed product iff and its dual", crossed_iff},
        {"forward twisting on random pairs", [&] { return twist_forward(witnesses); }},
        {"twisting pair round trip", [&] { return twist_round_trip(witnesses); }},
        {"cross product bialgebra equivalence", bialgebra_twist},
        {"Majid equivalence", majid},
        {"D(H4) stress", double_h4},
        {"CLI determinism", cli_determinism},
    };
    bool all = true;
    int i = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("AC%d %s  %s: %s\n", ++i, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
