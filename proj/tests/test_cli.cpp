#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crossbi/cli.hpp"
#include "support.hpp"

using namespace crossbi;
using namespace crossbi::testing;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("crossbi_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) const {
        const auto p = (dir_ / name).string();
        std::ofstream(p) << text;
        return p;
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }
    static std::string read(const std::string &p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

std::string bundle_text(const FieldSpec &f, const auto &fill) {
    cli::Bundle b;
    b.field = f;
    fill(b);
    return cli::serialize(b);
}

} // namespace

TEST_F(Cli, ExportCheckRoundTripsForEveryCatalogObject) {
    for (const char *field : {"Q", "F5"})
        for (const auto &name : cli::catalog_names()) {
            const auto file = path(name + "_" + field + ".json");
            ASSERT_EQ(run({"export", name, "--field", field, "-o", file}).code, 0) << name;
            const auto text = read(file);
            EXPECT_EQ(cli::serialize(cli::parse_bundle(text, file)), text) << name;
            const auto r = run({"check", file});
            EXPECT_EQ(r.code, 0) << name << " " << field << "\n" << r.out << r.err;
            // Exporting again gives the same bytes.
            EXPECT_EQ(run({"export", name, "--field", field}).out, text) << name;
        }
}

TEST_F(Cli, CheckReportsJson) {
    const auto file = path("z2.json");
    ASSERT_EQ(run({"export", "z2", "-o", file}).code, 0);
    const auto r = run({"check", file, "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"command\": \"check\""), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("z2.bia.assoc"), std::string::npos) << r.out;
}

TEST_F(Cli, FailingChecksExitOne) {
    auto A = zn(2, Q);
    A.mult.at(0, 1) += Q.one();
    const auto file = write("bad.json", bundle_text(Q, [&](cli::Bundle &b) { cli::put(b, "bad", A); }));
    const auto r = run({"check", file});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("assoc"), std::string::npos);
}

TEST_F(Cli, BuildCrossedNamesLabeledConditions) {
    const auto file = write("c.json", bundle_text(F5, [&](cli::Bundle &b) { cli::put(b, "c", z4_crossed(F5)); }));
    const auto out = path("out.json");
    const auto r = run({"build", "crossed", file, "--json", "-o", out});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    for (const char *n : {"brz1", "brz2", "brz3", "brz4", "brz5", "assoc"})
        EXPECT_NE(r.out.find(std::string("\"") + n + "\""), std::string::npos) << n;
    const auto built = cli::parse_bundle(read(out), out);
    EXPECT_EQ(cli::get_algebra(built, "c.product").mult, crossed_multiplication(z4_crossed(F5)));
}

TEST_F(Cli, TwistWithIdentityPairReproducesBase) {
    const auto d = z4_crossed(Q);
    const auto file = write("c.json", bundle_text(Q, [&](cli::Bundle &b) { cli::put(b, "c", d); }));
    const auto out = path("twisted.json");
    const auto r = run({"twist", file, "--pair", "identity", "-o", out});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    const auto t = cli::parse_bundle(read(out), out);
    const auto primed = cli::get_crossed(t, "c.primed");
    EXPECT_EQ(primed.R, d.R);
    EXPECT_EQ(primed.sigma, d.sigma);
}

TEST_F(Cli, TwistThenExtractOnCrossBialgebra) {
    const auto base = base_from(z4_crossed(F5), 2).value;
    const Vec one{F5.one(), F5.zero()};
    const auto pair = lazy_pair(base.crossed, {one, {F5.from_int(2), F5.from_int(4)}}, {one, {F5.from_int(4), F5.from_int(2)}});
    const auto file = write("base.json", bundle_text(F5, [&](cli::Bundle &b) { cli::put(b, "base", base); }));
    const auto pfile = write("pair.json", bundle_text(F5, [&](cli::Bundle &b) { cli::put(b, "p", pair); }));
    const auto out = path("twisted.json");
    const auto r = run({"twist", file, "--pair", pfile, "-o", out});
    ASSERT_EQ(r.code, 0) << r.out << r.err;

    // One bundle holding the base, the primed object and the witness.
    auto merged = cli::parse_bundle(read(file), file);
    const auto tw = cli::parse_bundle(read(out), out);
    merged.spaces.insert(tw.spaces.begin(), tw.spaces.end());
    merged.maps.insert(tw.maps.begin(), tw.maps.end());
    merged.structures.insert(tw.structures.begin(), tw.structures.end());
    const auto mfile = write("merged.json", cli::serialize(merged));
    const auto pout = path("extracted.json");
    const auto e = run({"extract", mfile, "--base", "base", "--primed", "base.primed", "-o", pout});
    ASSERT_EQ(e.code, 0) << e.out << e.err;
    const auto got = cli::get_twist_pair(cli::parse_bundle(read(pout), pout), "pair");
    EXPECT_EQ(got.theta, pair.theta);
    EXPECT_EQ(got.gamma, pair.gamma);
}

TEST_F(Cli, MalformedJsonHasLineContext) {
    const auto file = write("broken.json", "{\n \"field\": {\"kind\": \"Q\"},\n \"spaces\": {\n}\n,,\n}\n");
    const auto r = run({"check", file});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(file + ":5"), std::string::npos) << r.err;
}

TEST_F(Cli, UnknownReferenceHasLineContext) {
    auto text = bundle_text(Q, [&](cli::Bundle &b) { cli::put(b, "a", zn(2, Q)); });
    const auto pos = text.find("\"a.mult\"", text.find("\"structures\""));
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 8, "\"missing\"");
    const auto file = write("unknown.json", text);
    const auto r = run({"check", file});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("missing"), std::string::npos) << r.err;
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
    EXPECT_NE(r.err.find(file + ":" + std::to_string(line)), std::string::npos) << r.err;
}

TEST_F(Cli, ShapeMismatchExitsTwo) {
    auto A = zn(2, Q);
    A.unit = Vec(3, Q.zero());
    cli::Bundle b;
    b.field = Q;
    b.spaces["s"] = {2, std::nullopt};
    b.maps["m"] = A.mult;
    b.maps["u"] = LinMap::from_element(Q, Shape{3}, A.unit);
    b.structures["a"] = {"algebra", {{"space", "s"}, {"mult", "m"}, {"unit", "u"}}};
    const auto r = run({"check", write("shape.json", cli::serialize(b))});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"demo", "nope"}).code, 2);
    EXPECT_EQ(run({"export", "nope"}).code, 2);
    EXPECT_EQ(run({"check", path("does_not_exist.json")}).code, 2);
    EXPECT_EQ(run({"demo", "qt", "--field", "F4"}).code, 2);
    EXPECT_EQ(run({"demo", "qt", "--field", "F2"}).code, 2);
}

TEST_F(Cli, DemosAreDeterministic) {
    const auto a = run({"demo", "majid", "--json"});
    const auto b = run({"demo", "majid", "--json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto t1 = run({"demo", "twist", "--field", "F5", "--seed", "9", "--json"});
    const auto t2 = run({"demo", "twist", "--field", "F5", "--seed", "9", "--json"});
    EXPECT_EQ(t1.code, 0) << t1.out;
    EXPECT_EQ(t1.out, t2.out);
    EXPECT_EQ(run({"demo", "majid", "--field", "F5"}).code, 0);
    EXPECT_EQ(run({"demo", "qt"}).code, 0);
}
