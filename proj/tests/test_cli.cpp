#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace kpt::cli;
using nlohmann::json;

namespace {

CliConfig config(Command c, unsigned k, std::size_t n, std::string r = "1") {
    CliConfig cfg;
    cfg.command = c;
    cfg.k = k;
    cfg.n = n;
    cfg.r = std::move(r);
    return cfg;
}

json run_json(CliConfig cfg) {
    cfg.output = Format::json;
    const Outcome o = run(cfg);
    return json::parse(o.text);
}

struct Invocation {
    int code;
    std::string out, err;
};

Invocation invoke(std::vector<const char*> args) {
    args.insert(args.begin(), "kpt");
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SeqPlainPrintsTerm) {
    const Outcome o = run(config(Command::seq, 1, 4));
    EXPECT_EQ(o.exit_code, kExitOk);
    EXPECT_EQ(o.text, "13\n");
    EXPECT_EQ(invoke({"seq", "--k", "1", "--n", "4"}).out, "13\n");
}

TEST(Cli, SeqAllTerms) {
    CliConfig cfg = config(Command::seq, 2, 5);
    cfg.all_terms = true;
    EXPECT_EQ(run(cfg).text, "0\n1\n4\n18\n81\n364\n");
}

TEST(Cli, NormsSmallExample) {
    const json doc = run_json(config(Command::norms, 1, 3, "2"));
    EXPECT_EQ(doc["result"]["frobenius_squared_exact"], "42");
    EXPECT_EQ(doc["result"]["l1_exact"], "14");
    EXPECT_NEAR(std::stod(doc["result"]["frobenius"].get<std::string>()), std::sqrt(42.0), 1e-14);
    EXPECT_NEAR(doc["result"]["l1_direct"].get<double>(), 14.0, 1e-12);
}

TEST(Cli, EnvelopeCarriesVersionAndPrecision) {
    const json doc = run_json(config(Command::sums, 1, 5));
    EXPECT_EQ(doc["command"], "sums");
    EXPECT_EQ(doc["precision_bits"], 256);
    EXPECT_EQ(doc["formula_version"].get<std::string>().rfind("1.0.0-g", 0), 0u);
    EXPECT_EQ(doc["result"]["s1"], "54");   // 0+1+2+5+13+33
    EXPECT_TRUE(doc["result"]["direct_agrees"].get<bool>());

    CliConfig scan;
    scan.command = Command::scan;
    EXPECT_EQ(effective_precision(scan), 512u);
    EXPECT_EQ(effective_format(scan), Format::csv);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run(config(Command::eig, 1, 4, "0")).exit_code, kExitZeroR);
    EXPECT_EQ(run(config(Command::eig, 1, 4, "2/x")).exit_code, kExitParseError);
    EXPECT_EQ(run(config(Command::seq, 0, 4)).exit_code, kExitPrecondition);
    EXPECT_EQ(run(config(Command::det, 1, 2, "2")).exit_code, kExitPrecondition);

    CliConfig low = config(Command::seq, 1, 4);
    low.precision_bits = 32;
    EXPECT_EQ(run(low).exit_code, kExitPrecondition);
    low.precision_bits = 8192;
    EXPECT_EQ(run(low).exit_code, kExitPrecondition);

    CliConfig stiff = config(Command::norms, 1, 6, "1");
    stiff.tol = -1.0;
    EXPECT_EQ(run(stiff).exit_code, kExitPrecondition);
}

TEST(Cli, ErrorObjectInJsonMode) {
    CliConfig cfg = config(Command::det, 1, 4, "0");
    cfg.output = Format::json;
    const Outcome o = run(cfg);
    ASSERT_EQ(o.exit_code, kExitZeroR);
    const json doc = json::parse(o.text);
    EXPECT_EQ(doc["error"]["kind"], "ZeroR");
    EXPECT_EQ(doc["error"]["exit_code"], kExitZeroR);
    EXPECT_FALSE(doc.contains("result"));
    EXPECT_FALSE(o.diagnostic.empty());
}

TEST(Cli, PlainErrorGoesToStderrOnly) {
    const Invocation inv = invoke({"eig", "--k", "1", "--n", "4", "--r", "abc"});
    EXPECT_EQ(inv.code, kExitParseError);
    EXPECT_TRUE(inv.out.empty());
    EXPECT_NE(inv.err.find("ParseError"), std::string::npos);
}

TEST(Cli, NegativeAndComplexScalarsOnCommandLine) {
    Invocation inv = invoke({"det", "--k", "1", "--n", "3", "--r", "-3/2", "--output", "json"});
    ASSERT_EQ(inv.code, 0) << inv.err;
    EXPECT_EQ(json::parse(inv.out)["result"]["det_exact"], "33/2");

    inv = invoke({"eig", "--k", "1", "--n", "3", "--r=-i", "--output", "json"});
    ASSERT_EQ(inv.code, 0) << inv.err;
    EXPECT_EQ(json::parse(inv.out)["params"]["r"], "-i");
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(invoke({"seq", "--k", "1"}).code, kExitPrecondition);
    EXPECT_EQ(invoke({"nosuch"}).code, kExitPrecondition);
    EXPECT_EQ(invoke({"seq", "--k", "1", "--n", "3", "--output", "xml"}).code, kExitPrecondition);
    EXPECT_EQ(invoke({"scan", "--sign", "x"}).code, kExitPrecondition);
}

TEST(Cli, PrecisionFlagAndEnvironment) {
    Invocation inv = invoke({"seq", "--k", "1", "--n", "3", "--precision", "128", "--output", "json"});
    EXPECT_EQ(json::parse(inv.out)["precision_bits"], 128);

    ::setenv("KPT_PRECISION_BITS", "192", 1);
    inv = invoke({"seq", "--k", "1", "--n", "3", "--output", "json"});
    EXPECT_EQ(json::parse(inv.out)["precision_bits"], 192);
    inv = invoke({"seq", "--k", "1", "--n", "3", "--precision", "320", "--output", "json"});
    EXPECT_EQ(json::parse(inv.out)["precision_bits"], 320);
    ::setenv("KPT_PRECISION_BITS", "lots", 1);
    EXPECT_EQ(invoke({"seq", "--k", "1", "--n", "3"}).code, kExitPrecondition);
    ::unsetenv("KPT_PRECISION_BITS");
}

TEST(Cli, Table1Csv) {
    CliConfig cfg;
    cfg.command = Command::table1;
    const Outcome o = run(cfg);
    ASSERT_EQ(o.exit_code, 0) << o.diagnostic;
    EXPECT_EQ(std::count(o.text.begin(), o.text.end(), '\n'), 13);
    EXPECT_NE(o.text.find("8,4,863.8442,373.88,1326.3440,1326.34,1408.0000,1498.00,lower_mismatch;upper_erratum"),
              std::string::npos);
    EXPECT_NE(o.text.find("5,1,14.1067,14.11,21.0000,21.00,21.0000,21.00,\n"), std::string::npos);
}

TEST(Cli, ScanReportsCells) {
    CliConfig cfg;
    cfg.command = Command::scan;
    cfg.k_min = cfg.k_max = 5;
    cfg.n_min = 27;
    cfg.n_max = 29;
    cfg.sign = "both";
    const json doc = run_json(cfg);
    EXPECT_EQ(doc["result"]["summary"]["cells"], 6);
    EXPECT_EQ(doc["result"]["cells"][1]["flags"], "reported_counterexample;disagrees_with_report");
    EXPECT_EQ(doc["result"]["cells"][3]["sign"], "-");
}

TEST(Cli, InvertUsesExactCriterion) {
    const json doc = run_json(config(Command::invert, 1, 4, "-1"));
    EXPECT_EQ(doc["result"]["gcd"]["status"], "guaranteed_invertible");
    EXPECT_EQ(doc["result"]["verdict"], "invertible");
    const json cplx = run_json(config(Command::invert, 2, 5, "2+i"));
    EXPECT_TRUE(cplx["result"]["gcd"].is_null());
    EXPECT_TRUE(cplx["result"]["sufficient_condition"].is_null());
}

TEST(Cli, OutPathWritesFile) {
    const std::string path = ::testing::TempDir() + "kpt_cli_out.csv";
    const Invocation inv = invoke({"seq", "--k", "1", "--n", "10", "--out", path.c_str()});
    EXPECT_EQ(inv.code, 0);
    EXPECT_TRUE(inv.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "3535");
}

TEST(Cli, MatrixSerialization) {
    CliConfig cfg = config(Command::norms, 1, 3, "-1/2");
    cfg.include_matrix = true;
    const json m = run_json(cfg)["result"]["matrix"];
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0], json({"0", "1", "2"}));
    EXPECT_EQ(m[1], json({"-1", "0", "1"}));
    EXPECT_EQ(m[2], json({"-1/2", "-1", "0"}));
}
