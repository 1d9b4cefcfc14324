#include <gtest/gtest.h>

#include <sys/wait.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + POINTKERNEL_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

/// Header comment, column row, then data rows as cells.
struct Table {
    std::string comment;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const
    {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name)
                return i;
        ADD_FAILURE() << "missing column " << name;
        return 0;
    }
    double number(std::size_t row, const std::string& name) const { return std::stod(rows[row][col(name)]); }
};

Table parse_csv(const std::string& text)
{
    Table t;
    auto lines = split(text, '\n');
    if (lines.size() < 2)
        return t;
    t.comment = lines[0];
    t.columns = split(lines[1], ',');
    for (std::size_t i = 2; i < lines.size(); ++i)
        if (!lines[i].empty())
            t.rows.push_back(split(lines[i], ','));
    return t;
}

} // namespace

TEST(CliConvert, DeltaToConnected)
{
    const auto r = run("convert --c1 1 --to connected");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["connected"]["theta"].get<double>(), 0.0);
    const auto a = doc["connected"]["a"];
    EXPECT_DOUBLE_EQ(a[0][0].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(a[0][1].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(a[1][0].get<double>(), 0.0);
    EXPECT_DOUBLE_EQ(a[1][1].get<double>(), 1.0);
    EXPECT_EQ(doc["determinant"].get<double>(), 0.0);
    EXPECT_EQ(doc["version"], "0.1.0");
}

TEST(CliConvert, NeumannRightDirichletLeft)
{
    const auto r = run("convert --c2re 2 --to separated");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["separated"]["plus"]["kind"], "neumann");
    EXPECT_EQ(doc["separated"]["minus"]["kind"], "dirichlet");
    EXPECT_EQ(doc["separated"]["case"], 3);
    EXPECT_EQ(doc["parity"]["c2"]["re"].get<double>(), -2.0);
}

TEST(CliConvert, SeparatedCannotBeConnected)
{
    const auto r = run("convert --c2re 2 --to connected");
    EXPECT_EQ(r.status, 2);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["error"]["kind"], "NotConnected");
}

TEST(CliConvert, NonRepresentableInputs)
{
    const auto conn = run("convert --from-connected --theta 0 --a11 -1 --a12 0 --a21 0 --a22 -1");
    EXPECT_EQ(conn.status, 2);
    EXPECT_EQ(nlohmann::json::parse(conn.out)["error"]["kind"], "NotRepresentable");

    const auto sep = run("convert --from-separated --plus-p 1 --plus-q 1 --minus-p 1 --minus-q 1");
    EXPECT_EQ(sep.status, 2);
    EXPECT_EQ(nlohmann::json::parse(sep.out)["error"]["kind"], "NotRepresentable");
}

TEST(CliConvert, FromSeparated)
{
    // Dirichlet left (p = 0), Neumann right (q = 0).
    const auto r = run("convert --from-separated --plus-p 1 --plus-q 0 --minus-p 0 --minus-q 1");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["interaction"]["c2"]["re"].get<double>(), 2.0);
    EXPECT_EQ(doc["interaction"]["c1"].get<double>(), 0.0);
}

TEST(CliConvert, UsageErrors)
{
    EXPECT_EQ(run("convert --c1 1").status, 1);
    EXPECT_EQ(run("convert --c1 1 --to connected --from-separated").status, 1);
    EXPECT_EQ(run("convert --to sideways").status, 1);
    EXPECT_EQ(run("convert --c1 abc --to connected").status, 1);
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("frobnicate").status, 1);
}

TEST(CliScatter, DeltaHalfTransmission)
{
    const auto r = run("scatter --c1 2 --k-min 1 --k-max 1 --k-steps 1");
    ASSERT_EQ(r.status, 0);
    const auto t = parse_csv(r.out);
    EXPECT_EQ(t.comment, "# pointkernel v0.1.0, pointkernel scatter --c1 2 --k-min 1 --k-max 1 --k-steps 1");
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_NEAR(t.number(0, "transmission"), 0.5, 1e-12);
}

TEST(CliScatter, TransparentImaginaryCoupling)
{
    const auto t = parse_csv(run("scatter --c2im 5 --k-min 0.1 --k-max 10 --k-steps 25").out);
    ASSERT_EQ(t.rows.size(), 25u);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        EXPECT_NEAR(t.number(i, "transmission"), 1.0, 1e-12);
}

TEST(CliScatter, SuperSingularConservesProbability)
{
    const auto t = parse_csv(run("scatter --delta-n 2 --coupling 0.3 --k-min 0.1 --k-max 20 --k-steps 50").out);
    ASSERT_EQ(t.rows.size(), 50u);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        EXPECT_LE(t.number(i, "unitarity_defect"), 1e-12);
    // Energy-dependent couplings: c1 = -2 c k^2.
    const double k = t.number(49, "k");
    EXPECT_NEAR(t.number(49, "c1"), -0.6 * k * k, 1e-12);
}

TEST(CliScatter, NumbersRoundTrip)
{
    const auto t = parse_csv(run("scatter --c1 0.37 --c2re -1.1 --c2im 0.3 --c3 2.9 --k-min 0.3 --k-max 7 --k-steps 13").out);
    ASSERT_EQ(t.rows.size(), 13u);
    for (const auto& row : t.rows)
        for (const auto& cell : row) {
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            ASSERT_EQ(res.ec, std::errc{});
            char buf[32];
            const auto out = std::to_chars(buf, buf + sizeof buf, v);
            double w = 0.0;
            std::from_chars(buf, out.ptr, w);
            EXPECT_EQ(v, w);
            EXPECT_EQ(std::string(buf, out.ptr), cell);
        }
}

TEST(CliScatter, InvalidRanges)
{
    EXPECT_EQ(run("scatter --k-min 0").status, 1);
    EXPECT_EQ(run("scatter --k-min 2 --k-max 1").status, 1);
    EXPECT_EQ(run("scatter --k-steps 0").status, 1);
    EXPECT_EQ(run("scatter --coupling 1").status, 1);
}

TEST(CliPropagator, CrossSideVanishesAtTwo)
{
    const auto r = run("propagator --coupling 2 --imaginary-time --x -1.5,-0.5,0.5,1.5 --y -2,-1,1,2");
    ASSERT_EQ(r.status, 0);
    const auto t = parse_csv(r.out);
    ASSERT_EQ(t.rows.size(), 16u);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double x = t.number(i, "x"), y = t.number(i, "y");
        if ((x > 0) != (y > 0)) {
            EXPECT_EQ(t.number(i, "re"), 0.0);
            EXPECT_EQ(t.number(i, "im"), 0.0);
        } else {
            EXPECT_GT(t.number(i, "re"), 0.0);
        }
    }
}

TEST(CliPropagator, RejectsOrigin)
{
    EXPECT_EQ(run("propagator --coupling 1 --x 0 --y 1").status, 1);
    EXPECT_EQ(run("propagator --coupling 1 --x 1 --y 0,1").status, 1);
    EXPECT_EQ(run("propagator --coupling 1 --x 1 --y 1 --t 0 --s 1").status, 1);
}

TEST(CliBorn, TermTable)
{
    const auto r = run("born --coupling 1 --terms 5");
    ASSERT_EQ(r.status, 0);
    const auto t = parse_csv(r.out);
    ASSERT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.number(1, "mirror_pp"), -1.0);
    EXPECT_EQ(t.number(1, "mirror_mm"), 1.0);
    EXPECT_EQ(t.number(2, "direct_pm"), -0.5);
    EXPECT_EQ(t.number(2, "direct_mp"), -0.5);
    EXPECT_EQ(t.number(3, "mirror_pp"), 0.25);
    EXPECT_EQ(t.number(4, "direct_pm"), 0.125);
    EXPECT_EQ(t.number(5, "mirror_pp"), -0.0625);
    EXPECT_EQ(t.number(5, "mirror_mm"), 0.0625);
    EXPECT_EQ(t.rows[5][t.col("converges")], "true");
    EXPECT_NEAR(t.number(5, "partial_error"), 0.025, 1e-12);
    EXPECT_EQ(run("born --coupling 2 --terms 4").out.find("false") != std::string::npos, true);
    EXPECT_EQ(run("born --coupling 1 --terms -1").status, 1);
}

TEST(CliVerify, AllSuitesPass)
{
    const auto r = run("verify --suite all");
    EXPECT_EQ(r.status, 0) << r.out;
    const auto t = parse_csv(r.out);
    EXPECT_GE(t.rows.size(), 15u);
    for (const auto& row : t.rows)
        EXPECT_EQ(row.back(), "true");
}

TEST(CliVerify, FailureExitsThree)
{
    const auto r = run("verify --suite bc --tol 1e-30");
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("false"), std::string::npos);
}

TEST(CliVerify, EnvironmentToleranceAndFlagPrecedence)
{
    EXPECT_EQ(run("verify --suite scatter-oracle", "POINTKERNEL_TOL=1e-30").status, 3);
    EXPECT_EQ(run("verify --suite scatter-oracle --tol 1e-6", "POINTKERNEL_TOL=1e-30").status, 0);
    EXPECT_EQ(run("verify --suite scatter-oracle", "POINTKERNEL_TOL=bogus").status, 1);
    EXPECT_EQ(run("verify --suite nonsense").status, 1);
}

TEST(CliVerify, DeterministicGivenSeed)
{
    const auto a = run("verify --suite scatter-oracle --seed 7");
    const auto b = run("verify --suite scatter-oracle --seed 7");
    EXPECT_EQ(a.out.substr(a.out.find('\n')), b.out.substr(b.out.find('\n')));
}

TEST(CliSuperSingular, CoefficientsAndMatrix)
{
    const auto r = run("supersingular --n 3 --coupling 0.5 --k 2");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(doc["interaction"]["c2"]["re"].get<double>(), -4.0 * 0.5 * 4.0);
    EXPECT_EQ(doc["interaction"]["c2"]["im"].get<double>(), 0.0);
    EXPECT_LE(doc["scattering"]["unitarity_defect"].get<double>(), 1e-12);
    EXPECT_TRUE(doc["griffiths"]["satisfied"].get<bool>());
    EXPECT_EQ(run("supersingular --n 0 --coupling 1 --k 1").status, 1);
    EXPECT_EQ(run("supersingular --n 2 --coupling 1 --k -1").status, 1);
}

TEST(CliOutput, WritesFile)
{
    const std::string path = testing::TempDir() + "pointkernel_cli_out.csv";
    const auto r = run("scatter --c1 1 --out " + path);
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("# pointkernel v0.1.0, ", 0), 0u);
    EXPECT_EQ(run("scatter --c1 1 --out /nonexistent/dir/x.csv").status, 1);
}
