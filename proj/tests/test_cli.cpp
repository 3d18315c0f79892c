#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using wzcert::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kSummand = "k*(n+k)!^2/(k!^4*(n-k)!^2)";
const char* kPotential = "1/(2*k)+H(n+k)+H(n-k)-2*H(k)";

}  // namespace

TEST(Cli, VerifyIdentity)
{
    auto r = call({"verify-identity", "--n-max", "50"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n = 1..50: 50 zero, 0 nonzero\n");
    auto j = call({"verify-identity", "--n-max", "12", "--format", "json", "--threads", "3"});
    EXPECT_EQ(j.code, 0);
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_TRUE(doc["all_zero"].get<bool>());
    EXPECT_EQ(doc["values"].size(), 12u);
    EXPECT_EQ(j.out, call({"verify-identity", "--n-max", "12", "--format", "json"}).out);
}

TEST(Cli, CheckCongruence)
{
    auto r = call({"check-congruence", "--max-prime", "100", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_TRUE(doc.is_array());
    EXPECT_EQ(doc.size(), 24u);
    for (const auto& row : doc)
        EXPECT_TRUE(row["holds"].get<bool>());
    EXPECT_EQ(doc[0]["p"], 3);
    EXPECT_EQ(r.out, call({"check-congruence", "--max-prime", "100", "--format", "json",
                           "--threads", "4"}).out);
}

TEST(Cli, FindRecurrenceWithPotential)
{
    auto r = call({"find-recurrence", "--summand", kSummand, "--potential", kPotential,
                   "--max-order", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["verified"].get<bool>());
    EXPECT_LE(doc["order"].get<int>(), 3);
    EXPECT_EQ(doc["certificate"]["kind"], "potential");
}

TEST(Cli, FindRecurrencePureAndDeterministic)
{
    std::vector<std::string> args{"find-recurrence", "--summand", "(n+k)!^2/(k!^4*(n-k)!^2)",
                                  "--max-order", "2"};
    auto a = call(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(nlohmann::json::parse(a.out)["order"], 2);
    EXPECT_EQ(a.out, call(args).out);
}

TEST(Cli, FindRecurrenceNotFound)
{
    auto r = call({"find-recurrence", "--summand", kSummand, "--potential", kPotential,
                   "--max-order", "1"});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ProveIdentity)
{
    auto r = call({"prove-identity"});
    EXPECT_EQ(r.code, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["conclusion"].get<bool>());
    EXPECT_TRUE(doc["certificate_verified"].get<bool>());
    EXPECT_GE(doc["base_cases"].size(), 3u);
    EXPECT_EQ(doc["base_cases"][0], nlohmann::json::array({1, "0"}));
    EXPECT_EQ(call({"prove-identity", "--max-order", "2"}).code, 3);
}

TEST(Cli, Gosper)
{
    auto yes = call({"gosper", "--summand", "k*k!"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "summable: R = 1/k\n");
    auto also = call({"gosper", "--summand", "(k-1)!/(k+1)!", "--format", "json"});
    EXPECT_EQ(also.code, 0);
    EXPECT_EQ(nlohmann::json::parse(also.out)["r"], "-(k+1)");
    auto no = call({"gosper", "--summand", "(k-1)!/k!"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "not summable\n");
}

TEST(Cli, ExpandEtaAndApery)
{
    auto e = call({"expand-eta", "--trunc", "7"});
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.out, "q - 4*q^3 - 2*q^5 + 24*q^7 + O(q^8)\n");
    auto ej = nlohmann::json::parse(call({"expand-eta", "--trunc", "7", "--format", "json"}).out);
    EXPECT_EQ(ej["coeffs"], nlohmann::json::array({"0", "1", "0", "-4", "0", "-2", "0", "24"}));
    auto a = call({"apery", "--n-max", "3", "--format", "json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(nlohmann::json::parse(a.out), nlohmann::json::array({"1", "5", "73", "1445"}));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"no-such-command"}).code, 2);
    EXPECT_EQ(call({"verify-identity", "--n-max", "0"}).code, 2);
    EXPECT_EQ(call({"verify-identity", "--n-max", "ten"}).code, 2);
    EXPECT_EQ(call({"verify-identity", "--format", "xml"}).code, 2);
    EXPECT_EQ(call({"check-congruence", "--max-prime", "2"}).code, 2);
    EXPECT_EQ(call({"check-congruence", "--threads", "0"}).code, 2);
    EXPECT_EQ(call({"find-recurrence"}).code, 2);
    EXPECT_EQ(call({"find-recurrence", "--summand", "k!!"}).code, 2);
    EXPECT_EQ(call({"prove-identity", "--max-order", "0"}).code, 2);
    EXPECT_EQ(call({"gosper", "--summand", "1/k"}).code, 2);
    auto r = call({"apery", "--bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--n-max"), std::string::npos);
}
