#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "rpart/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "rpart");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = rpart::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("compute writes an exact csv table") {
    const auto r = invoke({"compute", "--modulus", "2", "--residues", "1", "--limit", "10"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 12);
    CHECK(ls.front() == "n,p_A(n)");
    CHECK(ls.back() == "10,10");
}

TEST_CASE("compute json embeds the config and keeps digits exact") {
    const auto r = invoke({"compute", "--modulus", "1", "--residues", "1", "--limit", "200", "--format", "json",
                           "--algo", "both"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["set"]["m"] == 1);
    CHECK(j["values"][100] == "190569292");
    CHECK(j["values"][200] == "3972999029388");
}

TEST_CASE("gcd condition: compute allowed, asymptote refused") {
    CHECK(invoke({"compute", "--modulus", "4", "--residues", "2", "--limit", "10"}).code == 0);
    const auto r = invoke({"asymptote", "--modulus", "4", "--residues", "2", "--limit", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("gcd") != std::string::npos);
}

TEST_CASE("usage errors name the flag") {
    auto r = invoke({"compute", "--modulus", "4", "--residues", "5", "--limit", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--residues") != std::string::npos);

    r = invoke({"compute", "--modulus", "4", "--residues", "1", "--limit", "10", "--algo", "fft"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--algo") != std::string::npos);

    r = invoke({"lemmas", "--which", "1", "--grid", "10,x"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--grid") != std::string::npos);

    r = invoke({"asymptote", "--modulus", "1", "--residues", "1", "--limit", "100", "--eps", "0.7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--eps") != std::string::npos);

    r = invoke({"compute", "--limit", "10"});
    CHECK(r.code == 2);

    r = invoke({});
    CHECK(r.code == 2);
}

TEST_CASE("set descriptor as json") {
    const auto r = invoke({"compute", "--set-json", R"({"m": 4, "r": [1, 2]})", "--limit", "10"});
    CHECK(r.code == 0);
    const auto direct = invoke({"compute", "--modulus", "4", "--residues", "1,2", "--limit", "10"});
    CHECK(r.out == direct.out);
    CHECK(invoke({"compute", "--set-json", "{bad", "--limit", "3"}).code == 2);
}

TEST_CASE("asymptote csv and json") {
    const auto csv = invoke({"asymptote", "--modulus", "1", "--residues", "1", "--limit", "1000", "--grid-step", "100"});
    CHECK(csv.code == 0);
    const auto ls = lines(csv.out);
    REQUIRE(ls.size() == 11);
    CHECK(ls.front() == "n,log_pA,c0_sqrt_n,ratio");

    const auto js = invoke({"asymptote", "--modulus", "1", "--residues", "1", "--limit", "1000", "--format", "json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    for (const char* key : {"c0", "K_upper", "K_lower", "N_threshold", "config"}) CHECK(j.contains(key));
    CHECK(j["c0"].get<double>() == doctest::Approx(2.5650996603));
}

TEST_CASE("lemmas") {
    const auto one = invoke({"lemmas", "--which", "1", "--grid", "100"});
    CHECK(one.code == 0);
    CHECK(lines(one.out).size() == 10);

    const auto all = invoke({"lemmas", "--which", "all", "--modulus", "4", "--residues", "1,2", "--grid",
                             "1000,5000", "--eps", "0.25", "--format", "json"});
    CHECK(all.code == 0);
    const auto j = nlohmann::json::parse(all.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["reports"].size() > 10);

    // lower induction step is not yet true at n = 100 for eps = 0.25
    const auto early = invoke({"lemmas", "--which", "induction", "--grid", "100", "--eps", "0.25"});
    CHECK(early.code == 1);
}

TEST_CASE("verify runs the property suite") {
    const auto r = invoke({"verify", "--limit", "600"});
    CHECK(r.code == 0);
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("identical bytes on rerun") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"compute", "--modulus", "3", "--residues", "1,2", "--limit", "300"},
             {"asymptote", "--modulus", "2", "--residues", "1", "--limit", "2000", "--format", "json"},
             {"lemmas", "--which", "all", "--grid", "500,2000"}}) {
        CHECK(invoke(args).out == invoke(args).out);
    }
}
