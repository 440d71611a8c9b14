#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isofam/cli.hpp"
#include "json.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "isofam");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = isofam::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("enumerate emits the family as JSON") {
    const auto r = invoke({"enumerate", "--d", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 2);
    CHECK(j["count"] == 10);
    REQUIRE(j["subspaces"].size() == 10);
    CHECK(j["subspaces"][0]["basis"].empty());
    for (const auto& s : j["subspaces"]) CHECK(s["basis"].size() == s["alpha"].size());
    CHECK(j["subspaces"][9]["alpha"][0].get<std::string>().front() == '[');
}

TEST_CASE("enumerate text and csv") {
    const auto text = invoke({"enumerate", "--d", "1"});
    CHECK(text.code == 0);
    CHECK(lines(text.out).front() == "d=1 count=3");
    const auto csv = invoke({"enumerate", "--d", "1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(lines(csv.out).size() == 4);
    CHECK(lines(csv.out).front() == "index,dim,basis,alpha");
}

TEST_CASE("phi emits subspace and image pairs") {
    const auto r = invoke({"phi", "--d", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pairs"].size() == 10);
    CHECK(j["tilde_v_size"] == 10);
    CHECK(j["pairs"][0]["phi"] == "0000");
}

TEST_CASE("basis certificate as JSON and CSV") {
    const auto r = invoke({"basis", "--d", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto det = j["determinant"].get<std::string>();
    CHECK((det == "1" || det == "-1"));
    CHECK(j["unimodular"] == true);
    REQUIRE(j["matrix"].size() == 10);
    CHECK(j["matrix"][0].get<std::string>().size() == 10);
    CHECK(j["column_order"].size() == 10);

    const auto csv = invoke({"basis", "--d", "1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(lines(csv.out).front() == "subspace,00,01,10");
    CHECK(lines(csv.out).size() == 4);
}

TEST_CASE("kostka JSON is keyed by partition strings") {
    const auto r = invoke({"kostka", "--m", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kostka"]["3+1"]["2+1+1"] == 2);
    CHECK(j["bijection"]["2+2"] == "2+2");
    CHECK(j["cx_rows"].back()["multiplicities"]["3+1"] == 2);
    CHECK(invoke({"kostka", "--m", "9"}).code == isofam::kExitUsage);
}

TEST_CASE("exceptional prints the table, its verification and the cx cross-check") {
    const auto r = invoke({"exceptional", "--type", "F4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("F4 family of size 11") != std::string::npos);
    CHECK(r.out.find("verification: PASS") != std::string::npos);
    CHECK(r.out.find("cx cross-check (S_4): PASS") != std::string::npos);

    const auto j = nlohmann::json::parse(invoke({"exceptional", "--type", "E8", "--format", "json"}).out);
    CHECK(j["tables"].size() == 5);
    CHECK(j["cx_cross_check"]["ok"] == true);
    CHECK(j["cx_cross_check"]["column_for_partition"]["2+1+1+1"] == "70");
}

TEST_CASE("exceptional CSV with a JSON sidecar") {
    const auto dir = std::filesystem::temp_directory_path() / "isofam_cli_test";
    std::filesystem::create_directories(dir);
    const auto csv = dir / "f4.csv";
    const auto r = invoke({"exceptional", "--type", "F4", "--nc", "11", "--format", "csv", "--out", csv.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto body = lines(slurp(csv));
    REQUIRE(body.size() == 12);
    CHECK(body[0].rfind("\"12_1\",\"9_3\"", 0) == 0);
    CHECK(body[4] == "1,2,1,1,0,0,0,0,0,0,0");
    const auto sidecar = nlohmann::json::parse(slurp(dir / "f4.json"));
    CHECK(sidecar["n_c"] == 11);
    CHECK(sidecar["marks"].size() == 11);
    CHECK(sidecar["row_class"][0] == "cx");
    CHECK(sidecar["verification"]["ok"] == true);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == isofam::kExitUsage);
    CHECK(invoke({"enumerate", "--d", "6"}).code == isofam::kExitUsage);
    CHECK(invoke({"enumerate", "--d", "3", "--d-max", "2"}).code == isofam::kExitUsage);
    CHECK(invoke({"enumerate"}).code == isofam::kExitUsage);
    CHECK(invoke({"enumerate", "--d", "2", "--format", "xml"}).code == isofam::kExitUsage);
    CHECK(invoke({"enumerate", "--d", "2", "--bogus"}).code == isofam::kExitUsage);
    CHECK(invoke({"exceptional", "--type", "B3"}).code == isofam::kExitUsage);
    CHECK(invoke({"exceptional", "--type", "F4", "--nc", "5"}).code == isofam::kExitUsage);
    CHECK(invoke({"exceptional", "--type", "F4", "--format", "csv"}).code == isofam::kExitUsage);
    CHECK(invoke({"phi", "--d", "2", "--format", "csv"}).code == isofam::kExitUsage);
    CHECK_FALSE(invoke({"frobnicate"}).err.empty());
}

TEST_CASE("--help exits cleanly") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("enumerate") != std::string::npos);
}

TEST_CASE("verify reports one line per check and flags the parity perpendicular identity") {
    const auto r = invoke({"verify", "--d-max", "3"});
    // The mutual-perpendicular identity for parity parts only holds for
    // members of dimension d; the smaller members are reported.
    CHECK(r.code == isofam::kExitCheckFailed);
    std::size_t failed = 0;
    for (const auto& line : lines(r.out)) {
        if (line.find(": FAIL") == std::string::npos) continue;
        ++failed;
        CHECK(line.rfind("parity-perp: FAIL", 0) == 0);
    }
    CHECK(failed == 3);  // d = 1, 2, 3
    CHECK(r.out.find("phi-bijection: PASS, d=3, 0 violations") != std::string::npos);
    CHECK(r.out.find("parity-perp-lagrangian: PASS, d=3, 0 violations") != std::string::npos);
    CHECK(r.out.find("table-verification: PASS, E8 n_c=17, 0 violations") != std::string::npos);
}

TEST_CASE("verify output does not depend on the worker count") {
    isofam::RunConfig config;
    config.command = isofam::Command::Verify;
    config.d_max = 3;
    config.format = isofam::OutputFormat::Json;
    std::ostringstream one, many, err;
    config.workers = 1;
    isofam::run(config, one, err);
    config.workers = 4;
    isofam::run(config, many, err);
    CHECK(one.str() == many.str());
    const auto j = nlohmann::json::parse(one.str());
    CHECK(j["passed"] == false);
    CHECK(j["checks"][0]["status"] == "PASS");
}

TEST_CASE("report summarises counts and determinants") {
    const auto r = invoke({"report", "--d-max", "4", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["dimensions"].size() == 5);
    CHECK(j["dimensions"][4]["members"] == 126);
    CHECK(j["dimensions"][4]["tilde_v_size"] == 126);
    CHECK(j["exceptional"].size() == 17);
}
