#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ldimkit/bounds.hpp"
#include "ldimkit/orders_io.hpp"
#include "ldimkit/realizer.hpp"
#include "ldimkit/sat.hpp"
#include "oracles.hpp"

using namespace ldimkit;
using nlohmann::json;

#ifndef LDIMKIT_CLI_PATH
#error "LDIMKIT_CLI_PATH must point at the ldimkit executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

const std::filesystem::path& scratch() {
  static const std::filesystem::path dir = [] {
    auto p = std::filesystem::temp_directory_path() / ("ldimkit_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run cli(const std::string& args) {
  const auto err_path = scratch() / "stderr.txt";
  const std::string command = std::string("'") + LDIMKIT_CLI_PATH + "' " + args + " 2>'" + err_path.string() + "'";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int raw = ::pclose(pipe);
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

}  // namespace

TEST_CASE("tables and verify") {
  const auto b7 = cli("tables b7");
  CHECK(b7.code == 0);
  CHECK(b7.out == format_orders(published_table(PublishedTable::B7)));

  const auto path = write_file("orders7.in", b7.out);
  const auto text = cli("verify --poset boolean:7 --orders '" + path + "'");
  CHECK(text.code == 0);
  CHECK(text.out.rfind("accepted frequency=5 size=7", 0) == 0);

  const auto js = cli("verify --poset boolean:7 --orders '" + path + "' --format json");
  CHECK(js.code == 0);
  const auto parsed = json::parse(js.out);
  CHECK(parsed["accepted"] == true);
  CHECK(parsed["frequency"] == 5);
  CHECK(parsed["size"] == 7);
}

TEST_CASE("verify rejection matches the library report") {
  const auto path = write_file("bad.in", "0 1 2 3\n");
  const auto r = cli("verify --poset boolean:2 --orders '" + path + "' --format json");
  CHECK(r.code == 1);
  const auto parsed = json::parse(r.out);
  auto expected = verify_local_realizer(Poset::boolean(2), parse_orders("0 1 2 3\n")).to_json();
  expected["poset"] = "boolean:2";
  CHECK(parsed == expected);
}

TEST_CASE("error categories map to exit codes") {
  const auto missing = cli("verify --poset boolean:2 --orders /nonexistent/orders.in");
  CHECK(missing.code == 3);
  CHECK(missing.err.rfind("ERROR:io:", 0) == 0);

  const auto bad_spec = cli("verify --poset boolean:x --orders /dev/null");
  CHECK(bad_spec.code == 2);
  CHECK(bad_spec.err.rfind("ERROR:parse:", 0) == 0);

  const auto out_of_range = cli("verify --poset boolean:2 --orders '" + write_file("range.in", "0 9\n") + "'");
  CHECK(out_of_range.code == 2);
  CHECK(out_of_range.err.rfind("ERROR:range:", 0) == 0);

  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("build bn").code == 2);
  CHECK(cli("analyze min-m --n 9").code == 2);

  const auto no_solver = cli("solve --poset chain:2 --k 1 --d 1 --solver /nonexistent/solver");
  CHECK(no_solver.code == 3);
  CHECK(no_solver.err.find("ERROR:environment:") != std::string::npos);
}

TEST_CASE("build writes orders and a summary") {
  const auto out = (scratch() / "b10.in").string();
  const auto r = cli("build bn --n 10 --verify -o '" + out + "' --format json");
  CHECK(r.code == 0);
  const auto summary = json::parse(r.out);
  CHECK(summary["verified"] == true);
  CHECK(summary["frequency"].get<unsigned>() <= 8);
  CHECK(read_orders_file(out) == build_bn_realizer(10));

  const auto s = cli("build singleton --n 6 --d 2 --verify");
  CHECK(s.code == 0);
  CHECK(parse_orders(s.out).size() > 2);
}

TEST_CASE("encode matches the library DIMACS") {
  const auto r = cli("encode --poset boolean:2 --k 2 --d 2");
  CHECK(r.code == 0);
  std::stringstream expected;
  write_dimacs(expected, encode(Poset::boolean(2), 2, 2).formula);
  CHECK(r.out == expected.str());
}

TEST_CASE("solve decodes an existing model file") {
  // chain:2 with one order: x(0,1) = 1, y = 2, z = 3, 4
  const auto model = write_file("model.txt", "s SATISFIABLE\nv 1 -2 3 4 0\n");
  const auto r = cli("solve --poset chain:2 --k 1 --d 1 --model '" + model + "'");
  CHECK(r.code == 0);
  const auto bad = write_file("bad-model.txt", "s SATISFIABLE\nv 1 2 3 4 0\n");
  const auto rb = cli("solve --poset chain:2 --k 1 --d 1 --model '" + bad + "'");
  CHECK(rb.code == 3);
  CHECK(rb.err.rfind("ERROR:decode:", 0) == 0);
}

TEST_CASE("analysis subcommands agree with the library") {
  const auto mm = cli("analyze min-m --n 3 --format json");
  CHECK(mm.code == 0);
  CHECK(json::parse(mm.out)["min_m"] == min_m_certifying(3));

  const auto mb = cli("analyze multiset-bound --n 2 --m 25 --format json");
  CHECK(mb.code == 0);
  const auto parsed = json::parse(mb.out);
  const auto lib = multiset_lower_bound(2, 25);
  CHECK(parsed["bound"].get<double>() == doctest::Approx(lib.bound).epsilon(1e-12));
  CHECK(parsed["certifying"] == true);

  const auto tu = cli("analyze turan --n 10 --size 15 --format json");
  CHECK(tu.code == 0);
  CHECK(json::parse(tu.out)["bound"].get<double>() == doctest::Approx(turan_independence_floor(10, 15).bound));
}

TEST_CASE("solver-backed subcommands") {
  if (oracle::solver_command().empty()) {
    MESSAGE("LDIMKIT_SAT_SOLVER not set; skipping");
    return;
  }
  const auto out = (scratch() / "a3.in").string();
  const auto r = cli("ldim --poset antichain:3 -o '" + out + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("ldim: 2") != std::string::npos);
  CHECK(verify_local_realizer(Poset::antichain(3), read_orders_file(out)).accepted);

  CHECK(cli("solve --poset boolean:2 --k 2 --d 1").code == 1);
  CHECK(cli("ldim --poset antichain:3 --d 1").code == 1);
}

TEST_CASE("cleanup") { std::filesystem::remove_all(scratch()); }
