#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "doctest.h"
#include "json.hpp"
#include "support/fixtures.hpp"
#include "support/run.hpp"

using nlohmann::json;

namespace {

std::string data(const std::string& name) { return "'" + fixtures::path(name) + "'"; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("concepts") {
  auto r = run::cli("concepts --variant formal --format text " + data("table1.cxt"));
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);
  CHECK(r.out.rfind("C0 = ({1,2,3,4,5,6,7}, {})\n", 0) == 0);

  r = run::cli("concepts --variant formal --format dot " + data("table1.cxt"));
  CHECK(r.code == 0);
  CHECK(count(r.out, "[label=") == 11);
  CHECK(r.out.find("c0 [label=\"{1,2,3,4,5,6,7} | {}\"]") != std::string::npos);

  r = run::cli("concepts --variant three-way --format json " + data("table1.cxt"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).is_array());

  r = run::cli("concepts --variant cn --format json " + data("table5.json"));
  CHECK(r.code == 0);
  r = run::cli("concepts --variant cn " + data("table1.cxt"));
  CHECK(r.code == 2);
}

TEST_CASE("define") {
  auto r = run::cli("define --mode wedge --granule 2,7 --format json " + data("table1.cxt"));
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["status"] == "definable");
  CHECK(doc["formula"] == "a1 ∧ a2");
  CHECK(doc["description"]["conj"] == json::array({"a1", "a2"}));

  r = run::cli("define --mode vee --granule 1,4,5,6,7 --format text " + data("table1.cxt"));
  CHECK(r.code == 0);
  CHECK(r.out == "definable: a3 ∨ a4 ∨ a5\n");

  r = run::cli("define --mode cn --granule Grace,Jenny --compound " + data("scores_b.cxt") + " --format text " +
               data("scores_a.cxt"));
  CHECK(r.code == 0);
  CHECK(r.out == "definable: c1 ∧ c2 ∧ c3 ∧ c4 ∧ (ec1 ∨ ec2)\n");

  r = run::cli("define --mode wedge --granule 1,2 --format json " + data("table1.cxt"));
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["witness"] == json::array({1, 2, 7}));

  r = run::cli("define --mode wedge --granule 1,2,3,4,5,6,7 --format json " + data("table1.cxt"));
  CHECK(r.code == 4);
  CHECK(json::parse(r.out)["reason"] == "empty_intent");

  r = run::cli("define --mode wedge --granule 6 --minimal --format json " + data("table1.cxt"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["minimal"] == json::array({"a3 ∧ a4", "a3 ∧ a5"}));

  CHECK(run::cli("define --mode wedge --granule nobody " + data("table1.cxt")).code == 2);
  CHECK(run::cli("define --mode wedge --granule 9 " + data("table1.cxt")).code == 2);
  CHECK(run::cli("define --mode sideways --granule 1 " + data("table1.cxt")).code == 2);
  CHECK(run::cli("define --mode wedge --granule 1 /nonexistent/file.cxt").code == 2);
}

TEST_CASE("approx") {
  auto r = run::cli("approx --mode wedge --direction lower --granule 4,5,6 --format json " + data("li20.cxt"));
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["direction"] == "lower");
  CHECK(doc["mode"] == "wedge");
  CHECK(doc["exact"] == false);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["granule"] == json::array({4, 5}));
  CHECK(doc["results"][0]["description"] == "a2 ∧ a3");
  CHECK(doc["results"][1]["granule"] == json::array({4, 6}));
  CHECK(doc["results"][1]["description"] == "a2 ∧ a5");

  r = run::cli("approx --mode wedge --direction upper --granule 4,5,6 --format text " + data("li20.cxt"));
  CHECK(r.code == 0);
  CHECK(r.out == "upper wedge\n  {2,4,5,6} = a2\n");

  r = run::cli("approx --mode wedge --direction upper --granule 2,7 --all --format json " + data("table1.cxt"));
  CHECK(json::parse(r.out)["exact"] == true);

  CHECK(run::cli("approx --mode cn --direction lower --granule 2 " + data("table5.json")).code == 2);
  r = run::cli("approx --mode vee --direction upper --granule 1 --format json - < /dev/null");
  CHECK(r.code == 2);
}

TEST_CASE("convert reproduces the derived tables") {
  auto dir = std::filesystem::temp_directory_path() / "granule_cli_test";
  std::filesystem::create_directories(dir);
  auto out = (dir / "complement.cxt").string();
  CHECK(run::cli("convert --op complement --output '" + out + "' " + data("table1.cxt")).code == 0);
  CHECK(fixtures::slurp("table4.cxt") == [&] {
    std::ifstream in(out, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }());

  auto r = run::cli("convert --op appose " + data("table1.cxt"));
  CHECK(r.code == 0);
  CHECK(r.out == fixtures::slurp("table3.cxt"));

  r = run::cli("convert --op appose --format json " + data("table1.cxt"));
  CHECK(json::parse(r.out)["flavor"] == "three_way");

  r = run::cli("convert --op complement - < " + data("table4.cxt"));
  CHECK(r.code == 0);
  auto twice = granule::parse_context(r.out);
  CHECK(twice.incidence() == fixtures::context("table1.cxt").incidence());
  std::filesystem::remove_all(dir);
}

TEST_CASE("validate and errors") {
  CHECK(run::cli("validate " + data("table1.cxt")).out == "formal context: 7 objects, 5 attributes\n");
  CHECK(run::cli("validate " + data("table5.json")).code == 0);
  CHECK(run::cli("validate - < /dev/null").code == 2);
  CHECK(run::cli("").code == 2);
  CHECK(run::cli("frobnicate").code == 2);
}

TEST_CASE("size guard exit code") {
  std::string wide = "B\n\n1\n31\n\nx\n";
  for (int k = 0; k < 31; ++k) wide += "m" + std::to_string(k) + "\n";
  wide += std::string(31, 'X') + "\n";
  auto path = (std::filesystem::temp_directory_path() / "granule_wide.cxt").string();
  std::ofstream(path) << wide;
  CHECK(run::cli("concepts '" + path + "'").code == 3);
  CHECK(run::cli("concepts --force '" + path + "'").code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("outputs are deterministic") {
  auto args = "concepts --variant object-oriented --format json " + data("table1.cxt");
  CHECK(run::cli(args).out == run::cli(args).out);
}
