#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "catgal/io.hpp"

using namespace catgal;

namespace {

const std::string kCli = CATGAL_CLI;
const std::string kCorpus = std::string(CATGAL_TEST_DATA) + "/corpus/";

int run(const std::string& args) {
  const int status = std::system((kCli + " --quiet " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string corpus(const std::string& name) { return "'" + kCorpus + name + ".json'"; }

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "catgal_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("positive answers exit 0") {
    CHECK(run("validate " + corpus("lattice")) == 0);
    CHECK(run("validate " + corpus("adj_c2_orbits")) == 0);
    CHECK(run("slice " + corpus("lattice") + " --at l") == 0);
    CHECK(run("adjoint-check " + corpus("adj_bottom_inclusion")) == 0);
    CHECK(run("slice-adj " + corpus("adj_bottom_inclusion") + " --codomain-at b") == 0);
    CHECK(run("descent " + corpus("iso_pair") + " --sigma f") == 0);
    CHECK(run("lemma " + corpus("adj_c2_orbits") + " --at 1") == 0);
    CHECK(run("galois " + corpus("adj_c2_orbits") + " --sigma '1->1[0]'") == 0);
    CHECK(run("trivial-galois " + corpus("adj_id_chain3") + " --object c") == 0);
    CHECK(run("equiv " + corpus("delta1") + " " + corpus("iso_pair")) == 0);
  }

  TEST_CASE("negative answers exit 1") {
    CHECK(run("descent " + corpus("delta2") + " --sigma 'a->b'") == 1);
    CHECK(run("lemma " + corpus("adj_chain_counit_failure") + " --at b") == 1);
    CHECK(run("galois " + corpus("adj_c2_orbits") + " --sigma 'C2->1[0,0]'") == 1);
    CHECK(run("trivial-galois " + corpus("adj_c2_orbits") + " --object 1") == 1);
    CHECK(run("equiv " + corpus("delta1") + " " + corpus("delta2")) == 1);
  }

  TEST_CASE("malformed input and usage exit 2") {
    const auto dir = scratch();
    const auto bad = (dir / "bad.json").string();
    write_file_atomic(bad, "{ \"kind\": ");
    CHECK(run("validate '" + bad + "'") == 2);
    CHECK(run("validate '" + (dir / "absent.json").string() + "'") == 2);
    CHECK(run("adjoint-check " + corpus("lattice")) == 2);
    CHECK(run("slice " + corpus("lattice") + " --at nowhere") == 2);
    CHECK(run("slice-adj " + corpus("adj_bottom_inclusion")) == 2);
    CHECK(run("--format yaml validate " + corpus("lattice")) == 2);
    CHECK(run("frobnicate") == 2);
  }

  TEST_CASE("documents that break the laws are a negative verdict") {
    Json j = Json::parse(read_file(kCorpus + "iso_pair.json"));
    j["payload"]["composition"].erase(0);
    const auto path = (scratch() / "broken.json").string();
    write_file_atomic(path, j.dump(2));
    CHECK(run("validate '" + path + "'") == 1);
  }

  TEST_CASE("generated fragments feed the other commands") {
    const auto path = (scratch() / "c2.json").string();
    CHECK(run("gen gset --group C2 --seeds 0,1,T2,G,2G --bound 8 --closure none --out '" + path + "'") == 0);
    CHECK(read_file(path) == read_file(kCorpus + "adj_c2_orbits.json"));
    CHECK(run("galois '" + path + "' --sigma '1->1[0]'") == 0);
    CHECK(run("gen gset --group C2 --seeds 1,G --bound 8") == 2);
    CHECK(run("gen gset --group C7 --seeds 1 --bound 8") == 2);
  }

  TEST_CASE("reports written with --out parse back") {
    const auto path = (scratch() / "report.json").string();
    CHECK(run("galois " + corpus("adj_c2_orbits") + " --sigma '1->1[0]' --out '" + path + "'") == 0);
    const Document d = parse(read_file(path));
    CHECK(d.kind == DocKind::Report);
    CHECK(std::get<Json>(d.value)["failure"].is_null());
  }

  TEST_CASE("a tiny budget is reported, not answered") {
    CHECK(run("--budget 5 equiv " + corpus("c2_gsets") + " " + corpus("c2_gsets")) == 2);
  }
}
