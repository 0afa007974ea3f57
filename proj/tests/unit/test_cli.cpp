#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mapcensus/cli.hpp"

using namespace mapcensus;

namespace {

std::string last_line(const std::string& s) {
  auto t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  auto p = t.rfind('\n');
  return p == std::string::npos ? t : t.substr(p + 1);
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "mapcensus_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_SUITE("cli-shell") {
  TEST_CASE("fixtures run passes") {
    auto r = run_cli({"fixtures", "run"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("face_lengths = {4,8}") != std::string::npos);
    CHECK(r.out.find("all: pass") != std::string::npos);
  }

  TEST_CASE("verify CUBE orientable") {
    auto r = run_cli({"verify", "fixtures:CUBE", "--surface", "O", "--format", "kv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("oracle=46\n") != std::string::npos);
    CHECK(r.out.find("formula=46\n") != std::string::npos);
    CHECK(r.out.find("ratio=1\n") != std::string::npos);
  }

  TEST_CASE("usage errors exit 64") {
    auto r = run_cli({"frobnicate"});
    CHECK(r.exit_code == 64);
    CHECK(last_line(r.err) == "reason=Usage");
    CHECK(run_cli({"census"}).exit_code == 64);
    CHECK(run_cli({"verify", "fixtures:K3", "--surface", "Q"}).exit_code == 64);
  }

  TEST_CASE("help exits 0") {
    auto r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("census") != std::string::npos);
  }

  TEST_CASE("bad group file gives exit 1 and the offending triple") {
    auto d = temp_dir();
    auto g = d / "bad.group";
    std::ofstream(g) << "group 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
    auto s = d / "bad.cayset";
    std::ofstream(s) << "cayset 2\n1 2\n";
    auto r = run_cli({"census", "formula", g.string(), s.string()});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("(") != std::string::npos);
    CHECK(last_line(r.err) == "reason=NotAGroup");
  }

  TEST_CASE("invalid Cayley set") {
    auto d = temp_dir();
    auto g = d / "z6.group";
    CHECK(run_cli({"group", "make", "cyclic", "6"}).exit_code == 0);
    std::ofstream(g) << run_cli({"group", "make", "cyclic", "6"}).out;
    auto s = d / "z6.cayset";
    std::ofstream(s) << "cayset 2\n2 4\n";
    auto r = run_cli({"cayley", "check", g.string(), s.string()});
    CHECK(r.exit_code == 1);
    CHECK(last_line(r.err) == "reason=NotGenerating");
  }

  TEST_CASE("caps exit 2") {
    auto r = run_cli({"census", "oracle", "fixtures:CUBE", "--semantics", "raw"});
    CHECK(r.exit_code == 2);
    CHECK(last_line(r.err) == "reason=CapExceeded");
    CHECK(run_cli({"sym-grr", "12", "--mode", "exact"}).exit_code == 2);
  }

  TEST_CASE("output is deterministic across runs and worker counts") {
    auto a = run_cli({"census", "oracle", "fixtures:CUBE", "--surface", "N", "--workers", "1"});
    auto b = run_cli({"census", "oracle", "fixtures:CUBE", "--surface", "N", "--workers", "4"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("cayley check reports the decomposition") {
    auto r = run_cli({"cayley", "check", "fixtures:CUBE", "--format", "kv"});
    CHECK(r.out.find("aut_order=48") != std::string::npos);
    CHECK(r.out.find("is_grr=no") != std::string::npos);
    CHECK(r.out.find("is_direct_product=no") != std::string::npos);
  }

  TEST_CASE("map check on FIG1 and a dumped oracle orbit") {
    auto r = run_cli({"map", "check", "fixtures:FIG1", "--format", "kv"});
    CHECK(r.out.find("face_lengths=4,8") != std::string::npos);
    auto d = temp_dir() / "orbits";
    std::filesystem::remove_all(d);
    auto o = run_cli({"census", "oracle", "fixtures:K3", "--dump", d.string()});
    CHECK(o.exit_code == 0);
    auto m = run_cli({"map", "check", (d / "orbit_0.map").string(), "--on", "fixtures:K3"});
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("vertices: 3") != std::string::npos);
  }

  TEST_CASE("h-file with a non-commuting element is rejected") {
    auto h = temp_dir() / "h.auts";
    std::ofstream(h) << "automorphisms 2\n0 1 2 3\n0 3 2 1\n";
    auto r = run_cli({"census", "formula", "fixtures:C4", "--h-file", h.string()});
    CHECK(r.exit_code == 1);
    CHECK(last_line(r.err) == "reason=BadParameter");
  }

  TEST_CASE("special subcommands") {
    auto s = run_cli({"sym-grr", "3", "--format", "kv"});
    CHECK(s.out.find("total=16") != std::string::npos);
    auto d = temp_dir();
    std::ofstream(d / "d6.group") << run_cli({"group", "make", "dihedral", "6"}).out;
    std::ofstream(d / "d6.cayset") << "cayset 3\n6 7 8\n";
    auto t = run_cli({"three-inv", (d / "d6.group").string(), (d / "d6.cayset").string(), "--format", "kv"});
    CHECK(t.out.find("hypothesis=violated") != std::string::npos);
    CHECK(t.out.find("O_matches_generic=yes") != std::string::npos);
    std::ofstream(d / "cube.cayset") << "cayset 3\n1 2 4\n";
    auto e = run_cli({"elem2", "3", (d / "cube.cayset").string(), "--surface", "O", "--format", "kv"});
    CHECK(e.out.find("total=46") != std::string::npos);
    CHECK(e.out.find("matches_generic=yes") != std::string::npos);
  }
}
