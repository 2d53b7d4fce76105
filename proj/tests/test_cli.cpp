#include <filesystem>
#include <fstream>
#include <sstream>

#include "binedge/cli.hpp"
#include "binedge/graph_io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace binedge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "binedge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "binedge_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("analyze") {
  TempDir dir;
  const auto c4 = dir.write("c4.graph", format_graph(cycle_graph(4)));
  const auto r = run({"analyze", c4, "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ht"] == 3);
  CHECK(j["mu"] == 4);
  CHECK(j["bounds"]["cd"]["lo"] == 4);
  CHECK(j["flags"]["aci"] == true);
  const auto text = run({"analyze", c4});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("ht") != std::string::npos);
  CHECK(run({"analyze", c4, "--m", "3", "--char", "5"}).code == kExitOk);
}

TEST_CASE("invalid input exit codes") {
  TempDir dir;
  const auto split = dir.write("split.graph", "4\n1 2\n3 4\n");
  const auto bad = dir.write("bad.graph", "4\n1 two\n");
  const auto single = dir.write("single.graph", "1\n");
  CHECK(run({"analyze", split}).code == kExitInvalid);
  CHECK(run({"analyze", single}).code == kExitInvalid);
  CHECK(run({"analyze", bad}).code == kExitParse);
  CHECK(run({"analyze", (std::filesystem::path(dir.str()) / "missing.graph").string()}).code != kExitOk);
  CHECK(run({"analyze", split, "--m", "1"}).code == kExitInvalid);
  CHECK(run({"analyze", split, "--char", "6"}).code == kExitInvalid);
  CHECK(run({"frobnicate"}).code == kExitInvalid);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"verify", "--builtin", "no-such-certificate"}).code == kExitInvalid);
}

TEST_CASE("cutsets and ideal") {
  TempDir dir;
  const auto c4 = dir.write("c4.graph", format_graph(cycle_graph(4)));
  const auto cut = run({"cutsets", c4, "--json"});
  REQUIRE(cut.code == kExitOk);
  const auto j = nlohmann::json::parse(cut.out);
  REQUIRE(j.is_object());
  const auto ideal = run({"ideal", c4, "--order", "lex"});
  CHECK(ideal.code == kExitOk);
  CHECK(ideal.out.find("x[1][1]") != std::string::npos);
  CHECK(run({"ideal", c4, "--order", "nonsense"}).code == kExitInvalid);
}

TEST_CASE("decompose") {
  TempDir dir;
  const auto c4 = dir.write("c4.graph", format_graph(cycle_graph(4)));
  const auto c6 = dir.write("c6.graph", format_graph(cycle_graph(6)));
  CHECK(run({"decompose", c4}).code == kExitOk);
  CHECK(run({"decompose", c6, "--max-gb-terms", "20"}).code == kExitNotAttempted);
}

TEST_CASE("verify") {
  TempDir dir;
  const auto all = run({"verify", "--all", "--json"});
  REQUIRE(all.code == kExitOk);
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j.size() == 11);
  for (const auto& c : j) CHECK(c["status"] == "pass");
  CHECK(run({"verify", "--builtin", "c4-two-primes", "--char", "3"}).code == kExitOk);
  CHECK(run({"verify", "--builtin", "k4-two-pendants", "--kmax", "4"}).code == kExitFailed);
  CHECK(run({"verify", "--builtin", "k4-two-pendants", "--max-gb-terms", "5"}).code == kExitNotAttempted);

  const auto good = dir.write("tp.cert",
                              "ring 2 4 0\n"
                              "target:\nf[1,2]\nf[1,3]\nf[1,4]\nf[3,4]\n"
                              "witness:\nf[1,2]+f[3,4]\nf[1,3]\nf[1,4]\n"
                              "claims:\nf f[1,2] ^ 2\nf f[3,4] ^ 2\n");
  CHECK(run({"verify", good}).code == kExitOk);
  const auto tampered = dir.write("tampered.cert",
                                  "ring 2 4 0\n"
                                  "target:\nf[1,2]\nf[1,3]\nf[1,4]\nf[3,4]\n"
                                  "witness:\nf[1,2]+f[3,4]\nf[1,3]\n"
                                  "claims:\nf f[1,2] ^ 2\nf f[3,4] ^ 2\n");
  const auto t = run({"verify", tampered});
  CHECK(t.code == kExitFailed);
  CHECK(t.out.find("f[1,2]") != std::string::npos);
  CHECK(t.out.find("status: fail") != std::string::npos);
  const auto broken = dir.write("broken.cert", "ring 2 4 0\nwitness:\nf[1,\n");
  CHECK(run({"verify", broken}).code == kExitParse);
}

TEST_CASE("catalog writes files that verify") {
  TempDir dir;
  const auto listing = run({"catalog", "--json"});
  REQUIRE(listing.code == kExitOk);
  CHECK(nlohmann::json::parse(listing.out).size() == 11);
  REQUIRE(run({"catalog", "--write", dir.str()}).code == kExitOk);
  int certs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir.str()))
    if (entry.path().extension() == ".cert") {
      ++certs;
      CAPTURE(entry.path().string());
      CHECK(run({"verify", entry.path().string()}).code == kExitOk);
    }
  CHECK(certs == 11);
}

TEST_CASE("sweep") {
  const auto r = run({"sweep", "complete_bipartite", "--from", "1", "--to", "4"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,parameter,n,q,m,char,ht,mu,pd_lo,pd_hi,cd_lo,cd_hi,ara_lo,ara_hi,ci,aci,cci,stci");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
  const auto d = run({"sweep", "path", "--from", "2", "--to", "4", "--decompose"});
  CHECK(d.code == kExitOk);
  CHECK(d.out.find("decomposition") != std::string::npos);
  CHECK(run({"sweep", "nonsense", "--from", "1", "--to", "2"}).code == kExitInvalid);
  CHECK(run({"sweep", "cycle", "--from", "2", "--to", "4"}).code == kExitInvalid);
  CHECK(run({"sweep", "path", "--from", "5", "--to", "4"}).code == kExitInvalid);
  for (const auto& family : sweep_families()) CHECK(!family.empty());
  CHECK(sweep_graph("k4_plus_paths", 7).vertex_count() == 7);
  CHECK(sweep_graph("complete_bipartite", 3) == complete_bipartite(2, 3));
}

TEST_CASE("output is deterministic") {
  TempDir dir;
  const auto g = dir.write("d.graph", format_graph(diamond()));
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", g, "--json"}, {"cutsets", g}, {"decompose", g},
        {"verify", "--all"}, {"sweep", "star", "--from", "2", "--to", "7", "--m", "3"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
