#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "halin/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

class Sandbox {
 public:
  Sandbox() {
    dir_ = fs::temp_directory_path() / ("halin_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Run run(const std::string& args) const {
    const std::string cmd = std::string("\"") + HALIN_CLI_PATH + "\" " + args + " >\"" +
                            path("stdout") + "\" 2>\"" + path("stderr") + "\"";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, read("stdout"), read("stderr")};
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("generate") {
  Sandbox s;
  Run w5 = s.run("generate --family wheel --leaves 5");
  CHECK(w5.code == 0);
  CHECK(halin::parse_graph(w5.out).vertex_count() == 6);

  Run a = s.run("generate --leaves 100 --seed 42");
  Run b = s.run("generate --leaves 100 --seed 42");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  CHECK(s.run("generate --max-degree 2").code == 2);
  CHECK(s.run("generate --family petersen").code == 2);
  CHECK(s.run("generate --bogus").code == 2);
  CHECK(s.run("").code == 2);
  CHECK(s.run("--help").code == 0);
}

TEST_CASE("color") {
  Sandbox s;
  REQUIRE(s.run("generate --family wheel --leaves 5 -o " + s.path("w5.txt")).code == 0);
  Run c = s.run("color -i " + s.path("w5.txt"));
  CHECK(c.code == 0);
  CHECK(c.out == "COLORING 1\n0 1\n1 1p\n2 2a\n3 1p\n4 2b\n5 2c\n");

  Run traced = s.run("color --trace -i " + s.path("w5.txt") + " -o " + s.path("w5.col"));
  CHECK(traced.code == 0);
  CHECK(traced.err.find("recoloring all_same=true offset=0 case=2") != std::string::npos);
  CHECK(s.read("w5.col") == c.out);

  REQUIRE(s.run("generate --family wheel --leaves 6 -o " + s.path("w6.txt")).code == 0);
  Run w6 = s.run("color -i " + s.path("w6.txt"));
  CHECK(w6.code == 1);
  CHECK(w6.err.find("Δ = 6") != std::string::npos);

  s.write("bad.txt", "HALIN 7\nVERTICES 4\n");
  CHECK(s.run("color -i " + s.path("bad.txt")).code == 2);
  CHECK(s.run("color -i " + s.path("missing.txt")).code == 2);
}

TEST_CASE("verify") {
  Sandbox s;
  REQUIRE(s.run("generate --family wheel --leaves 5 -o " + s.path("w5.txt")).code == 0);
  REQUIRE(s.run("color -i " + s.path("w5.txt") + " -o " + s.path("w5.col")).code == 0);
  Run ok = s.run("verify -i " + s.path("w5.txt") + " -c " + s.path("w5.col"));
  CHECK(ok.code == 0);
  CHECK(ok.out == "OK vertices=6 violations=0\n");

  REQUIRE(s.run("generate --family wheel --leaves 3 -o " + s.path("k4.txt")).code == 0);
  s.write("ones.col", "COLORING 1\n0 1\n1 1\n2 1\n3 1\n");
  Run bad = s.run("verify -i " + s.path("k4.txt") + " -c " + s.path("ones.col"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAILED vertices=4 violations=6") != std::string::npos);
  CHECK(bad.out.find("VIOLATION 1 0 1 1\n") == 0);

  s.write("short.col", "COLORING 1\n0 1\n1 1p\n2 2a\n");
  CHECK(s.run("verify -i " + s.path("k4.txt") + " -c " + s.path("short.col")).code == 2);
  s.write("odd.col", "COLORING 1\n0 1\n1 1p\n2 2a\n3 zz\n");
  CHECK(s.run("verify -i " + s.path("k4.txt") + " -c " + s.path("odd.col")).code == 2);
}

TEST_CASE("oracle") {
  Sandbox s;
  REQUIRE(s.run("generate --family wheel --leaves 5 -o " + s.path("w5.txt")).code == 0);
  Run no = s.run("oracle -i " + s.path("w5.txt") + " --sequence 1,2,2,2");
  CHECK(no.code == 1);
  CHECK(no.out == "INFEASIBLE\n");

  Run yes = s.run("oracle -i " + s.path("w5.txt") + " --sequence 1,1,2,2,2 --witness " +
                  s.path("wit.col"));
  CHECK(yes.code == 0);
  CHECK(yes.out == "FEASIBLE\n");
  Run check = s.run("verify -i " + s.path("w5.txt") + " -c " + s.path("wit.col") +
                    " --classes c1:1,c2:1,c3:2,c4:2,c5:2");
  CHECK(check.code == 0);

  REQUIRE(s.run("generate --leaves 26 --seed 3 -o " + s.path("big.txt")).code == 0);
  REQUIRE(halin::parse_graph(s.read("big.txt")).vertex_count() > 24);
  CHECK(s.run("oracle -i " + s.path("big.txt") + " --sequence 1,1,2,2,2").code == 2);
}

TEST_CASE("bench") {
  Sandbox s;
  Run r = s.run("bench --sizes 1000,2000,4000,8000 --repeats 3 --min-sample-us 0");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(s.run("bench --repeats 1").code == 2);
  CHECK(s.run("bench --sizes 2000,1000,4000,8000").code == 2);
}
