#include <doctest.h>

#include <filesystem>

#include "sosw/io.hpp"

using namespace sosw;

namespace {

Graph k3() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("sosw_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("pe file round trip, rational and float") {
  TempDir tmp;
  {
    auto pe = uniform_independent_set_pe<Rational>(k3(), 2);
    write_pe(tmp.file("pe.json"), pe, graph_hash(k3()));
    Graph g = k3();
    auto back = read_pe<Rational>(tmp.file("pe.json"), &g);
    CHECK(back.n == pe.n);
    CHECK(back.d == pe.d);
    CHECK((back.values == pe.values ? true : false));
  }
  {
    auto pe = uniform_independent_set_pe<double>(gen_gnp(5, 0.5, 3), 4);
    write_pe(tmp.file("pef.json"), pe, "");
    auto back = read_pe<double>(tmp.file("pef.json"));
    CHECK((back.values == pe.values ? true : false));
  }
}

TEST_CASE("pe load validation") {
  TempDir tmp;
  // nonzero on an edge set is rejected when the graph is attached
  Json doc;
  doc["format"] = "pe-v1";
  doc["n"] = 3;
  doc["d"] = 2;
  doc["mode"] = "rational";
  doc["graph_hash"] = graph_hash(k3());
  doc["values"] = Json::object({{"", "1"}, {"1,2", "1/3"}});
  atomic_write_text(tmp.file("bad.json"), doc.dump(2));
  Graph g = k3();
  CHECK_THROWS_AS(read_pe<Rational>(tmp.file("bad.json"), &g), std::invalid_argument);
  CHECK_NOTHROW(read_pe<Rational>(tmp.file("bad.json")));  // no graph, no edge check

  // value(empty) != 1 rejected
  doc["values"] = Json::object({{"", "2"}});
  atomic_write_text(tmp.file("bad2.json"), doc.dump(2));
  CHECK_THROWS_AS(read_pe<Rational>(tmp.file("bad2.json")), std::invalid_argument);

  // hash mismatch
  doc["values"] = Json::object({{"", "1"}});
  doc["graph_hash"] = "deadbeef";
  atomic_write_text(tmp.file("bad3.json"), doc.dump(2));
  CHECK_THROWS_AS(read_pe<Rational>(tmp.file("bad3.json"), &g), std::invalid_argument);
}

TEST_CASE("rational and decimal value strings both parse") {
  CHECK(parse_scalar<Rational>("1/4") == Rational(1, 4));
  CHECK(parse_scalar<Rational>("0.25") == Rational(1, 4));
  CHECK(parse_scalar<Rational>("-3.5") == Rational(-7, 2));
  CHECK(parse_scalar<Rational>("7") == 7);
  CHECK(parse_scalar<double>("1/4") == doctest::Approx(0.25));
  CHECK(parse_scalar<double>("0.25") == doctest::Approx(0.25));
  CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar<Rational>("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar<double>("abc"), std::invalid_argument);
}

TEST_CASE("float formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-17, 123456.789, -0.0, 2.5e300}) {
    CHECK(parse_scalar<double>(format_double(v)) == v);
  }
}

TEST_CASE("atomic write leaves no temp file and creates directories") {
  TempDir tmp;
  std::string path = tmp.file("sub/dir/report.json");
  atomic_write_text(path, "hello");
  CHECK(read_text_file(path) == "hello");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("make_report schema and key order") {
  auto rep = make_report("demo", Json{{"n", 4}}, Json{{"ok", true}});
  CHECK(rep["schema"] == "v1");
  CHECK(rep.contains("timestamp"));
  auto dumped = rep.dump(2);
  // timestamp sits on its own line so reruns differ only there
  CHECK(dumped.find("\"timestamp\"") != std::string::npos);
}
