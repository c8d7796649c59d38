#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hallpaige/builtin.hpp"
#include "hallpaige/group_spec.hpp"
#include "hallpaige/io.hpp"
#include "hallpaige/mapping.hpp"

using namespace hallpaige;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Internal;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hallpaige_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("group specs") {
  CHECK(parse_group_spec("cyclic:7").order() == 7);
  CHECK(parse_group_spec("dihedral:5").order() == 10);
  CHECK(parse_group_spec("sym:4").order() == 24);
  CHECK(parse_group_spec("alt:5").order() == 60);
  CHECK(parse_group_spec("q8") == quaternion8());
  CHECK(parse_group_spec("ea:3^2").order() == 9);
  CHECK(parse_group_spec("psl2:7").order() == 168);
  CHECK(parse_group_spec("prod:(cyclic:2,prod:(cyclic:3,q8))").order() == 48);
  for (const char* bad : {"", "cyclic", "cyclic:", "cyclic:0", "cyclic:x", "sym:9", "ea:4^2", "ea:2",
                          "prod:(cyclic:2)", "prod:cyclic:2,cyclic:3", "foo:3", "q8:1", "cyclic:99999"}) {
    INFO(bad);
    CHECK(code_of([&] { parse_group_spec(bad); }) == Errc::UnsupportedSpec);
  }
}

TEST_CASE("catalog") {
  const auto specs = catalog_specs(12);
  CHECK(specs.front() == "cyclic:1");
  CHECK(std::set<std::string>(specs.begin(), specs.end()).size() == specs.size());
  for (const auto& s : specs) CHECK(parse_group_spec(s).order() <= 12);
  CHECK(std::count(specs.begin(), specs.end(), "prod:(cyclic:2,cyclic:6)") == 1);
  CHECK(std::count(specs.begin(), specs.end(), "alt:4") == 1);
  CHECK(catalog_specs(64).size() > specs.size());
}

TEST_CASE("cayley table files") {
  std::istringstream z3("3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(read_cayley_table(z3) == cyclic(3));
  std::istringstream short_table("2\n0 1\n1\n");
  CHECK(code_of([&] { read_cayley_table(short_table); }) == Errc::ParseError);
  std::istringstream extra("1\n0 0\n");
  CHECK(code_of([&] { read_cayley_table(extra); }) == Errc::ParseError);
  std::istringstream range("2\n0 1\n1 2\n");
  CHECK(code_of([&] { read_cayley_table(range); }) == Errc::ParseError);
  std::istringstream not_latin("2\n0 0\n1 1\n");
  CHECK(code_of([&] { read_cayley_table(not_latin); }) == Errc::NotLatin);

  const auto path = temp_file("z2.txt", "2\n0 1\n1 0\n");
  CHECK(parse_group_spec("cayley:" + path).order() == 2);
  CHECK(code_of([] { read_cayley_file("/nonexistent/table.txt"); }) == Errc::IoError);
}

TEST_CASE("permutation generator files") {
  const auto path = temp_file("s4.txt", "# S4\n4\n(0 1)\n(0 1 2 3)\n");
  CHECK(parse_group_spec("perm:" + path).order() == 24);
  std::istringstream trivial("3\n");
  CHECK(read_generators(trivial).size() == 1);
  std::istringstream no_degree("# nothing\n");
  CHECK(code_of([&] { read_generators(no_degree); }) == Errc::ParseError);
  std::istringstream bad_cycle("3\n(0 3)\n");
  CHECK(code_of([&] { read_generators(bad_cycle); }) == Errc::ParseError);
}

TEST_CASE("mapping csv round trip") {
  const Group g = parse_group_spec("prod:(cyclic:2,cyclic:2)");
  const auto r = search(g);
  REQUIRE(r.mapping);
  std::stringstream buf;
  write_mapping_csv(buf, *r.mapping);
  CHECK(buf.str().rfind("g,phi,psi\n", 0) == 0);
  CHECK(read_mapping_csv(buf) == *r.mapping);

  std::istringstream shuffled("g,phi,psi\r\n2,2,1\r\n0,0,0\r\n1,1,2\r\n");
  const CompleteMapping cm = read_mapping_csv(shuffled);
  CHECK(cm.phi == std::vector<Elem>{0, 1, 2});
  CHECK(verify(cyclic(3), cm).ok);

  for (const char* bad : {"", "a,b,c\n", "g,phi,psi\n0,0\n", "g,phi,psi\n0,0,0,0\n", "g,phi,psi\n0,0,0\n0,1,1\n",
                          "g,phi,psi\n0,x,0\n"}) {
    std::istringstream in(bad);
    INFO(bad);
    CHECK(code_of([&] { read_mapping_csv(in); }) == Errc::ParseError);
  }
}
