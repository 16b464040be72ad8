#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "zforce/edge_list.hpp"
#include "zforce/errors.hpp"
#include "zforce/generators.hpp"

using namespace zforce;

TEST_CASE("parse comments, declared count and edges") {
  std::istringstream in("# two triangles\nN 7\n0 1\n1 2\n2 0\n\n3 4\n");
  Graph g = read_edge_list(in);
  CHECK(g.capacity() == 7);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(6) == 0);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("without a header the largest id sets the size") {
  std::istringstream in("0 3\r\n");
  Graph g = read_edge_list(in);
  CHECK(g.capacity() == 4);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("malformed input") {
  for (const char* text : {"0\n", "0 x\n", "1 1\n", "N 2\n0 5\n", "0 1\nN 4\n", "-1 2\n", "0  1\n"}) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), IoError);
  }
}

TEST_CASE("round trip reproduces the graph") {
  for (Seed seed = 1; seed <= 5; ++seed) {
    Graph g = gen_pa(PaParams{200, 2, 0.7}, seed);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);
  }
  Graph sparse(9);
  sparse.add_edge(2, 5);
  std::stringstream buf;
  write_edge_list(buf, sparse);
  CHECK(read_edge_list(buf) == sparse);
}

TEST_CASE("file helpers") {
  auto path = std::filesystem::temp_directory_path() / "zforce_edge_list_test.txt";
  Graph g = gen_stars(StarSpec{{3, 2}, StarArrangement::string});
  write_edge_list_file(path.string(), g);
  CHECK(read_edge_list_file(path.string()) == g);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_edge_list_file(path.string()), IoError);
  CHECK_THROWS_AS(write_edge_list_file("/nonexistent-dir/x.txt", g), IoError);
}
