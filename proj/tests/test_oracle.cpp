#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "onelight/discharging.hpp"
#include "onelight/generators.hpp"
#include "onelight/ledger.hpp"
#include "oracle/naive_discharge.hpp"
#include "support.hpp"

using namespace onelight;

namespace {

std::vector<std::string> library_lines(const AssociatedPlaneGraph& g) {
  std::vector<std::string> lines;
  std::istringstream in(export_ledger(apply_discharging(g).ledger));
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::vector<std::string> oracle_lines(const fixtures::Drawing& d) { return naive::ledger(d.rot, d.marks); }

std::vector<std::string> oracle_lines(const AssociatedPlaneGraph& g) {
  return naive::ledger(g.embedding().rotation().rotation, g.false_marks());
}

}  // namespace

// Hand-computed ledgers that the enumerator itself must reproduce.
TEST_CASE("frozen: plane K4") {
  const auto lines = naive::ledger({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}, {false, false, false, false});
  CHECK(lines.size() == 12);
  for (const auto& l : lines) {
    CHECK(l.rfind("R7;f", 0) == 0);
    CHECK(l.ends_with(";-;-1/3"));
  }
}

TEST_CASE("frozen: K5 with one crossing") {
  const auto g = catalog("k5-one-crossing");
  const auto lines = oracle_lines(g);
  const auto r1 = std::count_if(lines.begin(), lines.end(), [](const std::string& l) { return l.rfind("R1;", 0) == 0; });
  const auto r7 = std::count_if(lines.begin(), lines.end(), [](const std::string& l) { return l.rfind("R7;", 0) == 0; });
  CHECK(r1 == 8);
  CHECK(r7 == 20);
  // Crossing triangles pass -1 + 2/6 to their two true corners.
  CHECK(std::count_if(lines.begin(), lines.end(),
                      [](const std::string& l) { return l.rfind("R7;", 0) == 0 && l.ends_with(";-1/3"); }) == 20);
}

TEST_CASE("frozen: cube with diagonals") {
  const auto lines = oracle_lines(catalog("cube-diagonals"));
  CHECK(lines.size() == 48);
  for (const auto& l : lines) CHECK((l.rfind("R3;v", 0) == 0 && l.ends_with(";-;7/18")));
}

TEST_CASE("frozen: two 9-vertices at a crossing") {
  auto d = fixtures::k4_crossing();
  fixtures::grow_to(d, 0, 9);
  fixtures::grow_to(d, 1, 9);
  const auto lines = oracle_lines(d);
  std::vector<std::string> r6;
  for (const auto& l : lines)
    if (l.rfind("R6", 0) == 0) r6.push_back(l);
  REQUIRE(r6.size() == 2);
  for (const auto& l : r6) CHECK(l.ends_with(";v4;1/18"));
}

TEST_CASE("library matches the enumerator on catalog and gadgets") {
  for (const auto& name : catalog_names()) CHECK_MESSAGE(library_lines(catalog(name)) == oracle_lines(catalog(name)), name);

  std::vector<fixtures::Drawing> gadgets;
  for (int near : {9, 10, 11, 12, 23, 24, 30}) {
    for (int far2 : {3, 4, 7}) {
      for (int far3 : {3, 6, 7}) {
        for (int leaves : {0, 1}) {
          auto d = fixtures::k4_crossing();
          fixtures::grow_to(d, 0, near);
          fixtures::grow_to(d, 1, near + 1);
          fixtures::grow_to(d, 2, far2);
          fixtures::grow_to(d, 3, far3);
          if (leaves) fixtures::add_leaves(d, 0, 1, 1);
          gadgets.push_back(d);
        }
      }
    }
  }
  for (int k = 4; k <= 8; ++k) {
    for (int far : {8, 9, 10, 11, 12}) {
      auto d = fixtures::k4_crossing();
      fixtures::grow_to(d, 1, k);
      fixtures::grow_to(d, 2, far);
      gadgets.push_back(d);
    }
  }
  for (const auto& d : gadgets) CHECK(library_lines(d.graph()) == oracle_lines(d));
}

TEST_CASE("library matches the enumerator on the whole corpus") {
  for (const auto& in : corpus::build()) CHECK_MESSAGE(library_lines(in.graph) == oracle_lines(in.graph), in.name);
}
