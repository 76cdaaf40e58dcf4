#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg {

/// Named graph families with fixed vertex labelings, so every downstream
/// result is reproducible bit for bit.
///
/// Labelings:
///   Path n      edges {i, i+1}
///   Cycle n     edges {i, i+1} and {n, 1}
///   Star n      center 1, leaves 2..n
///   Complete n  all pairs
///   Spider      center 1, legs laid out consecutively: leg j occupies the
///               next legs[j] labels, chained outward from the center
///   Dandelion   Spider with legs (n-k, 1, ..., 1) — k legs total; n = k
///               degenerates to Star_k
///   FruitCycle  vertex set [n], edges {1,n-1}, {1,n}, {i,i+1} for i <= n-2
///               (an (n-1)-cycle with a pendant at vertex 1)
///   Theta0      hexagon 1..6 plus vertex 7 adjacent to hubs 1 and 4
///   Complement  complement of the inner spec
struct FamilySpec {
  enum class Kind { Path, Cycle, Star, Complete, Spider, Dandelion, FruitCycle, Theta0, Complement };
  Kind kind = Kind::Path;
  int n = 0;                          // Path/Cycle/Star/Complete/FruitCycle; Dandelion total order
  int k = 0;                          // Dandelion leg count
  std::vector<int> legs;              // Spider
  std::shared_ptr<const FamilySpec> inner;  // Complement

  static FamilySpec path(int n);
  static FamilySpec cycle(int n);
  static FamilySpec star(int n);
  static FamilySpec complete(int n);
  static FamilySpec spider(std::vector<int> legs);
  static FamilySpec dandelion(int k, int n);
  static FamilySpec fruit_cycle(int n);
  static FamilySpec theta0();
  static FamilySpec complement_of(FamilySpec inner);
};

Graph make_family(const FamilySpec& spec);

/// CLI syntax: "path:5", "cycle:8", "star:7", "complete:6", "spider:3,2,2",
/// "dand:3,8", "fruit:7", "theta0", "co(<spec>)".
FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

/// Convenience builders used all over the tests and sweeps.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int n);
Graph make_complete(int n);
Graph make_spider(const std::vector<int>& legs);
Graph make_dandelion(int k, int n);
Graph make_fruit_cycle(int n);
Graph make_theta0();

}  // namespace fsg
