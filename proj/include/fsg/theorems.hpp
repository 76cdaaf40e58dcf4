#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsg/fs_graph.hpp"
#include "fsg/graph.hpp"
#include "fsg/rng.hpp"

namespace fsg {

/// Outcome of an executable connectivity criterion, optionally cross-checked
/// against an exhaustive census, with the witness that made it fire.
struct TheoremVerdict {
  bool predicate_result = false;
  std::optional<bool> oracle_result;
  std::optional<std::vector<int>> witness_set;   // vertex subset (Y0 or a disconnected set)
  std::optional<std::vector<int>> witness_legs;  // matched spider partition
};

/// Sufficient condition: every max_degree(x)-subset of y induces a connected
/// graph and some such subset Y0 has FS(Star_k, Y0) connected.
TheoremVerdict sufficient_spider_condition(const Graph& x, const Graph& y, bool with_oracle = false,
                                           const FsBudget& budget = {});

/// Searches for a k-subset Y0 of y with FS(Star_k, Y0) connected, given that
/// every k-subset of y is connected. When n >= 2k-1 the search must succeed;
/// coming up empty then raises theorem_violation.
TheoremVerdict wilsonian_existence(const Graph& y, int k);

/// Necessary condition for spiders: a disconnected induced subgraph of y on
/// n - lambda_1 vertices certifies that FS(Spider(lambda), y) is disconnected.
TheoremVerdict necessary_spider_condition(const std::vector<int>& legs, const Graph& y,
                                          bool with_oracle = false, const FsBudget& budget = {});

/// FS(Dand_{k,n}, y) is connected iff every k-subset of y is connected
/// (requires n >= 2k-1).
TheoremVerdict dandelion_characterization(int k, int n, const Graph& y, bool with_oracle = false,
                                          const FsBudget& budget = {});

/// Closed form: is FS(Spider(legs), complement(Cycle_n)) connected?
bool spider_vs_complement_cycle(const std::vector<int>& legs);

/// Closed form: is FS(Spider(legs), complement(FruitCycle_n)) connected?
/// Requires at least three legs.
bool spider_vs_complement_fruit(const std::vector<int>& legs);

/// Sufficient condition via minimum degree: y has min degree >= n-3 and the
/// connected graph x contains one of six fixed small spiders.
TheoremVerdict min_degree_sufficient(const Graph& x, const Graph& y, bool with_oracle = false,
                                     const FsBudget& budget = {});

enum class HereditaryFamily { CoCycle, CoFruit, MinDeg3 };

/// Pendant-extension step: verify the base hypotheses of the chosen
/// hereditary corollary by census, attach a new leaf at attach_at, and check
/// the (n+1)-vertex conclusion by census.
TheoremVerdict hereditary_extension_check(const Graph& base_x, int attach_at, HereditaryFamily family,
                                          const FsBudget& budget = {});

// ---------------------------------------------------------------------------
// Sweep drivers shared by the CLI `verify` command and the acceptance suite.

struct SweepReport {
  std::string name;
  uint64_t instances = 0;       // instances whose claim was actually tested
  uint64_t recorded_limit = 10000;
  std::vector<std::pair<std::string, bool>> verdicts;  // capped at recorded_limit
  std::vector<std::string> counterexamples;            // must stay empty

  bool ok() const { return counterexamples.empty(); }
  void record(const std::string& id, bool fine);
};

/// Every partition with k >= 3 legs and n <= n_max, closed form vs census;
/// with include_big_case also the (6,2,1) partition at n = 10.
SweepReport verify_cycles_complement(int n_max = 9, bool include_big_case = true);
SweepReport verify_fruit(int n_max = 8);
SweepReport verify_dandelion(int n_max = 8, uint64_t seed = kDefaultSeed, int random_count_top = 200);
SweepReport verify_wilson(int n_min = 4, int n_max = 7);
SweepReport verify_spider_sufficient(int n_max = 7);
SweepReport verify_spider_necessary(int n_max = 7);
SweepReport verify_min_degree(uint64_t seed = kDefaultSeed, int samples_n8 = 40, int samples_n9 = 16);
SweepReport verify_wilsonian(int n_max = 7);

/// All partitions of m in non-increasing order.
std::vector<std::vector<int>> partitions_of(int m);

}  // namespace fsg
