#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsg/fs_graph.hpp"
#include "fsg/graph.hpp"
#include "fsg/perm.hpp"
#include "fsg/rng.hpp"
#include "fsg/theorems.hpp"

namespace fsg {

/// Walk in FS(Cycle_n, Y): a start arrangement plus the sequence of swapped
/// Y-pairs. Position p of the cycle is adjacent to p±1 (mod n).
struct LabeledWalk {
  Permutation start;
  std::vector<EdgeLabel> labels;
};

/// Walk whose first and last labels coincide (the anchors).
struct AnchoredWalk {
  LabeledWalk walk;

  const EdgeLabel& anchor() const { return walk.labels.front(); }
  bool trivial() const { return walk.labels.size() == 2; }
};

enum class MoveKind { SquareDelete, SquareInsert, Commute, YangBaxter };

struct Move {
  MoveKind kind = MoveKind::Commute;
  size_t index = 0;
  EdgeLabel label;  // SquareInsert only
};

std::string to_string(const Move& move);

struct MoveLog {
  std::vector<Move> moves;
  std::map<EdgeLabel, int> insertions;  // square-insertion moves per label
  std::map<EdgeLabel, int> deletions;   // square-deletion moves per label
  std::vector<EdgeLabel> trimmed_front;  // labels cut before the first anchor
  std::vector<EdgeLabel> trimmed_back;   // labels cut after the last anchor
  size_t final_lo = 0, final_hi = 0;     // anchored window after all moves

  /// Square insertions never exceed deletions, per label.
  bool discipline_ok() const;
};

enum class WalkClass { Trivial, Complete };

struct ReductionResult {
  WalkClass classification = WalkClass::Trivial;
  MoveLog log;
  AnchoredWalk final_walk;
};

struct ReduceOptions {
  size_t max_moves = 1'000'000;
  bool validate_every_move = true;
};

/// Checks executability step by step and returns the full vertex sequence
/// (one more entry than there are labels).
std::vector<Permutation> validate_walk(const Graph& y, const LabeledWalk& w);

/// One Coxeter move on a plain walk; endpoints are preserved and the result
/// is re-validated. Inapplicable moves raise validation_error.
LabeledWalk apply_move(const Graph& y, const LabeledWalk& w, const Move& move);

enum class PrefixMode { Strong, Weak };

struct EssentialSplit {
  std::vector<EdgeLabel> prefix;
  std::vector<EdgeLabel> suffix;
  std::vector<int> xs;  // partners of the first-anchor person a, in order
  std::vector<int> ys;  // partners of b, in order
  size_t absorbed = 0;  // weak mode: labels drawn entirely from xs ∪ ys
};

EssentialSplit essential_prefix(const AnchoredWalk& w, PrefixMode mode);

/// Trivial iff some person z outside the anchors has both or neither of the
/// labels az, bz in the sequence; Complete otherwise.
WalkClass classify_prediction(const AnchoredWalk& w, const Graph& y);

/// Constructive reduction by Coxeter moves. The returned log replays from the
/// original walk; per label, square insertions never exceed deletions.
ReductionResult reduce_anchored(const AnchoredWalk& w, const Graph& y, const ReduceOptions& opts = {});

/// Applies log.moves to the original walk, validating every intermediate
/// walk, and returns the anchored walk cut out by the final window.
AnchoredWalk replay_move_log(const Graph& y, const AnchoredWalk& original, const MoveLog& log);

struct WalkSearchOptions {
  uint64_t seed = kDefaultSeed;
  size_t max_steps = 4000;  // total random-walk steps; 0 yields nothing
  size_t max_walks = 200;
};

/// Seeded random walks in FS(Cycle_n, y), scanned for repetition-free
/// anchored factors; deterministic under a fixed seed.
std::vector<AnchoredWalk> find_anchored_walks(const Graph& y, int n, const WalkSearchOptions& opts = {});

/// Reduction corpus sweep: classification matches the prediction, every
/// replayed intermediate validates, and the insertion/deletion discipline
/// holds, over at least min_corpus anchored walks.
SweepReport verify_walk_reduction(const std::vector<int>& orders = {5, 6, 7},
                                  uint64_t seed = kDefaultSeed, size_t min_corpus = 1000);

}  // namespace fsg
