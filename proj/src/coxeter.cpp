#include "fsg/coxeter.hpp"

#include <algorithm>

#include "fsg/enumerate.hpp"
#include "fsg/errors.hpp"
#include "fsg/families.hpp"

namespace fsg {

namespace {

bool cycle_adjacent(int p, int q, int n) {
  int d = std::abs(p - q);
  return d == 1 || d == n - 1;
}

void check_walk_graph(const Graph& y, const LabeledWalk& w) {
  if (y.n() < 3) throw parameter_error("cycle walks need n >= 3");
  if (w.start.n() != y.n()) throw parameter_error("walk start does not match the graph order");
}

}  // namespace

std::string to_string(const Move& move) {
  switch (move.kind) {
    case MoveKind::SquareDelete: return "delete@" + std::to_string(move.index);
    case MoveKind::SquareInsert: return "insert@" + std::to_string(move.index) + ":" + to_string(move.label);
    case MoveKind::Commute: return "commute@" + std::to_string(move.index);
    case MoveKind::YangBaxter: return "yang-baxter@" + std::to_string(move.index);
  }
  return "?";
}

bool MoveLog::discipline_ok() const {
  for (const auto& [label, count] : insertions) {
    auto it = deletions.find(label);
    if (it == deletions.end() || count > it->second) return false;
  }
  return true;
}

std::vector<Permutation> validate_walk(const Graph& y, const LabeledWalk& w) {
  check_walk_graph(y, w);
  const int n = y.n();
  std::vector<Permutation> states{w.start};
  Permutation cur = w.start;
  Permutation pos = cur.inverse();  // pos.of(person) = cycle position
  for (size_t i = 0; i < w.labels.size(); ++i) {
    const EdgeLabel& label = w.labels[i];
    if (label.lo < 1 || label.hi > n) {
      throw validation_error("step " + std::to_string(i) + ": label " + to_string(label) + " out of range");
    }
    if (!y.has_edge(label.lo, label.hi)) {
      throw validation_error("step " + std::to_string(i) + ": people " + to_string(label) +
                             " are not adjacent in Y");
    }
    int p = pos.of(label.lo), q = pos.of(label.hi);
    if (!cycle_adjacent(p, q, n)) {
      throw validation_error("step " + std::to_string(i) + ": people " + to_string(label) +
                             " are not on adjacent cycle positions");
    }
    cur = cur.swapped_positions(p, q);
    pos = Permutation::from_one_line([&] {
      std::vector<int> images = one_line_vector(pos);
      std::swap(images[label.lo - 1], images[label.hi - 1]);
      return images;
    }());
    states.push_back(cur);
  }
  return states;
}

LabeledWalk apply_move(const Graph& y, const LabeledWalk& w, const Move& move) {
  check_walk_graph(y, w);
  LabeledWalk out = w;
  auto& labels = out.labels;
  const size_t i = move.index;
  switch (move.kind) {
    case MoveKind::SquareDelete:
      if (i + 1 >= labels.size() || labels[i] != labels[i + 1]) {
        throw validation_error("square deletion needs equal labels at " + std::to_string(i) + "," +
                               std::to_string(i + 1));
      }
      labels.erase(labels.begin() + static_cast<long>(i), labels.begin() + static_cast<long>(i) + 2);
      break;
    case MoveKind::SquareInsert: {
      if (i > labels.size()) throw validation_error("insertion point out of range");
      labels.insert(labels.begin() + static_cast<long>(i), 2, move.label);
      break;
    }
    case MoveKind::Commute:
      if (i + 1 >= labels.size()) throw validation_error("commutation needs two labels");
      if (!labels[i].disjoint(labels[i + 1])) {
        throw validation_error("commutation needs disjoint labels, got " + to_string(labels[i]) + " and " +
                               to_string(labels[i + 1]) + " at " + std::to_string(i));
      }
      std::swap(labels[i], labels[i + 1]);
      break;
    case MoveKind::YangBaxter: {
      if (i + 2 >= labels.size()) throw validation_error("braid move needs three labels");
      const EdgeLabel &l1 = labels[i], &l2 = labels[i + 1], &l3 = labels[i + 2];
      if (l1.shared_count(l2) != 1 || l1.symmetric_difference(l2) != l3) {
        throw validation_error("braid move needs the pattern ab, ac, bc at " + std::to_string(i));
      }
      std::swap(labels[i], labels[i + 2]);
      break;
    }
  }
  validate_walk(y, out);  // also rejects inapplicable insertions
  return out;
}

namespace {

void check_anchored(const AnchoredWalk& w) {
  const auto& labels = w.walk.labels;
  if (labels.size() < 2) throw validation_error("anchored walk needs at least the two anchors");
  if (labels.front() != labels.back()) throw validation_error("anchored walk must end with its anchor");
}

void check_repetition_free(const AnchoredWalk& w) {
  check_anchored(w);
  std::vector<EdgeLabel> interior(w.walk.labels.begin(), w.walk.labels.end() - 1);
  std::sort(interior.begin(), interior.end());
  if (std::adjacent_find(interior.begin(), interior.end()) != interior.end()) {
    throw validation_error("anchored walk is not repetition-free");
  }
}

struct ParsedPrefix {
  int a = 0, b = 0;
  std::vector<int> xs, ys;
  size_t absorbed = 0;
  size_t prefix_len() const { return 1 + xs.size() + ys.size() + absorbed; }
};

ParsedPrefix parse_prefix(const EdgeLabel* labels, size_t count, PrefixMode mode) {
  ParsedPrefix parsed;
  parsed.a = labels[0].lo;
  parsed.b = labels[0].hi;
  size_t i = 1;
  for (; i < count; ++i) {  // block of a-labels
    if (!labels[i].contains(parsed.a) || labels[i].contains(parsed.b)) break;
    parsed.xs.push_back(labels[i].other(parsed.a));
  }
  auto in_xs = [&](int v) { return std::find(parsed.xs.begin(), parsed.xs.end(), v) != parsed.xs.end(); };
  for (; i < count; ++i) {  // block of b-labels with fresh partners
    if (!labels[i].contains(parsed.b) || labels[i].contains(parsed.a)) break;
    int partner = labels[i].other(parsed.b);
    if (in_xs(partner)) break;
    parsed.ys.push_back(partner);
  }
  if (mode == PrefixMode::Weak) {
    auto in_blocks = [&](int v) {
      return in_xs(v) || std::find(parsed.ys.begin(), parsed.ys.end(), v) != parsed.ys.end();
    };
    for (; i < count; ++i) {
      if (!in_blocks(labels[i].lo) || !in_blocks(labels[i].hi)) break;
      ++parsed.absorbed;
    }
  }
  return parsed;
}

}  // namespace

EssentialSplit essential_prefix(const AnchoredWalk& w, PrefixMode mode) {
  check_repetition_free(w);
  const auto& labels = w.walk.labels;
  ParsedPrefix parsed = parse_prefix(labels.data(), labels.size(), mode);
  EssentialSplit split;
  split.prefix.assign(labels.begin(), labels.begin() + static_cast<long>(parsed.prefix_len()));
  split.suffix.assign(labels.begin() + static_cast<long>(parsed.prefix_len()), labels.end());
  split.xs = std::move(parsed.xs);
  split.ys = std::move(parsed.ys);
  split.absorbed = parsed.absorbed;
  return split;
}

WalkClass classify_prediction(const AnchoredWalk& w, const Graph& y) {
  check_repetition_free(w);
  if (!domination_at_least(y, 2)) throw parameter_error("classification needs domination number >= 2");
  validate_walk(y, w.walk);
  const int a = w.anchor().lo, b = w.anchor().hi;
  for (int z = 1; z <= y.n(); ++z) {
    if (z == a || z == b) continue;
    bool az = false, bz = false;
    for (const EdgeLabel& label : w.walk.labels) {
      az = az || label == EdgeLabel(std::min(a, z), std::max(a, z));
      bz = bz || label == EdgeLabel(std::min(b, z), std::max(b, z));
    }
    if (az == bz) return WalkClass::Trivial;
  }
  return WalkClass::Complete;
}

// ---------------------------------------------------------------------------
// Reduction engine. All moves act on one ambient label sequence; anchored
// sub-walks are windows [lo, hi) into it. Labels that leave a window stay in
// the ambient walk; only the top window's cutoffs are walk trims.

namespace {

struct Window {
  size_t lo = 0, hi = 0;
  size_t size() const { return hi - lo; }
};

class ReductionSession {
 public:
  ReductionSession(const Graph& y, const AnchoredWalk& w, const ReduceOptions& opts)
      : y_(y), start_(w.walk.start), seq_(w.walk.labels), opts_(opts) {}

  const Graph& y_;
  Permutation start_;
  std::vector<EdgeLabel> seq_;
  ReduceOptions opts_;
  MoveLog log_;
  std::vector<Window*> windows_;

  [[noreturn]] void fatal(const std::string& what) const {
    std::string diag = what + "; moves so far:";
    for (const Move& m : log_.moves) diag += " " + to_string(m);
    throw invariant_violation(diag);
  }

  void bump() {
    if (log_.moves.size() >= opts_.max_moves) fatal("move budget exhausted");
  }

  Permutation state_at(size_t i) const {
    LabeledWalk prefix{start_, std::vector<EdgeLabel>(seq_.begin(), seq_.begin() + static_cast<long>(i))};
    return validate_walk(y_, prefix).back();
  }

  void validate_all() const {
    if (opts_.validate_every_move) validate_walk(y_, {start_, seq_});
  }

  // --- primitives -----------------------------------------------------------

  void commute(size_t i) {
    bump();
    if (i + 1 >= seq_.size() || !seq_[i].disjoint(seq_[i + 1])) fatal("bad commutation at " + std::to_string(i));
    std::swap(seq_[i], seq_[i + 1]);
    log_.moves.push_back({MoveKind::Commute, i, {}});
    validate_all();
  }

  void yang_baxter(size_t i) {
    bump();
    if (i + 2 >= seq_.size() || seq_[i].shared_count(seq_[i + 1]) != 1 ||
        seq_[i].symmetric_difference(seq_[i + 1]) != seq_[i + 2]) {
      fatal("bad braid move at " + std::to_string(i));
    }
    std::swap(seq_[i], seq_[i + 2]);
    log_.moves.push_back({MoveKind::YangBaxter, i, {}});
    validate_all();
  }

  void square_insert(size_t i, EdgeLabel label) {
    bump();
    Permutation state = state_at(i);
    Permutation pos = state.inverse();
    if (!y_.has_edge(label.lo, label.hi) ||
        !cycle_adjacent(pos.of(label.lo), pos.of(label.hi), y_.n())) {
      fatal("insertion of " + to_string(label) + " at " + std::to_string(i) + " is not executable");
    }
    seq_.insert(seq_.begin() + static_cast<long>(i), 2, label);
    for (Window* w : windows_) {
      if (w->lo > i) w->lo += 2;
      if (w->hi > i) w->hi += 2;
    }
    log_.moves.push_back({MoveKind::SquareInsert, i, label});
    ++log_.insertions[label];
    validate_all();
  }

  void square_delete(size_t i) {
    bump();
    if (i + 1 >= seq_.size() || seq_[i] != seq_[i + 1]) fatal("bad square deletion at " + std::to_string(i));
    EdgeLabel label = seq_[i];
    seq_.erase(seq_.begin() + static_cast<long>(i), seq_.begin() + static_cast<long>(i) + 2);
    for (Window* w : windows_) {
      if (w->lo == i || w->lo == i + 1 || (w->hi > i && w->hi <= i + 1)) fatal("window boundary inside deleted pair");
      if (w->lo > i + 1) w->lo -= 2;
      if (w->hi > i + 1) w->hi -= 2;
    }
    log_.moves.push_back({MoveKind::SquareDelete, i, {}});
    ++log_.deletions[label];
    validate_all();
  }

  // --- window-aware helpers --------------------------------------------------

  // Moves seq_[from] leftward to position `to` by commutations (to < from).
  void commute_left_to(size_t from, size_t to) {
    for (size_t p = from; p > to; --p) commute(p - 1);
  }

  void commute_right_to(size_t from, size_t to) {
    for (size_t p = from; p < to; ++p) commute(p);
  }

  // Commutes seq_[from] out through the window's front; w.lo grows by one.
  void trim_out_front(Window& w, size_t from) {
    commute_left_to(from, w.lo);
    w.lo += 1;
  }

  // Commutes seq_[from] out through the window's back; w.hi shrinks by one.
  void trim_out_back(Window& w, size_t from) {
    commute_right_to(from, w.hi - 1);
    w.hi -= 1;
  }

  void insert_at_front(Window& w, EdgeLabel label) {
    square_insert(w.lo, label);
    w.lo += 2;  // the pair sits before the opening anchor
  }

  size_t find_label(size_t begin, size_t end, EdgeLabel label) const {
    for (size_t i = begin; i < end; ++i) {
      if (seq_[i] == label) return i;
    }
    return end;
  }

  ParsedPrefix parse_window(const Window& w, PrefixMode mode) const {
    return parse_prefix(seq_.data() + w.lo, w.size(), mode);
  }

  // --- the constructive reductions -------------------------------------------

  // Reduces window w (anchors ab) to the trivial walk. Hypothesis: some
  // person z outside {a,b} has neither az nor bz among the window's labels.
  void reduce_trivial_no_z(Window& w) {
    for (;;) {
      if (w.size() == 2) return;
      ParsedPrefix parsed = parse_window(w, PrefixMode::Strong);
      const int a = parsed.a, b = parsed.b;
      const size_t k = parsed.xs.size(), l = parsed.ys.size();
      const size_t m = w.size() - parsed.prefix_len();
      if (m < 2) fatal("nontrivial walk with a bare strong suffix");
      const size_t j = w.lo + parsed.prefix_len();
      const EdgeLabel uv = seq_[j];
      auto index_in = [&](const std::vector<int>& block) {
        for (size_t t = block.size(); t > 0; --t) {
          if (uv.contains(block[t - 1])) return t;  // largest index
        }
        return size_t{0};
      };
      const size_t ty = index_in(parsed.ys);
      const size_t tx = index_in(parsed.xs);

      if (ty == 0 && tx == 0) {
        const bool has_a = uv.contains(a), has_b = uv.contains(b);
        if (!has_a && !has_b) {
          trim_out_front(w, j);  // disjoint from the whole prefix
        } else if (has_a && !has_b) {
          if (l == 0) fatal("a-label head would have been absorbed by the prefix parse");
          commute_left_to(j, w.lo + 1 + k);  // joins the a-block
        } else {
          fatal("b-label head would have been absorbed by the prefix parse");
        }
      } else if (ty > 0) {
        reduce_case3_block(w, parsed, j, /*y_side=*/true, ty);
      } else {
        reduce_case3_block(w, parsed, j, /*y_side=*/false, tx);
      }
    }
  }

  // Case 3 of the no-z reduction: the suffix head uv meets the x- or y-block.
  void reduce_case3_block(Window& w, const ParsedPrefix& parsed, size_t j, bool y_side, size_t t) {
    const int a = parsed.a, b = parsed.b;
    const size_t k = parsed.xs.size(), l = parsed.ys.size();
    const std::vector<int>& block = y_side ? parsed.ys : parsed.xs;
    const int own = y_side ? b : a;      // person owning the block labels
    const int other = y_side ? a : b;
    const size_t block_begin = y_side ? w.lo + 1 + k : w.lo + 1;  // position of block label 1
    const EdgeLabel uv = seq_[j];
    const int v = block[t - 1];
    const int u = uv.other(v);
    if (u == own) fatal("suffix head repeats a block label");

    if (t >= 2) {
      if (u != block[t - 2]) fatal("block-internal head is not a neighbor pair");
      commute_left_to(j, block_begin + t);
      yang_baxter(block_begin + t - 2);  // (own·v_{t-1}, own·v_t, uv) -> (uv, own·v_t, own·v_{t-1})
      trim_out_front(w, block_begin + t - 2);
      return;
    }
    // t == 1
    if (y_side && k == 0) {
      if (u != a) fatal("head at the y-block start must involve the opposite anchor");
      commute_left_to(j, w.lo + 2);  // right after by_1
      yang_baxter(w.lo);             // (ab, by_1, ay_1) -> (ay_1, by_1, ab)
      if (seq_[w.lo + 2] != EdgeLabel(a, b)) fatal("anchor misplaced after braid move");
      w.lo += 2;
      return;
    }
    if (!y_side) {
      if (l != 0 || u != b) fatal("x-block head with partner outside the analyzed cases");
      commute_left_to(j, w.lo + 2);  // right after ax_1
      yang_baxter(w.lo);             // (ab, ax_1, bx_1) -> (bx_1, ax_1, ab)
      if (seq_[w.lo + 2] != EdgeLabel(a, b)) fatal("anchor misplaced after braid move");
      w.lo += 2;
      return;
    }
    // y-side, t == 1, k >= 1: uv = x_1 y_1
    const int x1 = parsed.xs[0], y1 = parsed.ys[0];
    if (u != x1) fatal("y-block head must pair y_1 with x_1 here");
    const EdgeLabel bx1(std::min(b, x1), std::max(b, x1));
    // shape the prefix into ab, ax_1, by_1, x_1y_1, ax_2..ax_k, by_2..by_l
    commute_left_to(j, w.lo + k + 2);                 // uv right after by_1
    commute_left_to(w.lo + k + 1, w.lo + 2);          // by_1 right after ax_1
    commute_left_to(w.lo + k + 2, w.lo + 3);          // uv right after by_1 again
    if (find_label(w.lo + 4, w.hi - 1, bx1) == w.hi - 1) {
      fatal("partner label " + to_string(bx1) + " is missing from the remainder");
    }
    square_insert(w.lo + 2, bx1);  // ab, ax_1, bx_1, bx_1, by_1, x_1y_1, ...
    yang_baxter(w.lo);             // -> bx_1, ax_1, ab, bx_1, by_1, x_1y_1, ...
    yang_baxter(w.lo + 3);         // -> bx_1, ax_1, ab, x_1y_1, by_1, bx_1, ...
    commute(w.lo + 2);             // -> bx_1, ax_1, x_1y_1, ab, by_1, bx_1, ...
    if (seq_[w.lo + 3] != EdgeLabel(a, b)) fatal("anchor misplaced after braid moves");
    w.lo += 3;
    // move by_1, bx_1 right past ax_2..ax_k
    if (k >= 2) {
      commute_right_to(w.lo + 2, w.lo + k + 1);  // bx_1
      commute_right_to(w.lo + 1, w.lo + k);      // by_1
    }
    const size_t first = w.lo + k + 1;
    if (seq_[first] != bx1) fatal("misplaced inserted pair label");
    const size_t second = find_label(first + 1, w.hi - 1, bx1);
    if (second == w.hi - 1) fatal("second copy of " + to_string(bx1) + " vanished");
    Window child{first, second + 1};
    windows_.push_back(&child);
    reduce_trivial_no_z(child);
    windows_.pop_back();
    square_delete(child.lo);
  }

  // Head of the weak essential suffix pairs one anchor person with a member
  // of the other person's block; the walk reduces to trivial.
  void reduce_trivial_crossing(Window& w, bool head_is_b_side) {
    ParsedPrefix parsed = parse_window(w, PrefixMode::Weak);
    const int a = parsed.a, b = parsed.b;
    const size_t j = w.lo + parsed.prefix_len();
    const EdgeLabel head = seq_[j];
    const int head_person = head_is_b_side ? b : a;
    const int bubble_person = head_is_b_side ? a : b;
    const int u = head.other(head_person);
    const std::vector<int>& block = head_is_b_side ? parsed.xs : parsed.ys;
    auto block_pos = std::find(block.begin(), block.end(), u);
    if (block_pos == block.end()) fatal("crossing head without a matching block member");
    const size_t i = static_cast<size_t>(block_pos - block.begin()) + 1;
    const EdgeLabel bubble(std::min(bubble_person, u), std::max(bubble_person, u));

    // Step 1: bubble the prefix label {bubble_person, u} to just after the
    // opening anchor, leaving sentinel pairs behind.
    for (size_t s = i - 1; s >= 1; --s) {
      const size_t bubble_at = find_label(w.lo + 1, w.hi, bubble);
      if (bubble_at == w.hi) fatal("bubbled label vanished");
      const EdgeLabel neighbor(std::min(bubble_person, block[s - 1]), std::max(bubble_person, block[s - 1]));
      if (seq_[bubble_at - 1] != neighbor) fatal("bubbled label is not next to its block neighbor");
      const EdgeLabel sentinel(std::min(u, block[s - 1]), std::max(u, block[s - 1]));
      if (find_label(w.lo, w.hi - 1, sentinel) == w.hi - 1) {
        fatal("sentinel label " + to_string(sentinel) + " is missing from the walk");
      }
      square_insert(bubble_at - 1, sentinel);   // .., s, s, neighbor, bubble, ..
      yang_baxter(bubble_at);                   // .., s, bubble, neighbor, s, ..
      trim_out_front(w, bubble_at - 1);         // leading sentinel leaves the window
    }
    // for the a-side mirror the bubbled label still has to cross the x-block
    {
      const size_t bubble_at = find_label(w.lo + 1, w.hi, bubble);
      commute_left_to(bubble_at, w.lo + 1);
    }
    // Step 2: delete the sentinel pairs, innermost first.
    for (size_t s = i - 1; s >= 1; --s) {
      const EdgeLabel sentinel(std::min(u, block[s - 1]), std::max(u, block[s - 1]));
      const size_t first = find_label(w.lo, w.hi, sentinel);
      const size_t second = find_label(first + 1, w.hi, sentinel);
      if (second == w.hi) fatal("sentinel pair of " + to_string(sentinel) + " is incomplete");
      Window child{first, second + 1};
      windows_.push_back(&child);
      reduce_trivial_no_z(child);
      windows_.pop_back();
      square_delete(child.lo);
    }
    // Step 3: conjure the head label next to the anchor.
    const EdgeLabel head_label(std::min(head_person, u), std::max(head_person, u));
    insert_at_front(w, head_label);            // head, head, ab, bubble, ...
    yang_baxter(w.lo - 1);                     // -> bubble, ab, head (anchor stays put)
    if (seq_[w.lo] != EdgeLabel(a, b) || seq_[w.lo + 1] != head_label) {
      fatal("anchor misplaced after the crossing braid move");
    }
    // Step 4: cancel the two copies of the head label.
    const size_t second = find_label(w.lo + 2, w.hi, head_label);
    if (second == w.hi) fatal("original crossing head vanished");
    Window child{w.lo + 1, second + 1};
    windows_.push_back(&child);
    reduce_trivial_no_z(child);
    windows_.pop_back();
    square_delete(child.lo);
    // Step 5: neither {head_person, u} nor {bubble_person, u} remains, so u
    // certifies the no-z hypothesis.
    reduce_trivial_no_z(w);
  }
};

bool window_has_label(const ReductionSession& s, const Window& w, EdgeLabel label) {
  for (size_t i = w.lo; i < w.hi; ++i) {
    if (s.seq_[i] == label) return true;
  }
  return false;
}

}  // namespace

ReductionResult reduce_anchored(const AnchoredWalk& w, const Graph& y, const ReduceOptions& opts) {
  check_repetition_free(w);
  if (!domination_at_least(y, 2)) throw parameter_error("reduction needs domination number >= 2");
  validate_walk(y, w.walk);

  const WalkClass predicted = classify_prediction(w, y);
  ReductionSession session(y, w, opts);
  Window top{0, session.seq_.size()};
  session.windows_.push_back(&top);

  const int a = w.anchor().lo, b = w.anchor().hi;
  WalkClass outcome = WalkClass::Trivial;
  for (;;) {
    // a person with neither anchor label present lets the direct reduction run
    bool no_z = false;
    for (int z = 1; z <= y.n() && !no_z; ++z) {
      if (z == a || z == b) continue;
      no_z = !window_has_label(session, top, EdgeLabel(std::min(a, z), std::max(a, z))) &&
             !window_has_label(session, top, EdgeLabel(std::min(b, z), std::max(b, z)));
    }
    if (no_z) {
      session.reduce_trivial_no_z(top);
      outcome = WalkClass::Trivial;
      break;
    }
    if (top.size() == 2) {
      outcome = WalkClass::Trivial;
      break;
    }
    ParsedPrefix parsed = session.parse_window(top, PrefixMode::Weak);
    const size_t m = top.size() - parsed.prefix_len();
    if (m == 0) session.fatal("closing anchor swallowed by the prefix parse");
    if (m == 1) {
      // push the absorbed block-pair labels past the closing anchor
      for (size_t r = parsed.absorbed; r > 0; --r) {
        session.trim_out_back(top, top.hi - 2);
      }
      if (top.size() == 2) {
        outcome = WalkClass::Trivial;
        break;
      }
      if (parsed.xs.size() + parsed.ys.size() != static_cast<size_t>(y.n()) - 2) {
        session.fatal("bare weak suffix without the complete pattern");
      }
      outcome = WalkClass::Complete;
      break;
    }
    const size_t j = top.lo + parsed.prefix_len();
    const EdgeLabel uv = session.seq_[j];
    auto in_block = [&](const std::vector<int>& block, int person) {
      return std::find(block.begin(), block.end(), person) != block.end();
    };
    const bool has_a = uv.contains(a), has_b = uv.contains(b);
    if (has_b && !has_a && in_block(parsed.xs, uv.other(b))) {
      session.reduce_trivial_crossing(top, /*head_is_b_side=*/true);
      outcome = WalkClass::Trivial;
      break;
    }
    if (has_a && !has_b && in_block(parsed.ys, uv.other(a))) {
      session.reduce_trivial_crossing(top, /*head_is_b_side=*/false);
      outcome = WalkClass::Trivial;
      break;
    }
    const bool lo_in_blocks = in_block(parsed.xs, uv.lo) || in_block(parsed.ys, uv.lo);
    const bool hi_in_blocks = in_block(parsed.xs, uv.hi) || in_block(parsed.ys, uv.hi);
    if (lo_in_blocks || hi_in_blocks) session.fatal("weak suffix head inside the absorbed blocks");
    if (!has_a && !has_b) {
      session.trim_out_front(top, j);
    } else if (has_a && !has_b) {
      session.commute_left_to(j, top.lo + 1 + parsed.xs.size());
    } else if (has_b && !has_a) {
      session.commute_left_to(j, top.lo + 1 + parsed.xs.size() + parsed.ys.size());
    } else {
      session.fatal("anchor label repeated inside the walk");
    }
  }

  if (predicted != outcome) session.fatal("reduction outcome disagrees with the prediction");

  ReductionResult result;
  result.classification = outcome;
  result.log = session.log_;
  result.log.final_lo = top.lo;
  result.log.final_hi = top.hi;
  result.log.trimmed_front.assign(session.seq_.begin(), session.seq_.begin() + static_cast<long>(top.lo));
  result.log.trimmed_back.assign(session.seq_.begin() + static_cast<long>(top.hi), session.seq_.end());
  Permutation start = w.walk.start;
  {
    LabeledWalk front{start, result.log.trimmed_front};
    start = validate_walk(y, front).back();
  }
  result.final_walk.walk.start = start;
  result.final_walk.walk.labels.assign(session.seq_.begin() + static_cast<long>(top.lo),
                                       session.seq_.begin() + static_cast<long>(top.hi));
  check_anchored(result.final_walk);
  validate_walk(y, result.final_walk.walk);
  return result;
}

AnchoredWalk replay_move_log(const Graph& y, const AnchoredWalk& original, const MoveLog& log) {
  LabeledWalk cur = original.walk;
  validate_walk(y, cur);
  for (const Move& move : log.moves) cur = apply_move(y, cur, move);
  if (log.final_hi > cur.labels.size() || log.final_lo > log.final_hi) {
    throw validation_error("final window does not fit the replayed walk");
  }
  std::vector<EdgeLabel> front(cur.labels.begin(), cur.labels.begin() + static_cast<long>(log.final_lo));
  if (front != log.trimmed_front) throw validation_error("trimmed-front record does not match the replay");
  std::vector<EdgeLabel> back(cur.labels.begin() + static_cast<long>(log.final_hi), cur.labels.end());
  if (back != log.trimmed_back) throw validation_error("trimmed-back record does not match the replay");
  AnchoredWalk out;
  out.walk.start = validate_walk(y, {cur.start, front}).back();
  out.walk.labels.assign(cur.labels.begin() + static_cast<long>(log.final_lo),
                         cur.labels.begin() + static_cast<long>(log.final_hi));
  check_anchored(out);
  validate_walk(y, out.walk);
  return out;
}

std::vector<AnchoredWalk> find_anchored_walks(const Graph& y, int n, const WalkSearchOptions& opts) {
  if (n != y.n()) throw parameter_error("cycle order must match the graph order");
  if (n < 3) throw parameter_error("cycle walks need n >= 3");
  if (!domination_at_least(y, 2)) throw parameter_error("walk search needs domination number >= 2");

  Rng rng(opts.seed);
  std::vector<AnchoredWalk> found;
  std::vector<std::pair<uint64_t, std::vector<EdgeLabel>>> seen;
  size_t steps_left = opts.max_steps;
  while (steps_left > 0 && found.size() < opts.max_walks) {
    const size_t run = std::min(steps_left, static_cast<size_t>(4 * n * n));
    steps_left -= run;
    Permutation cur = perm_unrank(n, rng.below(factorial(n)));
    std::vector<Permutation> states{cur};
    std::vector<EdgeLabel> labels;
    for (size_t step = 0; step < run; ++step) {
      std::vector<std::pair<int, int>> applicable;  // cycle positions (p, p+1)
      for (int p = 1; p <= n; ++p) {
        int q = p % n + 1;
        if (y.has_edge(cur.of(p), cur.of(q))) applicable.emplace_back(p, q);
      }
      if (applicable.empty()) break;
      auto [p, q] = applicable[rng.below(applicable.size())];
      labels.emplace_back(cur.of(p), cur.of(q));
      cur = cur.swapped_positions(p, q);
      states.push_back(cur);
    }
    // scan for repetition-free anchored factors
    for (size_t close = 1; close < labels.size(); ++close) {
      for (size_t open = 0; open < close; ++open) {
        if (labels[open] != labels[close]) continue;
        bool repetition_free = true;
        for (size_t i = open + 1; i < close && repetition_free; ++i) {
          repetition_free = labels[i] != labels[open];
          for (size_t j = i + 1; j < close && repetition_free; ++j) {
            repetition_free = labels[i] != labels[j];
          }
        }
        if (!repetition_free) continue;
        AnchoredWalk walk;
        walk.walk.start = states[open];
        walk.walk.labels.assign(labels.begin() + static_cast<long>(open),
                                labels.begin() + static_cast<long>(close) + 1);
        auto key = std::make_pair(perm_rank(walk.walk.start), walk.walk.labels);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        found.push_back(std::move(walk));
        if (found.size() >= opts.max_walks) break;
      }
      if (found.size() >= opts.max_walks) break;
    }
  }
  return found;
}

SweepReport verify_walk_reduction(const std::vector<int>& orders, uint64_t seed, size_t min_corpus) {
  SweepReport report;
  report.name = "walk-reduction";
  const size_t per_order = (min_corpus + orders.size() - 1) / orders.size();
  size_t total = 0;
  for (int n : orders) {
    auto ys = enumerate_small_graphs(n, [](const Graph& g) {
      return is_connected(g) && domination_at_least(g, 2);
    });
    size_t collected = 0;
    for (size_t yi = 0; yi < ys.size() && collected < per_order; ++yi) {
      const Graph& y = ys[yi];
      WalkSearchOptions search;
      search.seed = seed + yi;
      search.max_walks = std::min<size_t>(60, per_order - collected);
      auto walks = find_anchored_walks(y, n, search);
      for (size_t wi = 0; wi < walks.size(); ++wi) {
        const std::string id = "n=" + std::to_string(n) + " y#" + std::to_string(yi) + " w#" +
                               std::to_string(wi);
        bool fine = true;
        try {
          const AnchoredWalk& walk = walks[wi];
          WalkClass predicted = classify_prediction(walk, y);
          ReductionResult result = reduce_anchored(walk, y);
          fine = fine && result.classification == predicted;
          fine = fine && result.log.discipline_ok();
          AnchoredWalk replayed = replay_move_log(y, walk, result.log);
          fine = fine && replayed.walk.labels == result.final_walk.walk.labels &&
                 replayed.walk.start == result.final_walk.walk.start;
          if (result.classification == WalkClass::Complete) {
            const auto& labels = result.final_walk.walk.labels;
            EssentialSplit split = essential_prefix(result.final_walk, PrefixMode::Strong);
            fine = fine && split.suffix.size() == 1 &&
                   split.xs.size() + split.ys.size() == static_cast<size_t>(n) - 2;
            // the anchor pair must dominate Y
            int aa = labels.front().lo, bb = labels.front().hi;
            for (int z = 1; z <= n; ++z) {
              if (z == aa || z == bb) continue;
              fine = fine && (y.has_edge(aa, z) || y.has_edge(bb, z));
            }
          } else {
            fine = fine && result.final_walk.trivial();
          }
        } catch (const std::exception&) {
          fine = false;
        }
        report.record(id, fine);
        ++collected;
        ++total;
      }
    }
  }
  report.record("corpus-size>=" + std::to_string(min_corpus), total >= min_corpus);
  return report;
}

}  // namespace fsg
