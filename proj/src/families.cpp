#include "fsg/families.hpp"

#include <algorithm>
#include <numeric>

#include "fsg/errors.hpp"

namespace fsg {

FamilySpec FamilySpec::path(int n) { return {Kind::Path, n, 0, {}, nullptr}; }
FamilySpec FamilySpec::cycle(int n) { return {Kind::Cycle, n, 0, {}, nullptr}; }
FamilySpec FamilySpec::star(int n) { return {Kind::Star, n, 0, {}, nullptr}; }
FamilySpec FamilySpec::complete(int n) { return {Kind::Complete, n, 0, {}, nullptr}; }
FamilySpec FamilySpec::spider(std::vector<int> legs) { return {Kind::Spider, 0, 0, std::move(legs), nullptr}; }
FamilySpec FamilySpec::dandelion(int k, int n) { return {Kind::Dandelion, n, k, {}, nullptr}; }
FamilySpec FamilySpec::fruit_cycle(int n) { return {Kind::FruitCycle, n, 0, {}, nullptr}; }
FamilySpec FamilySpec::theta0() { return {Kind::Theta0, 7, 0, {}, nullptr}; }
FamilySpec FamilySpec::complement_of(FamilySpec inner) {
  return {Kind::Complement, 0, 0, {}, std::make_shared<const FamilySpec>(std::move(inner))};
}

Graph make_path(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw parameter_error("cycle needs n >= 3, got " + std::to_string(n));
  Graph g = make_path(n);
  g.add_edge(n, 1);
  return g;
}

Graph make_star(int n) {
  if (n < 2) throw parameter_error("star needs n >= 2, got " + std::to_string(n));
  Graph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_spider(const std::vector<int>& legs) {
  if (legs.empty()) throw parameter_error("spider needs at least one leg");
  for (int len : legs) {
    if (len < 1) throw parameter_error("spider leg lengths must be positive");
  }
  int n = 1 + std::accumulate(legs.begin(), legs.end(), 0);
  Graph g(n);
  int next = 2;
  for (int len : legs) {
    int prev = 1;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph make_dandelion(int k, int n) {
  if (k < 2 || n < k) throw parameter_error("dandelion needs n >= k >= 2");
  std::vector<int> legs;
  if (n > k) legs.push_back(n - k);
  legs.insert(legs.end(), static_cast<size_t>(k) - 1, 1);
  return make_spider(legs);
}

Graph make_fruit_cycle(int n) {
  if (n < 4) throw parameter_error("fruit cycle needs n >= 4, got " + std::to_string(n));
  Graph g(n);
  g.add_edge(1, n - 1);
  g.add_edge(1, n);
  for (int i = 1; i <= n - 2; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_theta0() {
  Graph g(7);
  for (int i = 1; i < 6; ++i) g.add_edge(i, i + 1);
  g.add_edge(6, 1);
  g.add_edge(1, 7);
  g.add_edge(7, 4);
  return g;
}

Graph make_family(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Path:
      if (spec.n < 1) throw parameter_error("path needs n >= 1");
      return make_path(spec.n);
    case Kind::Cycle:
      return make_cycle(spec.n);
    case Kind::Star:
      return make_star(spec.n);
    case Kind::Complete:
      if (spec.n < 1) throw parameter_error("complete graph needs n >= 1");
      return make_complete(spec.n);
    case Kind::Spider:
      return make_spider(spec.legs);
    case Kind::Dandelion:
      return make_dandelion(spec.k, spec.n);
    case Kind::FruitCycle:
      return make_fruit_cycle(spec.n);
    case Kind::Theta0:
      return make_theta0();
    case Kind::Complement:
      if (!spec.inner) throw parameter_error("complement spec has no inner spec");
      return complement(make_family(*spec.inner));
  }
  throw parameter_error("unknown family kind");
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& context) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw parameter_error("bad integer '" + item + "' in " + context);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw parameter_error("empty parameter list in " + context);
  return out;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  if (text == "theta0") return FamilySpec::theta0();
  if (text.size() >= 4 && text.rfind("co(", 0) == 0 && text.back() == ')') {
    return FamilySpec::complement_of(parse_family_spec(text.substr(3, text.size() - 4)));
  }
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw parameter_error("cannot parse graph spec '" + text + "'");
  }
  std::string name = text.substr(0, colon);
  std::vector<int> args = parse_int_list(text.substr(colon + 1), "'" + text + "'");
  auto expect_arity = [&](size_t arity) {
    if (args.size() != arity) {
      throw parameter_error("spec '" + text + "' expects " + std::to_string(arity) + " parameter(s)");
    }
  };
  if (name == "path") { expect_arity(1); return FamilySpec::path(args[0]); }
  if (name == "cycle") { expect_arity(1); return FamilySpec::cycle(args[0]); }
  if (name == "star") { expect_arity(1); return FamilySpec::star(args[0]); }
  if (name == "complete") { expect_arity(1); return FamilySpec::complete(args[0]); }
  if (name == "spider") { return FamilySpec::spider(args); }
  if (name == "dand") { expect_arity(2); return FamilySpec::dandelion(args[0], args[1]); }
  if (name == "fruit") { expect_arity(1); return FamilySpec::fruit_cycle(args[0]); }
  throw parameter_error("unknown graph family '" + name + "'");
}

std::string to_string(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::Path: return "path:" + std::to_string(spec.n);
    case Kind::Cycle: return "cycle:" + std::to_string(spec.n);
    case Kind::Star: return "star:" + std::to_string(spec.n);
    case Kind::Complete: return "complete:" + std::to_string(spec.n);
    case Kind::Spider: {
      std::string out = "spider:";
      for (size_t i = 0; i < spec.legs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.legs[i]);
      }
      return out;
    }
    case Kind::Dandelion: return "dand:" + std::to_string(spec.k) + "," + std::to_string(spec.n);
    case Kind::FruitCycle: return "fruit:" + std::to_string(spec.n);
    case Kind::Theta0: return "theta0";
    case Kind::Complement: return "co(" + to_string(*spec.inner) + ")";
  }
  return "?";
}

}  // namespace fsg
