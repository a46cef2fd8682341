#include "kint/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace kint {

void validate(const ThreePartitionInstance& inst) {
  if (inst.b < 4) throw Error(ErrorCode::InvalidInstance, "b must be at least 4");
  if (inst.sizes.empty() || inst.sizes.size() % 3 != 0)
    throw Error(ErrorCode::InvalidInstance, "need 3n element sizes, got " + std::to_string(inst.sizes.size()));
  long long sum = 0;
  for (int s : inst.sizes) {
    // b/4 < s < b/2 without fractions
    if (!(4 * s > inst.b && 2 * s < inst.b))
      throw Error(ErrorCode::InvalidInstance, "size " + std::to_string(s) + " outside (b/4, b/2)");
    sum += s;
  }
  if (sum != static_cast<long long>(inst.groups()) * inst.b)
    throw Error(ErrorCode::InvalidInstance, "sizes sum to " + std::to_string(sum) + ", expected n*b");
}

int LabeledBigraph::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int LabeledBigraph::add_vertex(std::string name, Role role, int side) {
  int idx = static_cast<int>(vertices.size());
  by_name_.emplace(name, idx);
  vertices.push_back(Vertex{std::move(name), role, side});
  return idx;
}

void LabeledBigraph::add_edge(const std::string& u, const std::string& v) {
  int a = index_of(u), b = index_of(v);
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidInstance, "edge " + u + " - " + v + " has an unknown end");
  if (vertices[static_cast<std::size_t>(a)].side == vertices[static_cast<std::size_t>(b)].side)
    throw Error(ErrorCode::InvalidInstance, "edge " + u + " - " + v + " inside one side");
  if (vertices[static_cast<std::size_t>(a)].side != 1) std::swap(a, b);
  edges.emplace_back(a, b);
}

std::size_t LabeledBigraph::degree(const std::string& name) const {
  int idx = index_of(name);
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == idx || e.second == idx; }));
}

LabeledBigraph labeled_incidence(const Formula& f) {
  LabeledBigraph g;
  for (VarId v = 1; v <= f.var_count(); ++v) g.add_vertex("x" + std::to_string(v), Role::Variable, 1);
  for (const auto& c : f.clauses()) g.add_vertex("c" + std::to_string(c.id), Role::Clause, 2);
  for (const auto& c : f.clauses())
    for (const auto& l : c.literals) g.add_edge("x" + std::to_string(l.var), "c" + std::to_string(c.id));
  return g;
}

namespace {

std::string name2(const char* prefix, int i, int j) {
  return std::string(prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string name1(const char* prefix, int i) { return std::string(prefix) + "_" + std::to_string(i); }

}  // namespace

LabeledBigraph gen_3partition_bigraph(const ThreePartitionInstance& inst) {
  validate(inst);
  const int n = inst.groups();
  const int b = inst.b;
  LabeledBigraph g;

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= b + 1; ++j) g.add_vertex(name2("s", i, j), Role::Slot, 1);
  for (int i = 1; i < n; ++i) g.add_vertex(name1("sd", i), Role::Delimiter, 1);
  g.add_vertex("al", Role::AnchorLeft, 1);
  g.add_vertex("ar", Role::AnchorRight, 1);
  for (std::size_t a = 1; a <= inst.sizes.size(); ++a)
    for (int j = 1; j <= inst.sizes[a - 1]; ++j) g.add_vertex(name2("n", static_cast<int>(a), j), Role::Numeral, 1);

  g.add_vertex("t", Role::Track, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= b; ++j) g.add_vertex(name2("l", i, j), Role::Ell, 2);
  for (int i = 1; i < n; ++i) {
    g.add_vertex(name1("ld1", i), Role::EllD1, 2);
    g.add_vertex(name1("ld2", i), Role::EllD2, 2);
  }
  g.add_vertex("lal", Role::EllAnchorL, 2);
  g.add_vertex("lar", Role::EllAnchorR, 2);
  for (std::size_t a = 1; a <= inst.sizes.size(); ++a)
    for (int j = 0; j <= inst.sizes[a - 1]; ++j) g.add_vertex(name2("ln", static_cast<int>(a), j), Role::EllNumeral, 2);

  // slot paths s_{i,1} l_{i,1} s_{i,2} ... s_{i,b+1}
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= b; ++j) {
      g.add_edge(name2("s", i, j), name2("l", i, j));
      g.add_edge(name2("s", i, j + 1), name2("l", i, j));
    }
  for (int i = 1; i < n; ++i) {
    for (const auto& s : {name2("s", i, b), name2("s", i, b + 1), name1("sd", i), name2("s", i + 1, 1)})
      g.add_edge(s, name1("ld1", i));
    for (const auto& s : {name2("s", i, b + 1), name1("sd", i), name2("s", i + 1, 1), name2("s", i + 1, 2)})
      g.add_edge(s, name1("ld2", i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= b + 1; ++j) g.add_edge(name2("s", i, j), "t");
  for (int i = 2; i < n; ++i) g.add_edge(name1("sd", i), "t");

  for (const auto& s : {std::string("al"), name2("s", 1, 1), name2("s", 1, 2)}) g.add_edge(s, "lal");
  for (const auto& s : {std::string("ar"), name2("s", n, b + 1), name2("s", n, b)}) g.add_edge(s, "lar");

  // numeral paths ln_{a,0} n_{a,1} ln_{a,1} ... n_{a,s} ln_{a,s}, track on every n_{a,j}
  for (std::size_t a = 1; a <= inst.sizes.size(); ++a) {
    const int ai = static_cast<int>(a);
    for (int j = 1; j <= inst.sizes[a - 1]; ++j) {
      g.add_edge(name2("n", ai, j), name2("ln", ai, j - 1));
      g.add_edge(name2("n", ai, j), name2("ln", ai, j));
      g.add_edge(name2("n", ai, j), "t");
    }
  }
  return g;
}

std::size_t expected_vertex_count(const ThreePartitionInstance& inst) {
  const auto n = static_cast<std::size_t>(inst.groups());
  const auto b = static_cast<std::size_t>(inst.b);
  std::size_t numerals = 0;
  for (int s : inst.sizes) numerals += 2 * static_cast<std::size_t>(s) + 1;
  return n * (b + 1) + n * b + 3 * (n - 1) + 1 + 4 + numerals;
}

std::size_t expected_edge_count(const ThreePartitionInstance& inst) {
  const auto n = static_cast<std::size_t>(inst.groups());
  const auto b = static_cast<std::size_t>(inst.b);
  std::size_t sizes = 0;
  for (int s : inst.sizes) sizes += static_cast<std::size_t>(s);
  const std::size_t slot_paths = 2 * n * b;
  const std::size_t delimiters = 8 * (n - 1);
  // track meets every slot and every delimiter except the first
  const std::size_t track = n * (b + 1) + (n >= 2 ? n - 2 : 0);
  const std::size_t anchors = 6;
  const std::size_t numerals = 3 * sizes;  // 2s path edges + s track edges
  return slot_paths + delimiters + track + anchors + numerals;
}

IntervalRep representation_from_partition(const ThreePartitionInstance& inst,
                                          const std::vector<std::vector<int>>& partition) {
  validate(inst);
  const int n = inst.groups();
  const int b = inst.b;
  const int elements = static_cast<int>(inst.sizes.size());

  if (static_cast<int>(partition.size()) != n)
    throw Error(ErrorCode::NotASolution, "expected " + std::to_string(n) + " triples");
  std::vector<char> used(static_cast<std::size_t>(elements) + 1, 0);
  for (const auto& triple : partition) {
    if (triple.size() != 3) throw Error(ErrorCode::NotASolution, "every group must have three elements");
    int sum = 0;
    for (int a : triple) {
      if (a < 1 || a > elements || used[static_cast<std::size_t>(a)])
        throw Error(ErrorCode::NotASolution, "element " + std::to_string(a) + " is unknown or reused");
      used[static_cast<std::size_t>(a)] = 1;
      sum += inst.sizes[static_cast<std::size_t>(a - 1)];
    }
    if (sum != b) throw Error(ErrorCode::NotASolution, "a group sums to " + std::to_string(sum));
  }

  // Unit-length slots two apart; the unit gap between consecutive slots of a
  // section hosts one numeral vertex. Sections are glued by their delimiter.
  IntervalRep rep;
  auto put = [&](const std::string& name, std::int64_t lo, std::int64_t hi) { rep.intervals[name] = {Coord(lo), Coord(hi)}; };
  auto slot_lo = [&](int i, int j) -> std::int64_t {
    return 1 + static_cast<std::int64_t>(i - 1) * (2 * b + 2) + 2 * (j - 1);
  };
  auto gap_lo = [&](int i, int g) { return slot_lo(i, g) + 1; };
  const std::int64_t right_end = slot_lo(n, b + 1) + 1;

  put("al", 0, 1);
  put("lal", 0, slot_lo(1, 2) + 1);
  put("ar", right_end, right_end + 1);
  put("lar", slot_lo(n, b), right_end + 1);
  put("t", slot_lo(1, 1), right_end);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= b + 1; ++j) put(name2("s", i, j), slot_lo(i, j), slot_lo(i, j) + 1);
    for (int j = 1; j <= b; ++j) put(name2("l", i, j), slot_lo(i, j), slot_lo(i, j + 1) + 1);
    if (i < n) {
      const std::int64_t end = slot_lo(i, b + 1) + 1;
      put(name1("sd", i), end, end + 1);
      put(name1("ld1", i), slot_lo(i, b), slot_lo(i + 1, 1) + 1);
      put(name1("ld2", i), slot_lo(i, b + 1), slot_lo(i + 1, 2) + 1);
    }
  }
  for (int i = 1; i <= n; ++i) {
    int offset = 0;
    for (int a : partition[static_cast<std::size_t>(i - 1)]) {
      const int s = inst.sizes[static_cast<std::size_t>(a - 1)];
      for (int j = 1; j <= s; ++j) {
        const std::int64_t lo = gap_lo(i, offset + j);
        put(name2("n", a, j), lo, lo + 1);
      }
      put(name2("ln", a, 0), gap_lo(i, offset + 1), gap_lo(i, offset + 1) + 1);
      for (int j = 1; j < s; ++j) put(name2("ln", a, j), gap_lo(i, offset + j), gap_lo(i, offset + j + 1) + 1);
      put(name2("ln", a, s), gap_lo(i, offset + s), gap_lo(i, offset + s) + 1);
      offset += s;
    }
  }
  return rep;
}

RepresentationVerdict check_representation(const LabeledBigraph& g, const IntervalRep& rep, int k) {
  std::vector<const Interval*> iv(g.vertices.size(), nullptr);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    auto it = rep.intervals.find(g.vertices[v].name);
    if (it == rep.intervals.end())
      throw Error(ErrorCode::MissingInterval, "no interval for " + g.vertices[v].name);
    iv[v] = &it->second;
  }

  RepresentationVerdict verdict;
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<char>> adjacent(nv, std::vector<char>(nv, 0));
  for (auto [u, v] : g.edges) {
    adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    if (!overlaps(*iv[static_cast<std::size_t>(u)], *iv[static_cast<std::size_t>(v)])) {
      verdict.accept = false;
      verdict.edges_without_overlap.emplace_back(g.vertices[static_cast<std::size_t>(u)].name,
                                                 g.vertices[static_cast<std::size_t>(v)].name);
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.vertices[v].side != g.designated_side) continue;
    VertexExcess ex{g.vertices[v].name, {}};
    for (std::size_t u = 0; u < nv; ++u)
      if (g.vertices[u].side != g.designated_side && !adjacent[v][u] && overlaps(*iv[v], *iv[u]))
        ex.overlapped_non_neighbours.push_back(g.vertices[u].name);
    if (ex.overlapped_non_neighbours.empty()) continue;
    verdict.max_excess = std::max(verdict.max_excess, ex.overlapped_non_neighbours.size());
    if (ex.overlapped_non_neighbours.size() > static_cast<std::size_t>(std::max(k, 0))) verdict.accept = false;
    verdict.excess.push_back(std::move(ex));
  }
  if (k < 0) verdict.accept = false;
  return verdict;
}

namespace {

// Fixed algorithm for reproducible draws across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Uniform-ish integer in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (rng_() >> 17) & 1U; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(between(0, static_cast<int>(i - 1)))]);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

RandomInstance random_k_interval_instance(int n, int m, int k, int max_width, std::uint64_t seed) {
  if (n < 1 || m < 1 || max_width < 1 || k < 0 || k > max_width)
    throw Error(ErrorCode::InfeasibleParameters,
                "need n, m, width >= 1 and 0 <= k <= width (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                    ", k=" + std::to_string(k) + ", width=" + std::to_string(max_width) + ")");
  Draw draw(seed);

  // Leading variable, then a random interleaving of the rest.
  std::vector<char> kinds(static_cast<std::size_t>(n - 1), 'x');
  kinds.insert(kinds.end(), static_cast<std::size_t>(m), 'c');
  draw.shuffle(kinds);
  kinds.insert(kinds.begin(), 'x');

  MixedOrdering order;
  std::vector<VarId> vars_so_far;
  std::vector<ClauseId> clauses_so_far;
  std::vector<std::vector<VarId>> members(static_cast<std::size_t>(m));
  for (char kind : kinds) {
    if (kind == 'x') {
      const VarId x = static_cast<VarId>(vars_so_far.size()) + 1;
      // x joins a contiguous run of the latest clauses, stopping at a full one.
      const int run = draw.between(0, max_width);
      for (int r = 0; r < run && r < static_cast<int>(clauses_so_far.size()); ++r) {
        auto& mem = members[static_cast<std::size_t>(clauses_so_far[clauses_so_far.size() - 1 - static_cast<std::size_t>(r)] - 1)];
        if (static_cast<int>(mem.size()) >= max_width) break;
        mem.push_back(x);
      }
      vars_so_far.push_back(x);
      order.sequence.push_back(Element::var(x));
    } else {
      const ClauseId c = static_cast<ClauseId>(clauses_so_far.size()) + 1;
      const int run = draw.between(1, std::min(max_width, static_cast<int>(vars_so_far.size())));
      auto& mem = members[static_cast<std::size_t>(c - 1)];
      for (int r = 0; r < run; ++r) mem.push_back(vars_so_far[vars_so_far.size() - 1 - static_cast<std::size_t>(r)]);
      clauses_so_far.push_back(c);
      order.sequence.push_back(Element::clause(c));
    }
  }

  std::vector<std::vector<int>> lits;
  for (auto& mem : members) {
    const int drop = draw.between(0, std::min(k, static_cast<int>(mem.size()) - 1));
    for (int d = 0; d < drop; ++d) mem.erase(mem.begin() + draw.between(0, static_cast<int>(mem.size()) - 1));
    std::vector<int> clause;
    for (VarId v : mem) clause.push_back(draw.coin() ? v : -v);
    lits.push_back(std::move(clause));
  }
  return RandomInstance{build_formula(n, lits), std::move(order)};
}

}  // namespace kint
