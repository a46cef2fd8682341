#include "kint/ps_solver.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace kint {

namespace {

// Fixed-width set of clause ids (bit c-1).
class ClauseBits {
 public:
  ClauseBits() = default;
  explicit ClauseBits(std::size_t m) : words_((m + 63) / 64, 0) {}

  bool test(ClauseId c) const { return (words_[word(c)] >> bit(c)) & 1U; }
  void set(ClauseId c) { words_[word(c)] |= std::uint64_t{1} << bit(c); }
  void reset(ClauseId c) { words_[word(c)] &= ~(std::uint64_t{1} << bit(c)); }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::vector<ClauseId> ids() const {
    std::vector<ClauseId> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
        out.push_back(static_cast<ClauseId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)) + 1));
    return out;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ClauseBits&, const ClauseBits&) = default;
  friend auto operator<=>(const ClauseBits&, const ClauseBits&) = default;

 private:
  static std::size_t word(ClauseId c) { return static_cast<std::size_t>(c - 1) / 64; }
  static unsigned bit(ClauseId c) { return static_cast<unsigned>(c - 1) % 64; }
  std::vector<std::uint64_t> words_;
};

struct ClauseBitsHash {
  std::size_t operator()(const ClauseBits& b) const { return boost::hash_range(b.words().begin(), b.words().end()); }
};

std::vector<VarId> occurring_vars(const Formula& f) {
  std::vector<VarId> vars;
  for (const auto& c : f.clauses())
    for (const auto& l : c.literals) vars.push_back(l.var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

CutFormulas cut_formulas(const Formula& f, const MixedOrdering& order, int i) {
  validate_ordering(f, order);
  if (i < 0 || static_cast<std::size_t>(i) > order.size())
    throw Error(ErrorCode::CutOutOfRange,
                "cut " + std::to_string(i) + " outside 0.." + std::to_string(order.size()));
  const Positions pos(f, order);
  CutFormulas cut;
  cut.i = i;
  std::vector<Clause> f1, f2;
  for (const auto& e : order.sequence) {
    if (!e.is_clause()) continue;
    const Clause& c = f.clause(e.id);
    const bool prefix_clause = pos.of_clause(c.id) < i;
    Clause r;
    r.weight = c.weight;
    for (const auto& l : c.literals) {
      const bool prefix_var = pos.of_var(l.var) < i;
      if (prefix_var != prefix_clause) r.literals.push_back(l);
    }
    if (prefix_clause) {
      f1.push_back(std::move(r));
      cut.f1_origin.push_back(c.id);
    } else {
      f2.push_back(std::move(r));
      cut.f2_origin.push_back(c.id);
    }
  }
  cut.f1 = Formula(f.var_count(), std::move(f1));
  cut.f2 = Formula(f.var_count(), std::move(f2));
  return cut;
}

std::vector<std::vector<ClauseId>> ps_family(const Formula& fragment, int var_cap) {
  const auto vars = occurring_vars(fragment);
  if (static_cast<int>(vars.size()) > var_cap)
    throw Error(ErrorCode::TooManyVariables, std::to_string(vars.size()) + " variables exceed the cap of " +
                                                 std::to_string(var_cap));
  const auto m = static_cast<std::size_t>(fragment.clause_count());
  // Branch one variable at a time; partial sat-sets that coincide have the same futures.
  std::vector<std::vector<std::pair<ClauseId, bool>>> occ(vars.size());
  for (const auto& c : fragment.clauses())
    for (const auto& l : c.literals) {
      auto idx = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), l.var) - vars.begin());
      occ[idx].emplace_back(c.id, l.negated);
    }
  std::set<ClauseBits> layer{ClauseBits(m)};
  for (const auto& occurrences : occ) {
    std::set<ClauseBits> next;
    for (const auto& s : layer)
      for (bool value : {false, true}) {
        ClauseBits t = s;
        for (auto [cid, negated] : occurrences)
          if (value != negated) t.set(cid);
        next.insert(std::move(t));
      }
    layer = std::move(next);
  }
  std::vector<std::vector<ClauseId>> family;
  family.reserve(layer.size());
  for (const auto& s : layer) family.push_back(s.ids());
  std::sort(family.begin(), family.end());
  return family;
}

std::uint64_t ps_value(const Formula& fragment, int var_cap) {
  return ps_family(fragment, var_cap).size();
}

std::uint64_t ps_width(const Formula& f, const MixedOrdering& order, int var_cap) {
  validate_ordering(f, order);
  std::uint64_t width = 1;
  for (int i = 1; i <= static_cast<int>(order.size()); ++i) {
    auto cut = cut_formulas(f, order, i);
    width = std::max({width, ps_value(cut.f1, var_cap), ps_value(cut.f2, var_cap)});
  }
  return width;
}

namespace {

// DP state: U = arrived clauses still waiting for a suffix literal,
// S = clauses not yet arrived that a prefix literal already satisfies.
struct StateKey {
  ClauseBits open;
  ClauseBits presat;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = ClauseBitsHash{}(k.open);
    boost::hash_combine(h, ClauseBitsHash{}(k.presat));
    return h;
  }
};

struct CountAgg {
  BigInt count;
};

struct MaxAgg {
  Weight weight = 0;
  int parent = -1;      // index into the previous layer
  signed char value = -1;  // branch taken at a variable step
};

template <class Agg>
struct Layer {
  std::vector<StateKey> keys;
  std::vector<Agg> aggs;
  std::unordered_map<StateKey, std::size_t, StateKeyHash> index;

  void add(StateKey key, Agg agg) {
    auto [it, inserted] = index.try_emplace(key, keys.size());
    if (inserted) {
      keys.push_back(std::move(key));
      aggs.push_back(std::move(agg));
      return;
    }
    Agg& cur = aggs[it->second];
    if constexpr (std::is_same_v<Agg, CountAgg>) {
      cur.count += agg.count;
    } else if (agg.weight > cur.weight) {
      cur = agg;
    }
  }
};

struct SweepPlan {
  Positions pos;
  std::vector<int> last_var_pos;  // index c-1; -1 when the clause has no variables
  std::vector<std::vector<std::pair<ClauseId, bool>>> occurrences;  // index v-1: (clause, negated)

  SweepPlan(const Formula& f, const MixedOrdering& order) : pos(f, order) {
    last_var_pos.assign(static_cast<std::size_t>(f.clause_count()), -1);
    occurrences.resize(static_cast<std::size_t>(f.var_count()));
    for (const auto& c : f.clauses())
      for (const auto& l : c.literals) {
        auto& lp = last_var_pos[static_cast<std::size_t>(c.id - 1)];
        lp = std::max(lp, pos.of_var(l.var));
        occurrences[static_cast<std::size_t>(l.var - 1)].emplace_back(c.id, l.negated);
      }
  }
};

template <class Agg>
void record_cut(const Layer<Agg>& layer, const SolveOptions& opts, SolveStats& stats) {
  stats.states_per_cut.push_back(layer.keys.size());
  stats.max_states = std::max(stats.max_states, layer.keys.size());
  std::set<ClauseBits> distinct;
  for (const auto& k : layer.keys) distinct.insert(k.presat);
  stats.distinct_s_per_cut.push_back(distinct.size());
  if (opts.record_s_sets) {
    std::vector<std::vector<ClauseId>> sets;
    for (const auto& s : distinct) sets.push_back(s.ids());
    stats.s_sets_per_cut.push_back(std::move(sets));
  }
}

template <class Agg>
std::vector<Layer<Agg>> sweep(const Formula& f, const MixedOrdering& order, const SolveOptions& opts,
                              SolveStats& stats) {
  constexpr bool kMaxSat = std::is_same_v<Agg, MaxAgg>;
  const SweepPlan plan(f, order);
  const auto m = static_cast<std::size_t>(f.clause_count());

  std::vector<Layer<Agg>> layers;
  Layer<Agg> start;
  if constexpr (kMaxSat) {
    start.add(StateKey{ClauseBits(m), ClauseBits(m)}, MaxAgg{});
  } else {
    start.add(StateKey{ClauseBits(m), ClauseBits(m)}, CountAgg{BigInt(1)});
  }
  record_cut(start, opts, stats);
  layers.push_back(std::move(start));

  for (std::size_t step = 0; step < order.size(); ++step) {
    const Element e = order.sequence[step];
    const Layer<Agg>& cur = layers.back();
    Layer<Agg> next;
    next.keys.reserve(cur.keys.size() * (e.is_var() ? 2 : 1));

    if (e.is_clause()) {
      const ClauseId c = e.id;
      const Weight w = f.clause(c).weight;
      const bool no_suffix_vars = plan.last_var_pos[static_cast<std::size_t>(c - 1)] < static_cast<int>(step);
      for (std::size_t s = 0; s < cur.keys.size(); ++s) {
        StateKey key = cur.keys[s];
        Agg agg = cur.aggs[s];
        if (key.presat.test(c)) {
          key.presat.reset(c);
          if constexpr (kMaxSat) agg.weight += w;
        } else if (no_suffix_vars) {
          if constexpr (!kMaxSat) continue;  // clause falsified
        } else {
          key.open.set(c);
        }
        if constexpr (kMaxSat) {
          agg.parent = static_cast<int>(s);
          agg.value = -1;
        }
        next.add(std::move(key), std::move(agg));
      }
    } else {
      const VarId x = e.id;
      const int here = static_cast<int>(step);
      const auto& occ = plan.occurrences[static_cast<std::size_t>(x - 1)];
      for (std::size_t s = 0; s < cur.keys.size(); ++s) {
        for (bool value : {false, true}) {
          StateKey key = cur.keys[s];
          Agg agg = cur.aggs[s];
          bool falsified = false;
          for (auto [c, negated] : occ) {
            const bool sat = value != negated;
            if (plan.pos.of_clause(c) < here) {
              if (!key.open.test(c)) continue;  // already decided
              if (sat) {
                key.open.reset(c);
                if constexpr (kMaxSat) agg.weight += f.clause(c).weight;
              } else if (plan.last_var_pos[static_cast<std::size_t>(c - 1)] == here) {
                key.open.reset(c);
                falsified = true;
              }
            } else if (sat) {
              key.presat.set(c);
            }
          }
          if constexpr (!kMaxSat) {
            if (falsified) continue;
          } else {
            agg.parent = static_cast<int>(s);
            agg.value = value ? 1 : 0;
          }
          next.add(std::move(key), std::move(agg));
        }
      }
    }
    record_cut(next, opts, stats);
    if constexpr (!kMaxSat) layers.clear();  // counting needs no history
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

CountResult count_models(const Formula& f, const MixedOrdering& order, const SolveOptions& opts) {
  validate_ordering(f, order);
  CountResult result;
  if (f.has_empty_clause()) {
    result.count = 0;
    return result;
  }
  auto layers = sweep<CountAgg>(f, order, opts, result.stats);
  for (const auto& agg : layers.back().aggs) result.count += agg.count;
  return result;
}

MaxSatResult max_weight(const Formula& f, const MixedOrdering& order, const SolveOptions& opts) {
  validate_ordering(f, order);
  MaxSatResult result;
  auto layers = sweep<MaxAgg>(f, order, opts, result.stats);
  const auto& last = layers.back();
  std::size_t best = 0;
  for (std::size_t s = 1; s < last.aggs.size(); ++s)
    if (last.aggs[s].weight > last.aggs[best].weight) best = s;
  result.weight = last.aggs.empty() ? 0 : last.aggs[best].weight;

  result.witness = Assignment(f.var_count());
  int idx = static_cast<int>(best);
  for (std::size_t step = order.size(); step > 0; --step) {
    const MaxAgg& agg = layers[step].aggs[static_cast<std::size_t>(idx)];
    const Element e = order.sequence[step - 1];
    if (e.is_var()) result.witness.set(e.id, agg.value == 1);
    idx = agg.parent;
  }
  return result;
}

}  // namespace kint
