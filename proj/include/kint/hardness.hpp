#pragma once

// Instances for the 3-Partition reduction to 1-interval bigraph recognition,
// interval representations and their checker, and a seeded factory for random
// k-interval formulas.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "kint/formula.hpp"

namespace kint {

struct ThreePartitionInstance {
  int b = 0;
  std::vector<int> sizes;  // 3n element sizes, element a is sizes[a-1]

  int groups() const { return static_cast<int>(sizes.size()) / 3; }
};

// Throws InvalidInstance unless b >= 4, |sizes| = 3n > 0, b/4 < s < b/2 and sum = n*b.
void validate(const ThreePartitionInstance& inst);

enum class Role {
  Slot,         // s_{i,j}
  Delimiter,    // s^d_i
  Track,        // t
  AnchorLeft,   // a^l
  AnchorRight,  // a^r
  Ell,          // l_{i,j}
  EllD1,        // l^{d,1}_i
  EllD2,        // l^{d,2}_i
  EllAnchorL,   // l^{a,l}
  EllAnchorR,   // l^{a,r}
  Numeral,      // n_{a,j}
  EllNumeral,   // l^n_{a,j}
  Clause,       // incidence bigraph of a formula
  Variable,
};

struct Vertex {
  std::string name;
  Role role = Role::Slot;
  int side = 1;  // 1 or 2
};

struct LabeledBigraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // vertex indices, side-1 vertex first
  int designated_side = 2;                 // side that receives added edges

  int index_of(const std::string& name) const;
  int add_vertex(std::string name, Role role, int side);
  void add_edge(const std::string& u, const std::string& v);
  std::size_t degree(const std::string& name) const;

 private:
  std::map<std::string, int> by_name_;
};

// Clauses become the designated side.
LabeledBigraph labeled_incidence(const Formula& f);

LabeledBigraph gen_3partition_bigraph(const ThreePartitionInstance& inst);

// Closed forms for the generated graph.
std::size_t expected_vertex_count(const ThreePartitionInstance& inst);
std::size_t expected_edge_count(const ThreePartitionInstance& inst);

using Coord = boost::rational<std::int64_t>;

struct Interval {
  Coord lo;
  Coord hi;
};

// Strict overlap: intervals sharing only an endpoint do not overlap.
inline bool overlaps(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

struct IntervalRep {
  std::map<std::string, Interval> intervals;
};

// partition: n triples of 1-based element indices, each summing to b.
IntervalRep representation_from_partition(const ThreePartitionInstance& inst,
                                          const std::vector<std::vector<int>>& partition);

struct VertexExcess {
  std::string vertex;
  std::vector<std::string> overlapped_non_neighbours;
};

struct RepresentationVerdict {
  bool accept = true;
  std::vector<std::pair<std::string, std::string>> edges_without_overlap;
  std::vector<VertexExcess> excess;  // designated-side vertices with any overlapped non-neighbour
  std::size_t max_excess = 0;
};

// Accepts iff every edge joins overlapping intervals and no designated-side
// vertex overlaps more than k opposite-side non-neighbours.
RepresentationVerdict check_representation(const LabeledBigraph& g, const IntervalRep& rep, int k);

struct RandomInstance {
  Formula formula;
  MixedOrdering ordering;
};

// Builds an interval formula whose every vertex has its earlier neighbours in
// one contiguous run ending at it, then drops up to k variables from each
// clause (keeping at least one). The ordering has width at most k.
RandomInstance random_k_interval_instance(int n, int m, int k, int max_width, std::uint64_t seed);

}  // namespace kint
