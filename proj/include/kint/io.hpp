#pragma once

// Text formats: DIMACS cnf/wcnf, side orders, mixed orderings, labelled
// bigraph edge lists and interval representations. Input may use LF or CRLF;
// output always uses LF.

#include <string>
#include <string_view>

#include "kint/formula.hpp"
#include "kint/hardness.hpp"

namespace kint {

// `p cnf n m` or `p wcnf n m` (every clause prefixed by a positive weight).
// Hard-clause "top" headers are not supported.
Formula parse_dimacs(std::string_view text);
// Emits wcnf when any weight differs from 1.
std::string emit_dimacs(const Formula& f);

// Two lines, `v <perm of 1..n>` and `c <perm of 1..m>`, in either order.
SideOrders parse_orders(std::string_view text, const Formula& f);
std::string emit_orders(const SideOrders& orders);

// Whitespace-separated tokens x<i> and c<j>.
MixedOrdering parse_mixed_ordering(std::string_view text, const Formula& f);
std::string emit_mixed_ordering(const MixedOrdering& order);

// `p bigraph <V> <E>`, then `v <name> <side>` lines, then `e <u> <v>` lines.
std::string emit_labeled_bigraph(const LabeledBigraph& g);
LabeledBigraph parse_labeled_bigraph(std::string_view text);

// Lines `<vertex> <lo> <hi>`; endpoints are integers or fractions p/q.
std::string emit_representation(const IntervalRep& rep);
IntervalRep parse_representation(std::string_view text);

}  // namespace kint
