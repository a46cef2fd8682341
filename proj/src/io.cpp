#include "kint/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace kint {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f' || ch == '\v'; };
  while (i < s.size()) {
    while (i < s.size() && space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool to_int(std::string_view tok, Int& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::string quote_tok(std::string_view tok) { return "'" + std::string(tok) + "'"; }

}  // namespace

Formula parse_dimacs(std::string_view text) {
  bool have_header = false;
  bool weighted = false;
  int n = 0;
  long long m = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<Weight> weights;
  std::vector<int> current;
  bool expecting_weight = true;

  for (auto line : split_lines(text)) {
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == 'c') continue;
    if (toks.front() == "p") {
      if (have_header) throw Error(ErrorCode::MalformedHeader, "second problem line");
      if (toks.size() != 4 || (toks[1] != "cnf" && toks[1] != "wcnf") || !to_int(toks[2], n) ||
          !to_int(toks[3], m) || n < 0 || m < 0)
        throw Error(ErrorCode::MalformedHeader, "expected 'p cnf <n> <m>' or 'p wcnf <n> <m>', got '" +
                                                    std::string(line) + "'");
      have_header = true;
      weighted = toks[1] == "wcnf";
      continue;
    }
    if (!have_header) throw Error(ErrorCode::MalformedHeader, "clause data before the problem line");
    for (auto tok : toks) {
      if (static_cast<long long>(clauses.size()) == m)
        throw Error(ErrorCode::TrailingGarbage, "token " + quote_tok(tok) + " after the last clause");
      if (weighted && expecting_weight) {
        long long w = 0;
        if (!to_int(tok, w)) throw Error(ErrorCode::UnknownToken, "weight " + quote_tok(tok));
        if (w <= 0) throw Error(ErrorCode::ZeroWeight, "clause " + std::to_string(clauses.size() + 1));
        weights.push_back(static_cast<Weight>(w));
        expecting_weight = false;
        continue;
      }
      int lit = 0;
      if (!to_int(tok, lit)) throw Error(ErrorCode::UnknownToken, "literal " + quote_tok(tok));
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        expecting_weight = true;
        continue;
      }
      if (lit > n || -lit > n)
        throw Error(ErrorCode::LiteralOutOfRange, "literal " + std::to_string(lit) + " with n=" + std::to_string(n));
      current.push_back(lit);
    }
  }
  if (!have_header) throw Error(ErrorCode::MalformedHeader, "missing problem line");
  if (!current.empty() || (weighted && !expecting_weight))
    throw Error(ErrorCode::ClauseCountMismatch, "last clause is not terminated by 0");
  if (static_cast<long long>(clauses.size()) != m)
    throw Error(ErrorCode::ClauseCountMismatch,
                "header announces " + std::to_string(m) + " clauses, found " + std::to_string(clauses.size()));
  if (weighted) return build_formula(n, clauses, weights);
  return build_formula(n, clauses);
}

std::string emit_dimacs(const Formula& f) {
  const bool weighted = f.weighted();
  std::ostringstream out;
  out << "p " << (weighted ? "wcnf " : "cnf ") << f.var_count() << ' ' << f.clause_count() << '\n';
  for (const auto& c : f.clauses()) {
    if (weighted) out << c.weight << ' ';
    for (const auto& l : c.literals) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

SideOrders parse_orders(std::string_view text, const Formula& f) {
  SideOrders so;
  bool have_v = false, have_c = false;
  for (auto line : split_lines(text)) {
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    bool is_v = toks.front() == "v";
    if (!is_v && toks.front() != "c") throw Error(ErrorCode::UnknownToken, "order line " + quote_tok(line));
    bool& seen = is_v ? have_v : have_c;
    if (seen) throw Error(ErrorCode::NotAPermutation, std::string("repeated '") + (is_v ? "v" : "c") + "' line");
    seen = true;
    auto& dest = is_v ? so.var_order : so.clause_order;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      int id = 0;
      if (!to_int(toks[i], id)) throw Error(ErrorCode::UnknownToken, "order entry " + quote_tok(toks[i]));
      dest.push_back(id);
    }
  }
  if ((!have_v && f.var_count() > 0) || (!have_c && f.clause_count() > 0))
    throw Error(ErrorCode::MissingLine, !have_v && f.var_count() > 0 ? "no 'v' line" : "no 'c' line");
  validate_side_orders(f, so);
  return so;
}

std::string emit_orders(const SideOrders& orders) {
  std::ostringstream out;
  out << 'v';
  for (VarId v : orders.var_order) out << ' ' << v;
  out << "\nc";
  for (ClauseId c : orders.clause_order) out << ' ' << c;
  out << '\n';
  return out.str();
}

MixedOrdering parse_mixed_ordering(std::string_view text, const Formula& f) {
  MixedOrdering order;
  std::vector<char> seen_var(static_cast<std::size_t>(f.var_count()), 0);
  std::vector<char> seen_clause(static_cast<std::size_t>(f.clause_count()), 0);
  for (auto tok : split_ws(text)) {
    int id = 0;
    const bool is_var = tok.front() == 'x';
    if ((!is_var && tok.front() != 'c') || !to_int(tok.substr(1), id))
      throw Error(ErrorCode::UnknownToken, "ordering token " + quote_tok(tok));
    auto& seen = is_var ? seen_var : seen_clause;
    if (id < 1 || static_cast<std::size_t>(id) > seen.size())
      throw Error(ErrorCode::UnknownToken, "ordering token " + quote_tok(tok) + " is out of range");
    if (seen[static_cast<std::size_t>(id - 1)]) throw Error(ErrorCode::DuplicateElement, quote_tok(tok));
    seen[static_cast<std::size_t>(id - 1)] = 1;
    order.sequence.push_back(is_var ? Element::var(id) : Element::clause(id));
  }
  for (std::size_t i = 0; i < seen_var.size(); ++i)
    if (!seen_var[i]) throw Error(ErrorCode::MissingElement, "x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < seen_clause.size(); ++i)
    if (!seen_clause[i]) throw Error(ErrorCode::MissingElement, "c" + std::to_string(i + 1));
  return order;
}

std::string emit_mixed_ordering(const MixedOrdering& order) {
  std::string out;
  for (const auto& e : order.sequence) {
    if (!out.empty()) out += ' ';
    out += (e.is_var() ? 'x' : 'c');
    out += std::to_string(e.id);
  }
  out += '\n';
  return out;
}

namespace {

constexpr std::pair<Role, std::string_view> kRoleNames[] = {
    {Role::Slot, "slot"},           {Role::Delimiter, "delimiter"},   {Role::Track, "track"},
    {Role::AnchorLeft, "anchorL"},  {Role::AnchorRight, "anchorR"},   {Role::Ell, "ell"},
    {Role::EllD1, "ellD1"},         {Role::EllD2, "ellD2"},           {Role::EllAnchorL, "ellAL"},
    {Role::EllAnchorR, "ellAR"},    {Role::Numeral, "numeral"},       {Role::EllNumeral, "ellN"},
    {Role::Clause, "clause"},       {Role::Variable, "variable"},
};

std::string_view role_name(Role r) {
  for (auto [role, name] : kRoleNames)
    if (role == r) return name;
  return "variable";
}

std::string format_coord(const Coord& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Coord parse_coord(std::string_view tok) {
  auto slash = tok.find('/');
  std::int64_t num = 0, den = 1;
  bool ok = slash == std::string_view::npos ? to_int(tok, num)
                                            : to_int(tok.substr(0, slash), num) && to_int(tok.substr(slash + 1), den);
  if (!ok || den <= 0) throw Error(ErrorCode::UnknownToken, "coordinate " + quote_tok(tok));
  return Coord(num, den);
}

}  // namespace

std::string emit_labeled_bigraph(const LabeledBigraph& g) {
  std::ostringstream out;
  out << "p bigraph " << g.vertices.size() << ' ' << g.edges.size() << '\n';
  for (const auto& v : g.vertices) out << "v " << v.name << ' ' << v.side << ' ' << role_name(v.role) << '\n';
  for (auto [u, v] : g.edges)
    out << "e " << g.vertices[static_cast<std::size_t>(u)].name << ' ' << g.vertices[static_cast<std::size_t>(v)].name
        << '\n';
  return out.str();
}

LabeledBigraph parse_labeled_bigraph(std::string_view text) {
  LabeledBigraph g;
  bool have_header = false;
  std::size_t nv = 0, ne = 0;
  for (auto line : split_lines(text)) {
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "p") {
      if (have_header || toks.size() != 4 || toks[1] != "bigraph" || !to_int(toks[2], nv) || !to_int(toks[3], ne))
        throw Error(ErrorCode::MalformedHeader, "expected 'p bigraph <V> <E>'");
      have_header = true;
    } else if (!have_header) {
      throw Error(ErrorCode::MalformedHeader, "data before 'p bigraph' line");
    } else if (toks[0] == "v" && (toks.size() == 3 || toks.size() == 4)) {
      int side = 0;
      if (!to_int(toks[2], side) || (side != 1 && side != 2))
        throw Error(ErrorCode::UnknownToken, "side " + quote_tok(toks[2]));
      Role role = side == 2 ? Role::Clause : Role::Variable;
      if (toks.size() == 4) {
        bool found = false;
        for (auto [r, name] : kRoleNames)
          if (name == toks[3]) role = r, found = true;
        if (!found) throw Error(ErrorCode::UnknownToken, "role " + quote_tok(toks[3]));
      }
      std::string name(toks[1]);
      if (g.index_of(name) >= 0) throw Error(ErrorCode::DuplicateElement, "vertex " + quote_tok(name));
      g.add_vertex(std::move(name), role, side);
    } else if (toks[0] == "e" && toks.size() == 3) {
      g.add_edge(std::string(toks[1]), std::string(toks[2]));
    } else {
      throw Error(ErrorCode::UnknownToken, "bigraph line " + quote_tok(line));
    }
  }
  if (!have_header) throw Error(ErrorCode::MalformedHeader, "missing 'p bigraph' line");
  if (g.vertices.size() != nv || g.edges.size() != ne)
    throw Error(ErrorCode::ClauseCountMismatch, "vertex or edge count differs from the header");
  return g;
}

std::string emit_representation(const IntervalRep& rep) {
  std::ostringstream out;
  for (const auto& [name, iv] : rep.intervals) out << name << ' ' << format_coord(iv.lo) << ' ' << format_coord(iv.hi) << '\n';
  return out.str();
}

IntervalRep parse_representation(std::string_view text) {
  IntervalRep rep;
  for (auto line : split_lines(text)) {
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3) throw Error(ErrorCode::UnknownToken, "representation line " + quote_tok(line));
    Interval iv{parse_coord(toks[1]), parse_coord(toks[2])};
    if (!(iv.lo < iv.hi)) throw Error(ErrorCode::UnknownToken, "empty interval for " + quote_tok(toks[0]));
    if (!rep.intervals.emplace(std::string(toks[0]), iv).second)
      throw Error(ErrorCode::DuplicateElement, "vertex " + quote_tok(toks[0]));
  }
  return rep;
}

}  // namespace kint
