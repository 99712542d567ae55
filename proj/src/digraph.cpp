#include "dichromate/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace dichromate {

Digraph::Digraph(std::size_t vertices, std::vector<Arc> arc_list)
    : vertex_count(vertices), arcs(std::move(arc_list)) {
  for (const auto& a : arcs)
    if (a.tail >= vertex_count || a.head >= vertex_count)
      throw DimensionError("arc endpoint out of range");
}

bool Digraph::has_self_loop() const {
  return std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.tail == a.head; });
}

// ------------------------------------------------------------------- parsing

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected a nonnegative integer, got '" + std::string(t.text) + "'", line, t.column);
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  Digraph d;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    if (!have_header) {
      if (tokens[0].text != "digraph")
        throw ParseError("expected header 'digraph <vertexCount>'", line_no, tokens[0].column);
      if (tokens.size() != 2) throw ParseError("header takes exactly one vertex count", line_no, tokens[0].column);
      d.vertex_count = parse_count(tokens[1], line_no);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected '<tail> <head>'", line_no, tokens[0].column);
    const std::size_t tail = parse_count(tokens[0], line_no);
    const std::size_t head = parse_count(tokens[1], line_no);
    if (tail >= d.vertex_count) throw ParseError("vertex id out of range", line_no, tokens[0].column);
    if (head >= d.vertex_count) throw ParseError("vertex id out of range", line_no, tokens[1].column);
    d.arcs.push_back({tail, head});
  }
  if (!have_header) throw ParseError("missing 'digraph <vertexCount>' header", line_no, 1);
  return d;
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream os;
  os << "digraph " << d.vertex_count << '\n';
  for (const auto& a : d.arcs) os << a.tail << ' ' << a.head << '\n';
  return os.str();
}

// ------------------------------------------------------------------ matroid

RatMatrix incidence_matrix(const Digraph& d) {
  RatMatrix m(d.vertex_count, d.arc_count());
  for (std::size_t j = 0; j < d.arc_count(); ++j) {
    m(d.arcs[j].tail, j) += 1;
    m(d.arcs[j].head, j) -= 1;
  }
  return m;
}

RealizedOM matroid_from_digraph(const Digraph& d) { return realize(incidence_matrix(d)); }

// ---------------------------------------------------------- totally cyclic

namespace {

// reach[v] = vertices reachable from v using the arcs in `arcs`.
std::vector<std::uint64_t> reachability(const Digraph& d, Mask arcs) {
  const std::size_t n = d.vertex_count;
  std::vector<std::uint64_t> reach(n);
  for (std::size_t v = 0; v < n; ++v) reach[v] = std::uint64_t{1} << v;
  for (auto j : elements_of(arcs)) reach[d.arcs[j].tail] |= std::uint64_t{1} << d.arcs[j].head;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t v = 0; v < n; ++v)
      if ((reach[v] >> k) & 1U) reach[v] |= reach[k];
  return reach;
}

}  // namespace

bool is_totally_cyclic(const Digraph& d, Mask arcs) {
  if (d.vertex_count > 64) throw ResourceError("digraphs above 64 vertices are not supported");
  const auto reach = reachability(d, arcs);
  for (auto j : elements_of(arcs)) {
    const auto& a = d.arcs[j];
    if (!((reach[a.head] >> a.tail) & 1U)) return false;
  }
  return true;
}

TotallyCyclicPoset totally_cyclic_poset(const Digraph& d, std::size_t cap) {
  const std::size_t m = d.arc_count();
  if (m > cap || m > 30)
    throw ResourceError("digraph has " + std::to_string(m) + " arcs, above the enumeration cap of " +
                        std::to_string(std::min<std::size_t>(cap, 30)));
  TotallyCyclicPoset q;
  for (Mask b = 0; b < (Mask{1} << m); ++b)
    if (is_totally_cyclic(d, b)) q.members.push_back(b);
  std::stable_sort(q.members.begin(), q.members.end(),
                   [](Mask x, Mask y) { return popcount(x) < popcount(y); });
  q.mobius = mobius_from_bottom(q.members);
  return q;
}

TriPoly nl_coflow_graphic(const Digraph& d, std::size_t cap) {
  const TotallyCyclicPoset q = totally_cyclic_poset(d, cap);
  const RatMatrix inc = incidence_matrix(d);
  const std::size_t total = rank_rat(inc);
  TriPoly psi;
  for (std::size_t i = 0; i < q.members.size(); ++i) {
    const std::size_t rb = rank_rat(inc.select_columns(elements_of(q.members[i])));
    psi.add_term({static_cast<unsigned>(total - rb), 0, 0}, q.mobius[i]);
  }
  return psi;
}

// ---------------------------------------------------------------- colorings

namespace {

// True if the vertices in `cls` span a directed cycle (self-loops included).
bool has_cycle_within(const std::vector<std::vector<std::size_t>>& out, std::uint64_t cls) {
  // Repeatedly strip vertices with no out-arc inside the class.
  bool changed = true;
  while (changed && cls) {
    changed = false;
    for (std::uint64_t rest = cls; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      bool sink = true;
      for (auto w : out[v])
        if ((cls >> w) & 1U) {
          sink = false;
          break;
        }
      if (sink) {
        cls &= ~(std::uint64_t{1} << v);
        changed = true;
      }
    }
  }
  return cls != 0;
}

}  // namespace

BigInt count_acyclic_colorings(const Digraph& d, unsigned k, std::uint64_t budget) {
  const std::size_t n = d.vertex_count;
  if (k == 0) throw std::invalid_argument("number of colors must be positive");
  if (n > 64) throw ResourceError("digraphs above 64 vertices are not supported");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / k) throw ResourceError("k^|V| exceeds the coloring budget");
    total *= k;
  }
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : d.arcs) out[a.tail].push_back(a.head);

  std::vector<unsigned> color(n, 0);
  std::uint64_t count = 0;
  std::vector<std::uint64_t> classes(k);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::fill(classes.begin(), classes.end(), 0);
    for (std::size_t v = 0; v < n; ++v) classes[color[v]] |= std::uint64_t{1} << v;
    bool ok = true;
    for (unsigned c = 0; c < k && ok; ++c) ok = !has_cycle_within(out, classes[c]);
    if (ok) ++count;
    // Next coloring, odometer style.
    for (std::size_t v = 0; v < n; ++v) {
      if (++color[v] < k) break;
      color[v] = 0;
    }
  }
  BigInt result;
  mpz_set_ui(result.get_mpz_t(), count);
  return result;
}

}  // namespace dichromate
