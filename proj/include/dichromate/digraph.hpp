#pragma once

// Digraphs, their graphic oriented matroids, the totally cyclic poset
// oracle for the NL-coflow polynomial, and a brute-force counter of acyclic
// colorings.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "dichromate/om_core.hpp"
#include "dichromate/tri_poly.hpp"

namespace dichromate {

struct Arc {
  std::size_t tail;
  std::size_t head;
  bool operator==(const Arc&) const = default;
};

/// Multi-arcs and self-loops are allowed; arc order fixes the column order of
/// the incidence matrix.
struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;

  Digraph() = default;
  Digraph(std::size_t vertices, std::vector<Arc> arc_list);
  std::size_t arc_count() const { return arcs.size(); }
  bool has_self_loop() const;
};

inline constexpr std::size_t kDefaultEnumerationCap = 16;
inline constexpr std::uint64_t kDefaultColoringBudget = std::uint64_t{1} << 24;

// Text format: "digraph <n>" then one "<tail> <head>" line per arc, 0-based.
// Blank lines and lines starting with '#' are skipped. Throws ParseError.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& d);

// Tail +1, head -1; a self-loop gives a zero column.
RatMatrix incidence_matrix(const Digraph& d);

// Every arc of D[B] lies on a directed cycle of D[B].
bool is_totally_cyclic(const Digraph& d, Mask arcs);

struct TotallyCyclicPoset {
  std::vector<Mask> members;  // sorted by (size, mask); the empty set first
  std::vector<BigInt> mobius;  // mu(empty, member), aligned with members
};

TotallyCyclicPoset totally_cyclic_poset(const Digraph& d, std::size_t cap = kDefaultEnumerationCap);

// psi via the totally cyclic poset, with rk(A / B) = rk(A) - rk(B) read off
// incidence submatrices. Independent of the oriented-matroid pipeline.
TriPoly nl_coflow_graphic(const Digraph& d, std::size_t cap = kDefaultEnumerationCap);

// Number of maps V -> {1..k} in which no color class spans a directed cycle.
BigInt count_acyclic_colorings(const Digraph& d, unsigned k,
                               std::uint64_t budget = kDefaultColoringBudget);

RealizedOM matroid_from_digraph(const Digraph& d);

}  // namespace dichromate
