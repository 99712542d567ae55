#pragma once

// Oriented matroids given by a realization: chirotope, signed cocircuits and
// the nonnegative part of the covector lattice with its Moebius function.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dichromate/exact_arith.hpp"
#include "dichromate/subsets.hpp"

namespace dichromate {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t size) : signs_(size, Sign::Zero) {}
  explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  // All-plus on the given support.
  static SignVector positive(std::size_t size, Mask support);
  // Parses "+0-" style strings.
  static SignVector parse(const std::string& text);

  std::size_t size() const { return signs_.size(); }
  Sign operator[](std::size_t e) const { return signs_[e]; }
  void set(std::size_t e, Sign s) { signs_[e] = s; }

  Mask support() const;
  Mask positive_part() const;
  Mask negative_part() const;
  bool is_zero() const { return support() == 0; }
  bool is_nonnegative() const { return negative_part() == 0; }

  SignVector operator-() const;
  bool operator==(const SignVector&) const = default;
  auto operator<=>(const SignVector&) const = default;

  std::string to_string() const;

 private:
  std::vector<Sign> signs_;
};

// (X o Y)_e = X_e if X_e != 0, else Y_e. Throws DimensionError on size mismatch.
SignVector compose(const SignVector& x, const SignVector& y);

/// Alternating sign map on ordered r-tuples of a ground set of size n, stored
/// on sorted r-subsets. Normalized so the lexicographically first basis is +1.
class Chirotope {
 public:
  // signs is indexed by subset_rank of the r-subset.
  Chirotope(std::size_t ground_size, std::size_t rank, std::vector<std::int8_t> signs);

  std::size_t ground_size() const { return n_; }
  std::size_t rank() const { return r_; }

  // Sign of an ordered tuple; 0 if an element repeats.
  int sign_of(std::span<const std::size_t> tuple) const;
  // Sign of the r-subset listed in increasing order.
  int sign_of_set(Mask subset) const;

  std::vector<Mask> bases() const;
  Mask first_basis() const;

  // True if the chirotopes agree or are negatives of each other.
  bool equal_up_to_sign(const Chirotope& other) const;
  bool operator==(const Chirotope&) const = default;

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<std::int8_t> signs_;
};

/// Full-row-rank realization over Q[eps] plus its chirotope.
class RealizedOM {
 public:
  // Computes the chirotope from the matrix, which must have full row rank.
  explicit RealizedOM(EpsMatrix matrix, std::vector<std::size_t> labels = {});
  // Uses a chirotope the caller computed from the same matrix.
  RealizedOM(EpsMatrix matrix, Chirotope chirotope, std::vector<std::size_t> labels = {});

  std::size_t size() const { return matrix_.cols(); }
  std::size_t rank() const { return chirotope_.rank(); }
  const EpsMatrix& matrix() const { return matrix_; }
  const Chirotope& chirotope() const { return chirotope_; }
  // Original 1-based label of each ground element.
  const std::vector<std::size_t>& labels() const { return labels_; }
  Mask ground() const { return full_mask(size()); }

  // Matroid rank of a subset of columns.
  std::size_t rank_of(Mask subset) const;

 private:
  EpsMatrix matrix_;
  Chirotope chirotope_;
  std::vector<std::size_t> labels_;
  std::vector<Mask> bases_;
};

// Throws NotARealizationError if m does not have full row rank.
Chirotope chirotope_from_matrix(const EpsMatrix& m);

// Row-reduces an arbitrary rational matrix to a full-row-rank realization of
// the same oriented matroid.
RealizedOM realize(const RatMatrix& m, std::vector<std::size_t> labels = {});

// The rational matrix of om, or ContractViolation if it carries eps terms.
RatMatrix rational_matrix(const RealizedOM& om);

bool is_standard_form(const RealizedOM& om);

// Reorders and row-reduces om to (I_r | C) with the given 0-based basis first
// (lexicographically smallest basis if none). Labels follow the permutation.
RealizedOM standardize(const RealizedOM& om,
                       const std::optional<std::vector<std::size_t>>& basis = std::nullopt);

// The dual realized by (-C^T | I_{n-r}) on the same labels.
RealizedOM dual_realization(const RealizedOM& om);

// Both members of every signed cocircuit pair, sorted.
std::vector<SignVector> cocircuits(const RealizedOM& om);

// Supports of the nonnegative cocircuits.
std::vector<Mask> nonnegative_cocircuits(const RealizedOM& om);

// mu(bottom, X) for every element of a poset ordered by inclusion of masks,
// aligned with the input. Throws InvalidPosetError unless exactly one minimal
// element exists.
std::vector<BigInt> mobius_from_bottom(std::span<const Mask> elements);

struct Face {
  SignVector covector;
  Mask support = 0;
  std::size_t rank = 0;
  BigInt mobius;
};

/// Nonnegative covectors ordered by support inclusion, sorted by
/// (support size, support). The zero vector comes first.
class FaceLattice {
 public:
  FaceLattice(std::size_t ground_size, std::vector<Face> faces);

  std::size_t ground_size() const { return n_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  const Face* find(Mask support) const;
  bool contains(Mask support) const { return find(support) != nullptr; }

 private:
  std::size_t n_;
  std::vector<Face> faces_;
};

// Union closure of the given supports plus the empty set.
std::vector<Mask> union_closure(const std::vector<Mask>& generators);

FaceLattice nonneg_face_lattice(const RealizedOM& om);

}  // namespace dichromate
