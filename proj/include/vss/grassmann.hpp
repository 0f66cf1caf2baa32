#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vss/error.hpp"
#include "vss/scalar.hpp"

namespace vss {

using Rank = unsigned;

// Generators are stored as bits of a 64-bit word, so ranks are capped.
inline constexpr Rank kMaxRank = 63;

// A set of generator indices {i1 < i2 < ...}, 1-based, standing for the
// ordered product xi_i1 * xi_i2 * ... . Bit (i - 1) is set iff i is present.
class Monomial {
 public:
  constexpr Monomial() = default;
  static constexpr Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }
  // Indices must be distinct and in 1..kMaxRank; their order is irrelevant.
  static Monomial from_indices(std::span<const unsigned> indices);
  static Monomial generator(unsigned index);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_odd() const { return (size() & 1U) != 0; }
  constexpr bool contains(unsigned index) const {
    return index >= 1 && index <= 64 && ((bits_ >> (index - 1)) & 1U) != 0;
  }
  // Largest index present, 0 for the empty monomial.
  constexpr unsigned max_index() const {
    return bits_ == 0 ? 0 : 64U - static_cast<unsigned>(std::countl_zero(bits_));
  }
  std::vector<unsigned> indices() const;

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

 private:
  constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Canonical total order: by cardinality, then lexicographically on the
// ascending index lists.
struct MonomialOrder {
  constexpr bool operator()(Monomial a, Monomial b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // The lowest differing index belongs to the lexicographically smaller set.
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

// Sign of xi^a * xi^b relative to xi^(a u b): 0 when the sets overlap,
// otherwise (-1)^#{(i, j) in a x b : i > j}.
constexpr int product_sign(std::uint64_t a, std::uint64_t b) {
  if ((a & b) != 0) return 0;
  unsigned inversions = 0;
  while (b != 0) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(b));
    b &= b - 1;
    inversions += static_cast<unsigned>(std::popcount(j >= 63 ? 0 : (a >> (j + 1))));
  }
  return (inversions & 1U) ? -1 : 1;
}
constexpr int product_sign(Monomial a, Monomial b) { return product_sign(a.bits(), b.bits()); }

enum class Parity { Even, Odd, Mixed };

std::string_view parity_name(Parity p);

using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

// An element of the Grassmann algebra of rank q: a finite sum of
// coefficient * monomial with no zero coefficients stored.
class GrassmannElement {
 public:
  GrassmannElement() = default;
  explicit GrassmannElement(Rank rank);

  static GrassmannElement constant(Rank rank, const Scalar& value);
  static GrassmannElement generator(Rank rank, unsigned index);
  static GrassmannElement term(Rank rank, Monomial monomial, const Scalar& coeff);

  Rank rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(Monomial m) const;
  // Largest generator index with a nonzero coefficient anywhere, 0 if none.
  unsigned max_index() const;

  // Adds coeff * monomial in place; the monomial must fit the rank.
  void add_term(Monomial m, const Scalar& coeff);

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(const Scalar& s);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator-(GrassmannElement a) { return a *= Scalar(-1); }
  friend GrassmannElement operator*(const Scalar& s, GrassmannElement a) { return a *= s; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  Rank rank_ = 0;
  TermMap terms_;
};

struct RawTerm {
  std::vector<unsigned> indices;
  Scalar coeff;
};

// Builds a canonical element from unsorted index lists: repeated indices
// give zero, sorting contributes the permutation sign, like terms merge.
// Takes a signed rank so that negative input can be reported.
GrassmannElement normalize(long rank, std::span<const RawTerm> raw_terms);

GrassmannElement lin_comb(std::span<const std::pair<Scalar, GrassmannElement>> pairs);

GrassmannElement mul(const GrassmannElement& a, const GrassmannElement& b);

// Coefficient of the empty monomial.
Scalar body(const GrassmannElement& a);

struct ParityParts {
  GrassmannElement even;
  GrassmannElement odd;
  Parity parity;
};

ParityParts parity_decompose(const GrassmannElement& a);
Parity parity(const GrassmannElement& a);
bool is_homogeneous(const GrassmannElement& a);

// Largest k with a in I_k; std::nullopt stands for infinity (a == 0).
std::optional<unsigned> filtration_level(const GrassmannElement& a);

// Two-sided inverse via the finite geometric series in the nilpotent part.
GrassmannElement invert(const GrassmannElement& a);

enum class RankChange { Include, Project };

GrassmannElement change_rank(const GrassmannElement& a, Rank target, RankChange mode);

// Canonical text: terms in monomial order, generators named prefix + index
// (the rank-1 target of odd-line maps is printed with "zeta").
std::string to_string(const GrassmannElement& a, std::string_view generator = "xi");

}  // namespace vss
