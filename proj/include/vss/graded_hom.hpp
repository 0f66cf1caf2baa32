#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "vss/grassmann.hpp"
#include "vss/linalg.hpp"

namespace vss {

// A graded unital homomorphism from the Grassmann algebra of rank
// source_rank to the one of rank target_rank, determined by the odd images
// of the free generators.
class GradedHom {
 public:
  Rank source_rank() const { return source_rank_; }
  Rank target_rank() const { return target_rank_; }
  const std::vector<GrassmannElement>& images() const { return images_; }

  friend bool operator==(const GradedHom&, const GradedHom&) = default;

 private:
  friend GradedHom make_hom(Rank, Rank, std::vector<GrassmannElement>);
  Rank source_rank_ = 0;
  Rank target_rank_ = 0;
  std::vector<GrassmannElement> images_;
};

// Throws NotOdd if an image has an even monomial and RankMismatch if the
// image count or an image rank is off.
GradedHom make_hom(Rank source_rank, Rank target_rank, std::vector<GrassmannElement> images);

GradedHom identity_hom(Rank rank);
// The body map onto rank 0 (all images zero).
GradedHom augmentation_hom(Rank rank);
// Scalars into rank q, k -> k * 1.
GradedHom unit_section_hom(Rank rank);

// Substitution xi_i -> images[i], products taken in ascending index order.
GrassmannElement apply_hom(const GradedHom& phi, const GrassmannElement& a);

// g after f.
GradedHom compose_hom(const GradedHom& g, const GradedHom& f);

std::string to_string(const GradedHom& phi);

// ---------------------------------------------------------------------------
// Subalgebras

using ElementVector = SparseEchelon<Monomial, MonomialOrder>::Vector;

// Graded unital subalgebra of a Grassmann algebra, presented by its reduced
// echelon basis over the monomial basis. Even and odd basis vectors live on
// disjoint monomial sets, so the union is itself in reduced echelon form.
class SubalgebraBasis {
 public:
  Rank rank() const { return rank_; }
  const std::vector<GrassmannElement>& even() const { return even_; }
  const std::vector<GrassmannElement>& odd() const { return odd_; }
  // Even basis followed by odd basis.
  std::vector<GrassmannElement> all() const;
  std::size_t dimension() const { return even_.size() + odd_.size(); }
  bool contains(const GrassmannElement& a) const;

 private:
  friend SubalgebraBasis subalgebra_closure(Rank, std::span<const GrassmannElement>);
  Rank rank_ = 0;
  std::vector<GrassmannElement> even_;
  std::vector<GrassmannElement> odd_;
  SparseEchelon<Monomial, MonomialOrder> even_space_;
  SparseEchelon<Monomial, MonomialOrder> odd_space_;
};

// Smallest graded unital subalgebra containing the (homogeneous) generators.
SubalgebraBasis subalgebra_closure(Rank rank, std::span<const GrassmannElement> generators);

// The linear map a -> a_empty + a_beta * zeta into the rank-1 algebra, for
// a fixed monomial beta of odd cardinality.
class OddLineHom {
 public:
  OddLineHom(Rank rank, Monomial beta);

  Rank rank() const { return rank_; }
  Monomial beta() const { return beta_; }
  // m = |beta|.
  unsigned order() const { return beta_.size(); }

  GrassmannElement operator()(const GrassmannElement& a) const;

 private:
  Rank rank_;
  Monomial beta_;
};

// Surjective graded homomorphism A -> rank-1 algebra for a subalgebra A with
// nontrivial odd part: beta is the least monomial (in canonical order) in
// the support of the odd sector. Re-verifies multiplicativity on A's basis
// and throws VerificationFailed if it does not hold.
OddLineHom lemma1_epi(const SubalgebraBasis& algebra);

// j_lambda(a0 + a1) = body(a0) + lambda * h(a1), a map out of A only.
class JLambdaMap {
 public:
  JLambdaMap(OddLineHom h, Scalar lambda) : h_(h), lambda_(std::move(lambda)) {}

  const OddLineHom& base() const { return h_; }
  const Scalar& lambda() const { return lambda_; }
  GrassmannElement operator()(const GrassmannElement& a) const;

 private:
  OddLineHom h_;
  Scalar lambda_;
};

JLambdaMap j_family(const OddLineHom& h, const SubalgebraBasis& algebra, const Scalar& lambda);

// ---------------------------------------------------------------------------
// Verification

using LinearMap = std::function<GrassmannElement(const GrassmannElement&)>;

// Basis elements together with all pairwise products, so repeated audits of
// many maps over the same domain reuse the products.
class BasisProducts {
 public:
  explicit BasisProducts(std::vector<GrassmannElement> basis);

  const std::vector<GrassmannElement>& basis() const { return basis_; }
  const GrassmannElement& product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
  }

 private:
  std::vector<GrassmannElement> basis_;
  std::vector<GrassmannElement> products_;
};

struct HomReport {
  // Basis index pairs (i, j) with f(b_i b_j) != f(b_i) f(b_j).
  std::vector<std::pair<std::size_t, std::size_t>> non_multiplicative;
  // Basis indices whose image is not homogeneous of the same parity.
  std::vector<std::size_t> grading_violations;
  bool unital = true;
  std::size_t image_dimension = 0;
  std::size_t target_dimension = 0;

  bool empty() const { return non_multiplicative.empty() && grading_violations.empty() && unital; }
  bool surjective() const { return image_dimension == target_dimension; }
};

HomReport verify_hom(const LinearMap& f, Rank target_rank, const BasisProducts& domain);
HomReport verify_hom(const LinearMap& f, Rank target_rank,
                     std::span<const GrassmannElement> domain_basis);
HomReport verify_hom(const GradedHom& phi, std::span<const GrassmannElement> domain_basis);
HomReport verify_hom(const OddLineHom& h, std::span<const GrassmannElement> domain_basis);

// All 2^q monomials of rank q in canonical order.
std::vector<GrassmannElement> monomial_basis(Rank rank);

}  // namespace vss
