#pragma once

#include <span>
#include <string>
#include <vector>

#include "vss/graded_hom.hpp"
#include "vss/points.hpp"

namespace vss {

// An endomorphism g of the infinite-rank Grassmann algebra with finite
// range, stored truncated: xi_i -> images[i-1] for i <= support, xi_i -> 0
// beyond, and every image lies in the rank-`range` subalgebra, so
// g = i_range o pi_range o g.
class FiniteRangeEndo {
 public:
  unsigned support() const { return static_cast<unsigned>(images_.size()); }
  Rank range() const { return range_; }
  const std::vector<GrassmannElement>& images() const { return images_; }

  // Image of xi_index at rank `rank` (>= range), zero beyond the support.
  GrassmannElement image(unsigned index, Rank rank) const;
  // pi_target o g o i_source as a homomorphism of finite-rank algebras.
  GradedHom restrict(Rank source, Rank target) const;

 private:
  friend FiniteRangeEndo make_endo(Rank, std::vector<GrassmannElement>);
  Rank range_ = 0;
  std::vector<GrassmannElement> images_;
};

// Images must be odd (or zero) elements of rank `range`.
FiniteRangeEndo make_endo(Rank range, std::vector<GrassmannElement> images);

// pi_n: xi_i -> xi_i for i <= n, xi_i -> 0 otherwise.
FiniteRangeEndo pi_endo(unsigned n);

// g o h.
FiniteRangeEndo endo_compose(const FiniteRangeEndo& g, const FiniteRangeEndo& h);

// Equality as endomorphisms of the infinite-rank algebra, independent of
// the declared support and range.
bool endos_equal(const FiniteRangeEndo& g, const FiniteRangeEndo& h);

std::string to_string(const FiniteRangeEndo& g);

// A point of the direct limit pt_inf(R^{m,n}), held by its representative
// of minimal rank.
class PtInftyClass {
 public:
  const SuperDomainSpec& domain() const { return domain_; }
  const QPoint& representative() const { return representative_; }
  Rank rank() const { return representative_.q(); }

  friend bool operator==(const PtInftyClass&, const PtInftyClass&) = default;

 private:
  friend PtInftyClass normalize_class(const QPoint&, const SuperDomainSpec&);
  SuperDomainSpec domain_;
  QPoint representative_;
};

PtInftyClass normalize_class(const QPoint& point, const SuperDomainSpec& domain);

// Throws DomainMismatch for classes of different superdomains.
bool classes_equal(const PtInftyClass& a, const PtInftyClass& b);

// The g-motion of pt_inf: push the representative through
// g_{j,n} = pi_j g i_n and re-normalize.
PtInftyClass act(const FiniteRangeEndo& g, const PtInftyClass& c);
// Same, computed through an explicitly chosen range rank j >= g.range().
PtInftyClass act_at_range(const FiniteRangeEndo& g, const PtInftyClass& c, Rank range);

std::string to_string(const PtInftyClass& c);

struct ReconstructionReport {
  unsigned n = 0;
  std::size_t classes_checked = 0;
  // pi_n c has a representative of rank <= n.
  std::size_t landed = 0;
  // c is fixed by pi_n exactly when its rank is <= n.
  std::size_t fixed_iff_rank_le_n = 0;
  // pi_n c is the truncation of c's representative to rank n.
  std::size_t matches_truncation = 0;

  bool ok() const {
    return landed == classes_checked && fixed_iff_rank_le_n == classes_checked &&
           matches_truncation == classes_checked;
  }
};

// Checks on the given classes that pt_n is recovered as the image of the
// retraction pi_n, which fixes exactly the classes of rank <= n.
ReconstructionReport reconstruct_pt_n(const SuperDomainSpec& domain, unsigned n,
                                      std::span<const PtInftyClass> classes);

}  // namespace vss
