#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vss/graded_hom.hpp"
#include "vss/grassmann.hpp"

namespace vss {

// The superdomain R^{m,n}; pt_n is the case m = 0.
struct SuperDomainSpec {
  unsigned even_dim = 0;
  unsigned odd_dim = 0;

  friend bool operator==(const SuperDomainSpec&, const SuperDomainSpec&) = default;
};

// x^e * th^alpha with th the odd coordinates of the superdomain.
struct FunctionMonomial {
  std::vector<unsigned> exponents;  // one per even coordinate
  Monomial odd;                     // subset of the odd coordinates

  unsigned degree() const;
  friend bool operator==(const FunctionMonomial&, const FunctionMonomial&) = default;
};

// Total degree, then exponent vectors in decreasing lexicographic order (so
// x1 precedes x2), then the odd part in canonical monomial order.
struct FunctionMonomialOrder {
  bool operator()(const FunctionMonomial& a, const FunctionMonomial& b) const;
};

// A polynomial superfunction on R^{m,n}.
class SuperFunction {
 public:
  using Terms = std::map<FunctionMonomial, Scalar, FunctionMonomialOrder>;

  SuperFunction() = default;
  explicit SuperFunction(SuperDomainSpec domain) : domain_(domain) {}

  static SuperFunction constant(SuperDomainSpec domain, const Scalar& c);
  static SuperFunction even_coordinate(SuperDomainSpec domain, unsigned index);
  static SuperFunction odd_coordinate(SuperDomainSpec domain, unsigned index);

  const SuperDomainSpec& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FunctionMonomial& m, const Scalar& coeff);

  SuperFunction& operator+=(const SuperFunction& o);
  friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
  friend SuperFunction operator*(const Scalar& s, const SuperFunction& f);
  friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
  friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

 private:
  SuperDomainSpec domain_;
  Terms terms_;
};

std::string to_string(const SuperFunction& f);

// A q-point of R^{m,n}: m even and n odd elements of the rank-q algebra.
class QPoint {
 public:
  Rank q() const { return q_; }
  SuperDomainSpec domain() const {
    return {static_cast<unsigned>(evens_.size()), static_cast<unsigned>(odds_.size())};
  }
  const std::vector<GrassmannElement>& evens() const { return evens_; }
  const std::vector<GrassmannElement>& odds() const { return odds_; }

  friend bool operator==(const QPoint&, const QPoint&) = default;

 private:
  friend QPoint make_point(Rank, std::vector<GrassmannElement>, std::vector<GrassmannElement>);
  Rank q_ = 0;
  std::vector<GrassmannElement> evens_;
  std::vector<GrassmannElement> odds_;
};

// Throws RankMismatch, ParityViolation (even coordinate not even) or NotOdd.
QPoint make_point(Rank q, std::vector<GrassmannElement> evens, std::vector<GrassmannElement> odds);

// "x1=...; th1=..." with every coordinate listed.
std::string to_string(const QPoint& point);

// Euclidean coordinates of the point: coefficients of each even coordinate on
// the even monomials, then of each odd coordinate on the odd monomials.
std::vector<Scalar> coordinates(const QPoint& point);

// Dimension of pt_q(R^{m,n}) as a rational vector space.
std::uint64_t points_dim(SuperDomainSpec spec, Rank q);

// f_q evaluated at the point.
GrassmannElement eval_superfunction(const SuperFunction& f, const QPoint& point);

// kappa -> kappa o phi^#: phi applied to every coordinate.
QPoint induced_point_map(const GradedHom& phi, const QPoint& point);

QPoint body_of_point(const QPoint& point);

// A 0-point viewed as a q-point through k -> k * 1.
QPoint embed_point(const QPoint& base, Rank q);

// The affine line of 1-points x_lambda = j_lambda o kappa^# sitting in the
// fibre over body(kappa). Built from the subalgebra A generated by the
// coordinates of kappa; throws NoOddSector if A has trivial odd part.
class OnePointLine {
 public:
  explicit OnePointLine(const QPoint& point);

  const SubalgebraBasis& algebra() const { return algebra_; }
  const OddLineHom& epi() const { return epi_; }
  QPoint at(const Scalar& lambda) const;

 private:
  QPoint point_;
  SubalgebraBasis algebra_;
  OddLineHom epi_;
};

}  // namespace vss
