#include "vss/points.hpp"

#include <algorithm>
#include <numeric>

#include "vss/term_format.hpp"

namespace vss {

namespace {

void require_domain(const SuperDomainSpec& a, const SuperDomainSpec& b) {
  if (a != b)
    fail(ErrorKind::DomainMismatch,
         "superdomain R^{" + std::to_string(a.even_dim) + "," + std::to_string(a.odd_dim) +
             "} does not match R^{" + std::to_string(b.even_dim) + "," +
             std::to_string(b.odd_dim) + "}");
}

GrassmannElement power(const GrassmannElement& base, unsigned exponent) {
  GrassmannElement out = GrassmannElement::constant(base.rank(), Scalar(1));
  for (unsigned k = 0; k < exponent && !out.is_zero(); ++k) out = mul(out, base);
  return out;
}

}  // namespace

unsigned FunctionMonomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0U) + odd.size();
}

bool FunctionMonomialOrder::operator()(const FunctionMonomial& a, const FunctionMonomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  if (a.exponents != b.exponents) return a.exponents > b.exponents;
  return MonomialOrder{}(a.odd, b.odd);
}

SuperFunction SuperFunction::constant(SuperDomainSpec domain, const Scalar& c) {
  SuperFunction f(domain);
  f.add_term(FunctionMonomial{std::vector<unsigned>(domain.even_dim, 0), Monomial{}}, c);
  return f;
}

SuperFunction SuperFunction::even_coordinate(SuperDomainSpec domain, unsigned index) {
  if (index < 1 || index > domain.even_dim)
    fail(ErrorKind::IndexOutOfRange, "even coordinate x" + std::to_string(index) + " out of range");
  FunctionMonomial m{std::vector<unsigned>(domain.even_dim, 0), Monomial{}};
  m.exponents[index - 1] = 1;
  SuperFunction f(domain);
  f.add_term(m, Scalar(1));
  return f;
}

SuperFunction SuperFunction::odd_coordinate(SuperDomainSpec domain, unsigned index) {
  if (index < 1 || index > domain.odd_dim)
    fail(ErrorKind::IndexOutOfRange, "odd coordinate th" + std::to_string(index) + " out of range");
  SuperFunction f(domain);
  f.add_term(FunctionMonomial{std::vector<unsigned>(domain.even_dim, 0), Monomial::generator(index)},
             Scalar(1));
  return f;
}

void SuperFunction::add_term(const FunctionMonomial& m, const Scalar& coeff) {
  if (m.exponents.size() != domain_.even_dim || m.odd.max_index() > domain_.odd_dim)
    fail(ErrorKind::IndexOutOfRange, "monomial does not fit the superdomain");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& o) {
  require_domain(domain_, o.domain_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperFunction operator*(const Scalar& s, const SuperFunction& f) {
  SuperFunction out(f.domain_);
  for (const auto& [m, c] : f.terms_) out.add_term(m, s * c);
  return out;
}

SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
  require_domain(a.domain_, b.domain_);
  SuperFunction out(a.domain_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = product_sign(ma.odd, mb.odd);
      if (sign == 0) continue;
      FunctionMonomial m{ma.exponents, Monomial::from_bits(ma.odd.bits() | mb.odd.bits())};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
      out.add_term(m, sign < 0 ? -(ca * cb) : ca * cb);
    }
  }
  return out;
}

std::string to_string(const SuperFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  std::vector<std::string> factors;
  for (const auto& [m, c] : f.terms()) {
    factors.clear();
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      std::string token = "x" + std::to_string(i + 1);
      if (m.exponents[i] > 1) token += "^" + std::to_string(m.exponents[i]);
      factors.push_back(std::move(token));
    }
    for (unsigned a : m.odd.indices()) factors.push_back("th" + std::to_string(a));
    append_term(out, c, factors, first);
    first = false;
  }
  return out;
}

QPoint make_point(Rank q, std::vector<GrassmannElement> evens, std::vector<GrassmannElement> odds) {
  if (q > kMaxRank) fail(ErrorKind::NonCanonicalRank, "rank exceeds the supported maximum");
  for (std::size_t i = 0; i < evens.size(); ++i) {
    if (evens[i].rank() != q) fail(ErrorKind::RankMismatch, "even coordinate has the wrong rank");
    if (parity(evens[i]) != Parity::Even)
      fail(ErrorKind::ParityViolation, "coordinate x" + std::to_string(i + 1) + " is not even");
  }
  for (std::size_t a = 0; a < odds.size(); ++a) {
    if (odds[a].rank() != q) fail(ErrorKind::RankMismatch, "odd coordinate has the wrong rank");
    if (!odds[a].is_zero() && parity(odds[a]) != Parity::Odd)
      fail(ErrorKind::NotOdd, "coordinate th" + std::to_string(a + 1) + " is not odd");
  }
  QPoint p;
  p.q_ = q;
  p.evens_ = std::move(evens);
  p.odds_ = std::move(odds);
  return p;
}

std::string to_string(const QPoint& point) {
  std::string out;
  auto emit = [&](const std::string& name, const GrassmannElement& value) {
    if (!out.empty()) out += "; ";
    out += name + "=" + to_string(value);
  };
  for (std::size_t i = 0; i < point.evens().size(); ++i) emit("x" + std::to_string(i + 1), point.evens()[i]);
  for (std::size_t a = 0; a < point.odds().size(); ++a) emit("th" + std::to_string(a + 1), point.odds()[a]);
  return out;
}

std::vector<Scalar> coordinates(const QPoint& point) {
  const std::vector<GrassmannElement> basis = monomial_basis(point.q());
  std::vector<Scalar> out;
  auto collect = [&](const GrassmannElement& value, bool odd) {
    for (const GrassmannElement& b : basis) {
      const Monomial m = b.terms().begin()->first;
      if (m.is_odd() == odd) out.push_back(value.coefficient(m));
    }
  };
  for (const auto& x : point.evens()) collect(x, false);
  for (const auto& th : point.odds()) collect(th, true);
  return out;
}

std::uint64_t points_dim(SuperDomainSpec spec, Rank q) {
  if (q == 0) return spec.even_dim;
  if (q > 64) fail(ErrorKind::BudgetExceeded, "point dimension overflows");
  const std::uint64_t half = std::uint64_t{1} << (q - 1);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(half, std::uint64_t{spec.even_dim} + spec.odd_dim, &out))
    fail(ErrorKind::BudgetExceeded, "point dimension overflows");
  return out;
}

GrassmannElement eval_superfunction(const SuperFunction& f, const QPoint& point) {
  require_domain(f.domain(), point.domain());
  GrassmannElement out(point.q());
  for (const auto& [m, c] : f.terms()) {
    GrassmannElement product = GrassmannElement::constant(point.q(), c);
    for (std::size_t i = 0; i < m.exponents.size() && !product.is_zero(); ++i)
      if (m.exponents[i] != 0) product = mul(product, power(point.evens()[i], m.exponents[i]));
    for (unsigned a : m.odd.indices()) {
      if (product.is_zero()) break;
      product = mul(product, point.odds()[a - 1]);
    }
    out += product;
  }
  return out;
}

QPoint induced_point_map(const GradedHom& phi, const QPoint& point) {
  if (phi.source_rank() != point.q())
    fail(ErrorKind::RankMismatch, "homomorphism source rank " + std::to_string(phi.source_rank()) +
                                      " does not match point rank " + std::to_string(point.q()));
  std::vector<GrassmannElement> evens;
  std::vector<GrassmannElement> odds;
  for (const auto& x : point.evens()) evens.push_back(apply_hom(phi, x));
  for (const auto& th : point.odds()) odds.push_back(apply_hom(phi, th));
  return make_point(phi.target_rank(), std::move(evens), std::move(odds));
}

QPoint body_of_point(const QPoint& point) {
  return induced_point_map(augmentation_hom(point.q()), point);
}

QPoint embed_point(const QPoint& base, Rank q) {
  if (base.q() != 0) fail(ErrorKind::RankMismatch, "embed_point expects a 0-point");
  return induced_point_map(unit_section_hom(q), base);
}

namespace {

SubalgebraBasis coordinate_algebra(const QPoint& point) {
  std::vector<GrassmannElement> generators = point.evens();
  generators.insert(generators.end(), point.odds().begin(), point.odds().end());
  return subalgebra_closure(point.q(), generators);
}

}  // namespace

OnePointLine::OnePointLine(const QPoint& point)
    : point_(point), algebra_(coordinate_algebra(point)), epi_(lemma1_epi(algebra_)) {}

QPoint OnePointLine::at(const Scalar& lambda) const {
  const JLambdaMap j = j_family(epi_, algebra_, lambda);
  std::vector<GrassmannElement> evens;
  std::vector<GrassmannElement> odds;
  for (const auto& x : point_.evens()) evens.push_back(j(x));
  for (const auto& th : point_.odds()) odds.push_back(j(th));
  return make_point(1, std::move(evens), std::move(odds));
}

}  // namespace vss
