#include "vss/graded_hom.hpp"

#include <deque>

namespace vss {

namespace {

ElementVector as_vector(const GrassmannElement& a) {
  return ElementVector(a.terms().begin(), a.terms().end());
}

GrassmannElement from_vector(Rank rank, const ElementVector& v) {
  GrassmannElement out(rank);
  for (const auto& [m, c] : v) out.add_term(m, c);
  return out;
}

void require_rank(const GrassmannElement& a, Rank rank, const char* what) {
  if (a.rank() != rank)
    fail(ErrorKind::RankMismatch, std::string(what) + " has rank " + std::to_string(a.rank()) +
                                      ", expected " + std::to_string(rank));
}

}  // namespace

GradedHom make_hom(Rank source_rank, Rank target_rank, std::vector<GrassmannElement> images) {
  if (source_rank > kMaxRank || target_rank > kMaxRank)
    fail(ErrorKind::NonCanonicalRank, "rank exceeds the supported maximum");
  if (images.size() != source_rank)
    fail(ErrorKind::RankMismatch, "expected " + std::to_string(source_rank) + " images, got " +
                                      std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    require_rank(images[i], target_rank, "image");
    if (parity(images[i]) != Parity::Odd && !images[i].is_zero())
      fail(ErrorKind::NotOdd, "image of xi" + std::to_string(i + 1) + " is not odd");
  }
  GradedHom phi;
  phi.source_rank_ = source_rank;
  phi.target_rank_ = target_rank;
  phi.images_ = std::move(images);
  return phi;
}

GradedHom identity_hom(Rank rank) {
  std::vector<GrassmannElement> images;
  for (unsigned i = 1; i <= rank; ++i) images.push_back(GrassmannElement::generator(rank, i));
  return make_hom(rank, rank, std::move(images));
}

GradedHom augmentation_hom(Rank rank) {
  return make_hom(rank, 0, std::vector<GrassmannElement>(rank, GrassmannElement(0)));
}

GradedHom unit_section_hom(Rank rank) { return make_hom(0, rank, {}); }

GrassmannElement apply_hom(const GradedHom& phi, const GrassmannElement& a) {
  require_rank(a, phi.source_rank(), "argument");
  GrassmannElement out(phi.target_rank());
  for (const auto& [m, c] : a.terms()) {
    GrassmannElement product = GrassmannElement::constant(phi.target_rank(), c);
    for (unsigned i : m.indices()) {
      product = mul(product, phi.images()[i - 1]);
      if (product.is_zero()) break;
    }
    out += product;
  }
  return out;
}

GradedHom compose_hom(const GradedHom& g, const GradedHom& f) {
  if (f.target_rank() != g.source_rank())
    fail(ErrorKind::RankMismatch, "cannot compose: target rank " +
                                      std::to_string(f.target_rank()) + " vs source rank " +
                                      std::to_string(g.source_rank()));
  std::vector<GrassmannElement> images;
  images.reserve(f.images().size());
  for (const GrassmannElement& image : f.images()) images.push_back(apply_hom(g, image));
  return make_hom(f.source_rank(), g.target_rank(), std::move(images));
}

std::string to_string(const GradedHom& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.images().size(); ++i) {
    if (i != 0) out += "; ";
    out += "xi" + std::to_string(i + 1) + "=" + to_string(phi.images()[i]);
  }
  return out;
}

std::vector<GrassmannElement> SubalgebraBasis::all() const {
  std::vector<GrassmannElement> out = even_;
  out.insert(out.end(), odd_.begin(), odd_.end());
  return out;
}

bool SubalgebraBasis::contains(const GrassmannElement& a) const {
  if (a.rank() != rank_) return false;
  const ParityParts parts = parity_decompose(a);
  return even_space_.contains(as_vector(parts.even)) && odd_space_.contains(as_vector(parts.odd));
}

SubalgebraBasis subalgebra_closure(Rank rank, std::span<const GrassmannElement> generators) {
  for (const GrassmannElement& g : generators) {
    require_rank(g, rank, "generator");
    if (!is_homogeneous(g)) fail(ErrorKind::NotHomogeneous, "generator " + to_string(g) + " is not homogeneous");
  }
  SubalgebraBasis A;
  A.rank_ = rank;
  // Every vector that enlarged the span is queued once and multiplied on
  // the left by each generator; the span is then closed under all words in
  // the generators, i.e. it is the generated subalgebra.
  std::deque<GrassmannElement> pending;
  const GrassmannElement one = GrassmannElement::constant(rank, Scalar(1));
  A.even_space_.insert(as_vector(one));
  pending.push_back(one);
  while (!pending.empty()) {
    const GrassmannElement w = std::move(pending.front());
    pending.pop_front();
    for (const GrassmannElement& g : generators) {
      GrassmannElement p = mul(g, w);
      if (p.is_zero()) continue;
      auto& space = parity(p) == Parity::Odd ? A.odd_space_ : A.even_space_;
      if (space.insert(as_vector(p))) pending.push_back(std::move(p));
    }
  }
  for (const auto& row : A.even_space_.rows()) A.even_.push_back(from_vector(rank, row));
  for (const auto& row : A.odd_space_.rows()) A.odd_.push_back(from_vector(rank, row));
  return A;
}

OddLineHom::OddLineHom(Rank rank, Monomial beta) : rank_(rank), beta_(beta) {
  if (!beta.is_odd()) fail(ErrorKind::NotOdd, "beta must have odd cardinality");
  if (beta.max_index() > rank)
    fail(ErrorKind::IndexOutOfRange, "beta does not fit rank " + std::to_string(rank));
}

GrassmannElement OddLineHom::operator()(const GrassmannElement& a) const {
  require_rank(a, rank_, "argument");
  GrassmannElement out(1);
  out.add_term(Monomial{}, body(a));
  out.add_term(Monomial::generator(1), a.coefficient(beta_));
  return out;
}

OddLineHom lemma1_epi(const SubalgebraBasis& algebra) {
  if (algebra.odd().empty()) fail(ErrorKind::NoOddSector, "subalgebra has trivial odd part");
  const MonomialOrder less;
  std::optional<Monomial> beta;
  for (const GrassmannElement& v : algebra.odd())
    for (const auto& [m, c] : v.terms())
      if (!beta || less(m, *beta)) beta = m;
  OddLineHom h(algebra.rank(), *beta);
  const HomReport report = verify_hom(h, algebra.all());
  if (!report.empty() || !report.surjective())
    fail(ErrorKind::VerificationFailed, "odd-line map is not a surjective homomorphism on A");
  return h;
}

GrassmannElement JLambdaMap::operator()(const GrassmannElement& a) const {
  const ParityParts parts = parity_decompose(a);
  GrassmannElement out(1);
  out.add_term(Monomial{}, body(parts.even));
  out.add_term(Monomial::generator(1), lambda_ * h_(parts.odd).coefficient(Monomial::generator(1)));
  return out;
}

JLambdaMap j_family(const OddLineHom& h, const SubalgebraBasis& algebra, const Scalar& lambda) {
  if (h.rank() != algebra.rank())
    fail(ErrorKind::RankMismatch, "odd-line map and subalgebra have different ranks");
  return JLambdaMap(h, lambda);
}

BasisProducts::BasisProducts(std::vector<GrassmannElement> basis) : basis_(std::move(basis)) {
  products_.reserve(basis_.size() * basis_.size());
  for (const auto& a : basis_)
    for (const auto& b : basis_) products_.push_back(mul(a, b));
}

HomReport verify_hom(const LinearMap& f, Rank target_rank, const BasisProducts& domain) {
  const auto& basis = domain.basis();
  HomReport report;
  report.target_dimension = std::size_t{1} << target_rank;

  std::vector<GrassmannElement> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(f(b));

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (f(domain.product(i, j)) != mul(images[i], images[j]))
        report.non_multiplicative.emplace_back(i, j);

  if (!basis.empty()) {
    const GrassmannElement one = GrassmannElement::constant(basis.front().rank(), Scalar(1));
    report.unital = f(one) == GrassmannElement::constant(target_rank, Scalar(1));
  }

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ParityParts parts = parity_decompose(basis[i]);
    const Parity even_image = parity(f(parts.even));
    const GrassmannElement odd_image = f(parts.odd);
    if (even_image != Parity::Even || (!odd_image.is_zero() && parity(odd_image) != Parity::Odd))
      report.grading_violations.push_back(i);
  }

  SparseEchelon<Monomial, MonomialOrder> span;
  for (const auto& image : images) span.insert(as_vector(image));
  report.image_dimension = span.rank();
  return report;
}

HomReport verify_hom(const LinearMap& f, Rank target_rank,
                     std::span<const GrassmannElement> domain_basis) {
  return verify_hom(f, target_rank,
                    BasisProducts(std::vector<GrassmannElement>(domain_basis.begin(), domain_basis.end())));
}

HomReport verify_hom(const GradedHom& phi, std::span<const GrassmannElement> domain_basis) {
  return verify_hom([&](const GrassmannElement& a) { return apply_hom(phi, a); },
                    phi.target_rank(), domain_basis);
}

HomReport verify_hom(const OddLineHom& h, std::span<const GrassmannElement> domain_basis) {
  return verify_hom([&](const GrassmannElement& a) { return h(a); }, 1, domain_basis);
}

std::vector<GrassmannElement> monomial_basis(Rank rank) {
  if (rank > 20) fail(ErrorKind::BudgetExceeded, "monomial basis of rank " + std::to_string(rank) + " is too large");
  std::vector<Monomial> monomials;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rank); ++bits)
    monomials.push_back(Monomial::from_bits(bits));
  std::sort(monomials.begin(), monomials.end(), MonomialOrder{});
  std::vector<GrassmannElement> out;
  out.reserve(monomials.size());
  for (Monomial m : monomials) out.push_back(GrassmannElement::term(rank, m, Scalar(1)));
  return out;
}

}  // namespace vss
