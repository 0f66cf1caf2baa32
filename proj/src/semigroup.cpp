#include "vss/semigroup.hpp"

#include <algorithm>

namespace vss {

GrassmannElement FiniteRangeEndo::image(unsigned index, Rank rank) const {
  if (index == 0 || index > support()) return GrassmannElement(rank);
  return change_rank(images_[index - 1], rank, RankChange::Include);
}

GradedHom FiniteRangeEndo::restrict(Rank source, Rank target) const {
  std::vector<GrassmannElement> images;
  images.reserve(source);
  const Rank wide = std::max(target, range_);
  for (unsigned i = 1; i <= source; ++i)
    images.push_back(change_rank(image(i, wide), target, RankChange::Project));
  return make_hom(source, target, std::move(images));
}

FiniteRangeEndo make_endo(Rank range, std::vector<GrassmannElement> images) {
  // make_hom performs the rank and parity checks.
  const Rank support = static_cast<Rank>(images.size());
  GradedHom checked = make_hom(support, range, std::move(images));
  FiniteRangeEndo g;
  g.range_ = range;
  g.images_ = checked.images();
  return g;
}

FiniteRangeEndo pi_endo(unsigned n) {
  std::vector<GrassmannElement> images;
  for (unsigned i = 1; i <= n; ++i) images.push_back(GrassmannElement::generator(n, i));
  return make_endo(n, std::move(images));
}

FiniteRangeEndo endo_compose(const FiniteRangeEndo& g, const FiniteRangeEndo& h) {
  const GradedHom g_on_range = g.restrict(h.range(), g.range());
  std::vector<GrassmannElement> images;
  images.reserve(h.support());
  for (const GrassmannElement& image : h.images()) images.push_back(apply_hom(g_on_range, image));
  return make_endo(g.range(), std::move(images));
}

bool endos_equal(const FiniteRangeEndo& g, const FiniteRangeEndo& h) {
  const Rank rank = std::max(g.range(), h.range());
  const unsigned support = std::max(g.support(), h.support());
  for (unsigned i = 1; i <= support; ++i)
    if (g.image(i, rank) != h.image(i, rank)) return false;
  return true;
}

std::string to_string(const FiniteRangeEndo& g) {
  std::string out;
  for (unsigned i = 1; i <= g.support(); ++i) {
    if (i != 1) out += "; ";
    out += "xi" + std::to_string(i) + "=" + to_string(g.images()[i - 1]);
  }
  return out;
}

PtInftyClass normalize_class(const QPoint& point, const SuperDomainSpec& domain) {
  if (point.domain() != domain)
    fail(ErrorKind::DomainMismatch, "point does not belong to the given superdomain");
  unsigned r = 0;
  for (const auto& x : point.evens()) r = std::max(r, x.max_index());
  for (const auto& th : point.odds()) r = std::max(r, th.max_index());
  std::vector<GrassmannElement> evens;
  std::vector<GrassmannElement> odds;
  for (const auto& x : point.evens()) evens.push_back(change_rank(x, r, RankChange::Project));
  for (const auto& th : point.odds()) odds.push_back(change_rank(th, r, RankChange::Project));
  PtInftyClass c;
  c.domain_ = domain;
  c.representative_ = make_point(r, std::move(evens), std::move(odds));
  return c;
}

bool classes_equal(const PtInftyClass& a, const PtInftyClass& b) {
  if (a.domain() != b.domain())
    fail(ErrorKind::DomainMismatch, "classes belong to different superdomains");
  return a.representative() == b.representative();
}

PtInftyClass act(const FiniteRangeEndo& g, const PtInftyClass& c) {
  return act_at_range(g, c, g.range());
}

PtInftyClass act_at_range(const FiniteRangeEndo& g, const PtInftyClass& c, Rank range) {
  if (range < g.range())
    fail(ErrorKind::RankMismatch, "range rank " + std::to_string(range) +
                                      " does not contain the range of the endomorphism");
  const GradedHom g_jn = g.restrict(c.rank(), range);
  return normalize_class(induced_point_map(g_jn, c.representative()), c.domain());
}

std::string to_string(const PtInftyClass& c) {
  return "rank " + std::to_string(c.rank()) + ": " + to_string(c.representative());
}

ReconstructionReport reconstruct_pt_n(const SuperDomainSpec& domain, unsigned n,
                                      std::span<const PtInftyClass> classes) {
  ReconstructionReport report;
  report.n = n;
  const FiniteRangeEndo pi = pi_endo(n);
  for (const PtInftyClass& c : classes) {
    if (c.domain() != domain)
      fail(ErrorKind::DomainMismatch, "class does not belong to the given superdomain");
    ++report.classes_checked;
    const PtInftyClass image = act(pi, c);
    if (image.rank() <= n) ++report.landed;
    if (classes_equal(image, c) == (c.rank() <= n)) ++report.fixed_iff_rank_le_n;

    const QPoint& rep = c.representative();
    std::vector<GrassmannElement> evens;
    std::vector<GrassmannElement> odds;
    const Rank cut = std::min<Rank>(n, rep.q());
    for (const auto& x : rep.evens()) evens.push_back(change_rank(x, cut, RankChange::Project));
    for (const auto& th : rep.odds()) odds.push_back(change_rank(th, cut, RankChange::Project));
    if (classes_equal(image, normalize_class(make_point(cut, std::move(evens), std::move(odds)), domain)))
      ++report.matches_truncation;
  }
  return report;
}

}  // namespace vss
