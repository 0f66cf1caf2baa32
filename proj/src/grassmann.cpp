#include "vss/grassmann.hpp"

#include <algorithm>

#include "vss/term_format.hpp"

namespace vss {

namespace {

void check_rank(Rank rank) {
  if (rank > kMaxRank)
    fail(ErrorKind::NonCanonicalRank,
         "rank " + std::to_string(rank) + " exceeds the supported maximum " +
             std::to_string(kMaxRank));
}

void check_fits(Monomial m, Rank rank) {
  if (m.max_index() > rank)
    fail(ErrorKind::IndexOutOfRange, "generator xi" + std::to_string(m.max_index()) +
                                         " does not exist in rank " + std::to_string(rank));
}

void require_same_rank(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.rank() != b.rank())
    fail(ErrorKind::RankMismatch, "ranks " + std::to_string(a.rank()) + " and " +
                                      std::to_string(b.rank()) + " differ");
}

}  // namespace

Monomial Monomial::from_indices(std::span<const unsigned> indices) {
  std::uint64_t bits = 0;
  for (unsigned i : indices) {
    if (i < 1 || i > kMaxRank)
      fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if ((bits & bit) != 0)
      fail(ErrorKind::IndexOutOfRange, "repeated generator index " + std::to_string(i));
    bits |= bit;
  }
  return Monomial(bits);
}

Monomial Monomial::generator(unsigned index) {
  const unsigned one[] = {index};
  return from_indices(one);
}

std::vector<unsigned> Monomial::indices() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<unsigned>(std::countr_zero(b)) + 1);
  return out;
}

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "mixed";
}

GrassmannElement::GrassmannElement(Rank rank) : rank_(rank) { check_rank(rank); }

GrassmannElement GrassmannElement::constant(Rank rank, const Scalar& value) {
  return term(rank, Monomial{}, value);
}

GrassmannElement GrassmannElement::generator(Rank rank, unsigned index) {
  if (index < 1 || index > rank)
    fail(ErrorKind::IndexOutOfRange, "generator xi" + std::to_string(index) +
                                         " does not exist in rank " + std::to_string(rank));
  return term(rank, Monomial::generator(index), Scalar(1));
}

GrassmannElement GrassmannElement::term(Rank rank, Monomial monomial, const Scalar& coeff) {
  GrassmannElement e(rank);
  e.add_term(monomial, coeff);
  return e;
}

Scalar GrassmannElement::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned GrassmannElement::max_index() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.max_index());
  return best;
}

void GrassmannElement::add_term(Monomial m, const Scalar& coeff) {
  check_fits(m, rank_);
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  require_same_rank(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  require_same_rank(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  return mul(a, b);
}

GrassmannElement normalize(long rank, std::span<const RawTerm> raw_terms) {
  if (rank < 0) fail(ErrorKind::NonCanonicalRank, "negative rank " + std::to_string(rank));
  GrassmannElement out(static_cast<Rank>(rank));
  for (const RawTerm& t : raw_terms) {
    for (unsigned i : t.indices)
      if (i < 1 || static_cast<long>(i) > rank)
        fail(ErrorKind::IndexOutOfRange, "generator xi" + std::to_string(i) +
                                             " does not exist in rank " + std::to_string(rank));
    // Insertion sort, counting transpositions; a repeat means xi_i^2 = 0.
    std::vector<unsigned> idx = t.indices;
    unsigned swaps = 0;
    bool repeated = false;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
        if (idx[j - 1] == idx[j]) {
          repeated = true;
          break;
        }
        std::swap(idx[j - 1], idx[j]);
        ++swaps;
      }
      if (repeated) break;
    }
    if (repeated) continue;
    const Scalar coeff = (swaps & 1U) ? -t.coeff : t.coeff;
    out.add_term(Monomial::from_indices(idx), coeff);
  }
  return out;
}

GrassmannElement lin_comb(std::span<const std::pair<Scalar, GrassmannElement>> pairs) {
  if (pairs.empty()) return GrassmannElement(0);
  GrassmannElement out(pairs.front().second.rank());
  for (const auto& [s, e] : pairs) {
    require_same_rank(out, e);
    for (const auto& [m, c] : e.terms()) out.add_term(m, s * c);
  }
  return out;
}

GrassmannElement mul(const GrassmannElement& a, const GrassmannElement& b) {
  require_same_rank(a, b);
  GrassmannElement out(a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = product_sign(ma, mb);
      if (sign == 0) continue;
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(Monomial::from_bits(ma.bits() | mb.bits()), c);
    }
  }
  return out;
}

Scalar body(const GrassmannElement& a) { return a.coefficient(Monomial{}); }

ParityParts parity_decompose(const GrassmannElement& a) {
  ParityParts parts{GrassmannElement(a.rank()), GrassmannElement(a.rank()), Parity::Even};
  for (const auto& [m, c] : a.terms()) (m.is_odd() ? parts.odd : parts.even).add_term(m, c);
  if (!parts.odd.is_zero()) parts.parity = parts.even.is_zero() ? Parity::Odd : Parity::Mixed;
  return parts;
}

Parity parity(const GrassmannElement& a) {
  bool has_even = false;
  bool has_odd = false;
  for (const auto& [m, c] : a.terms()) (m.is_odd() ? has_odd : has_even) = true;
  if (has_odd) return has_even ? Parity::Mixed : Parity::Odd;
  return Parity::Even;
}

bool is_homogeneous(const GrassmannElement& a) { return parity(a) != Parity::Mixed; }

std::optional<unsigned> filtration_level(const GrassmannElement& a) {
  // Terms are ordered by cardinality first, so the minimum is up front.
  if (a.is_zero()) return std::nullopt;
  return a.terms().begin()->first.size();
}

GrassmannElement invert(const GrassmannElement& a) {
  const Scalar b = body(a);
  if (b.is_zero()) fail(ErrorKind::NotInvertible, "element has vanishing body");
  // a = b (1 + s) with s nilpotent; (1 + s)^-1 = sum_k (-s)^k, s^(q+1) = 0.
  GrassmannElement minus_s = a;
  minus_s.add_term(Monomial{}, -b);
  minus_s *= -b.inverse();
  GrassmannElement sum = GrassmannElement::constant(a.rank(), Scalar(1));
  GrassmannElement power = sum;
  for (Rank k = 0; k < a.rank(); ++k) {
    power = mul(power, minus_s);
    if (power.is_zero()) break;
    sum += power;
  }
  sum *= b.inverse();
  return sum;
}

GrassmannElement change_rank(const GrassmannElement& a, Rank target, RankChange mode) {
  GrassmannElement out(target);
  if (mode == RankChange::Include) {
    if (target < a.rank())
      fail(ErrorKind::RankMismatch, "cannot include rank " + std::to_string(a.rank()) +
                                        " into smaller rank " + std::to_string(target));
    for (const auto& [m, c] : a.terms()) out.add_term(m, c);
    return out;
  }
  for (const auto& [m, c] : a.terms())
    if (m.max_index() <= target) out.add_term(m, c);
  return out;
}

std::string to_string(const GrassmannElement& a, std::string_view generator) {
  if (a.is_zero()) return "0";
  const bool bare = generator == "zeta";
  std::string out;
  bool first = true;
  std::vector<std::string> factors;
  for (const auto& [m, c] : a.terms()) {
    factors.clear();
    for (unsigned i : m.indices())
      factors.push_back(bare ? std::string(generator) : std::string(generator) + std::to_string(i));
    append_term(out, c, factors, first);
    first = false;
  }
  return out;
}

}  // namespace vss
