#include "vss/derham.hpp"

#include <functional>
#include <numeric>

#include "vss/linalg.hpp"
#include "vss/term_format.hpp"

namespace vss {

namespace {

unsigned sum(const std::vector<unsigned>& v) { return std::accumulate(v.begin(), v.end(), 0U); }

// xi_a occupies bit a-1 and dx_i bit n+i-1, which lists the odd generators
// of a monomial in canonical order.
std::uint64_t odd_bits(const FormMonomial& m, unsigned n) {
  return m.xi.bits() | (m.dx.bits() << n);
}

std::uint64_t xi_bit(unsigned a) { return std::uint64_t{1} << (a - 1); }
std::uint64_t dx_bit(unsigned i, unsigned n) { return std::uint64_t{1} << (n + i - 1); }

void require_domain(const SuperDomainSpec& a, const SuperDomainSpec& b) {
  if (a != b) fail(ErrorKind::DomainMismatch, "forms live on different superdomains");
}

int count_below(Monomial set, unsigned index) {
  return static_cast<int>(std::popcount(set.bits() & ((std::uint64_t{1} << (index - 1)) - 1)));
}

}  // namespace

unsigned FormMonomial::form_degree() const { return dx.size() + sum(dxi); }

unsigned FormMonomial::weight() const { return sum(x) + xi.size() + dx.size() + sum(dxi); }

bool FormMonomialOrder::operator()(const FormMonomial& a, const FormMonomial& b) const {
  const unsigned pa = a.form_degree();
  const unsigned pb = b.form_degree();
  if (pa != pb) return pa < pb;
  const unsigned wa = a.weight();
  const unsigned wb = b.weight();
  if (wa != wb) return wa < wb;
  if (a.x != b.x) return a.x > b.x;
  const MonomialOrder less;
  if (a.xi != b.xi) return less(a.xi, b.xi);
  if (a.dx != b.dx) return less(a.dx, b.dx);
  return a.dxi > b.dxi;
}

SuperForm::SuperForm(SuperDomainSpec domain) : domain_(domain) {
  if (domain.even_dim + domain.odd_dim > 64)
    fail(ErrorKind::NonCanonicalRank, "superdomain has too many coordinates");
}

FormMonomial unit_monomial(SuperDomainSpec domain) {
  return FormMonomial{std::vector<unsigned>(domain.even_dim, 0), Monomial{}, Monomial{},
                      std::vector<unsigned>(domain.odd_dim, 0)};
}

SuperForm SuperForm::constant(SuperDomainSpec domain, const Scalar& c) {
  return monomial(domain, unit_monomial(domain), c);
}

SuperForm SuperForm::monomial(SuperDomainSpec domain, const FormMonomial& m, const Scalar& c) {
  SuperForm f(domain);
  f.add_term(m, c);
  return f;
}

namespace {

void check_index(unsigned index, unsigned bound, const char* token) {
  if (index < 1 || index > bound)
    fail(ErrorKind::IndexOutOfRange, std::string(token) + std::to_string(index) + " does not exist");
}

}  // namespace

SuperForm SuperForm::x(SuperDomainSpec domain, unsigned index) {
  check_index(index, domain.even_dim, "x");
  FormMonomial m = unit_monomial(domain);
  m.x[index - 1] = 1;
  return monomial(domain, m);
}

SuperForm SuperForm::xi(SuperDomainSpec domain, unsigned index) {
  check_index(index, domain.odd_dim, "xi");
  FormMonomial m = unit_monomial(domain);
  m.xi = Monomial::generator(index);
  return monomial(domain, m);
}

SuperForm SuperForm::dx(SuperDomainSpec domain, unsigned index) {
  check_index(index, domain.even_dim, "dx");
  FormMonomial m = unit_monomial(domain);
  m.dx = Monomial::generator(index);
  return monomial(domain, m);
}

SuperForm SuperForm::dxi(SuperDomainSpec domain, unsigned index) {
  check_index(index, domain.odd_dim, "dxi");
  FormMonomial m = unit_monomial(domain);
  m.dxi[index - 1] = 1;
  return monomial(domain, m);
}

void SuperForm::add_term(const FormMonomial& m, const Scalar& coeff) {
  if (m.x.size() != domain_.even_dim || m.dxi.size() != domain_.odd_dim ||
      m.xi.max_index() > domain_.odd_dim || m.dx.max_index() > domain_.even_dim)
    fail(ErrorKind::IndexOutOfRange, "form monomial does not fit the superdomain");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperForm& SuperForm::operator+=(const SuperForm& o) {
  require_domain(domain_, o.domain_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperForm& SuperForm::operator-=(const SuperForm& o) {
  require_domain(domain_, o.domain_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperForm operator*(const Scalar& s, const SuperForm& f) {
  SuperForm out(f.domain_);
  for (const auto& [m, c] : f.terms_) out.add_term(m, s * c);
  return out;
}

SuperForm wedge(const SuperForm& a, const SuperForm& b) {
  require_domain(a.domain(), b.domain());
  const unsigned n = a.domain().odd_dim;
  SuperForm out(a.domain());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = product_sign(odd_bits(ma, n), odd_bits(mb, n));
      if (sign == 0) continue;
      FormMonomial m = ma;
      for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += mb.x[i];
      for (std::size_t a_ = 0; a_ < m.dxi.size(); ++a_) m.dxi[a_] += mb.dxi[a_];
      m.xi = Monomial::from_bits(ma.xi.bits() | mb.xi.bits());
      m.dx = Monomial::from_bits(ma.dx.bits() | mb.dx.bits());
      const Scalar c = ca * cb;
      out.add_term(m, sign < 0 ? -c : c);
    }
  }
  return out;
}

SuperForm d(const SuperForm& form) {
  const unsigned n = form.domain().odd_dim;
  SuperForm out(form.domain());
  for (const auto& [mu, c] : form.terms()) {
    const std::uint64_t odd = odd_bits(mu, n);
    // d(x^e) xi^alpha dx^I dxi^K: dx_i moves past the whole odd block.
    for (unsigned i = 1; i <= mu.x.size(); ++i) {
      const unsigned e = mu.x[i - 1];
      if (e == 0) continue;
      const int sign = product_sign(dx_bit(i, n), odd);
      if (sign == 0) continue;
      FormMonomial m = mu;
      m.x[i - 1] -= 1;
      m.dx = Monomial::from_bits(mu.dx.bits() | xi_bit(i));
      const Scalar coeff = c * Scalar(static_cast<long>(e));
      out.add_term(m, sign < 0 ? -coeff : coeff);
    }
    // x^e d(xi^alpha) dx^I dxi^K: the even dxi_a leaves the xi block freely,
    // the derivation having passed the xi_b with b < a.
    for (unsigned a : mu.xi.indices()) {
      FormMonomial m = mu;
      m.xi = Monomial::from_bits(mu.xi.bits() & ~xi_bit(a));
      m.dxi[a - 1] += 1;
      out.add_term(m, (count_below(mu.xi, a) & 1) ? -c : c);
    }
  }
  return out;
}

SuperForm euler_contract(const SuperForm& form) {
  const unsigned n = form.domain().odd_dim;
  SuperForm out(form.domain());
  for (const auto& [mu, c] : form.terms()) {
    // i_E passes xi^alpha, then acts on each dx_i slot, having passed the
    // dx_j with j < i; the resulting x_i is even and settles anywhere.
    for (unsigned i : mu.dx.indices()) {
      FormMonomial m = mu;
      m.dx = Monomial::from_bits(mu.dx.bits() & ~xi_bit(i));
      m.x[i - 1] += 1;
      const int flips = static_cast<int>(mu.xi.size()) + count_below(mu.dx, i);
      out.add_term(m, (flips & 1) ? -c : c);
    }
    // Acting on dxi_a^k (after the whole odd block) yields k xi_a, which is
    // then moved back into canonical position.
    const std::uint64_t odd = odd_bits(mu, n);
    const int passed = static_cast<int>(mu.xi.size() + mu.dx.size());
    for (unsigned a = 1; a <= mu.dxi.size(); ++a) {
      const unsigned k = mu.dxi[a - 1];
      if (k == 0) continue;
      const int sign = product_sign(odd, xi_bit(a));
      if (sign == 0) continue;
      FormMonomial m = mu;
      m.dxi[a - 1] -= 1;
      m.xi = Monomial::from_bits(mu.xi.bits() | xi_bit(a));
      Scalar coeff = c * Scalar(static_cast<long>(k));
      if ((passed & 1) != 0) coeff = -coeff;
      out.add_term(m, sign < 0 ? -coeff : coeff);
    }
  }
  return out;
}

SuperForm weight_part(const SuperForm& form, unsigned weight) {
  SuperForm out(form.domain());
  for (const auto& [m, c] : form.terms())
    if (m.weight() == weight) out.add_term(m, c);
  return out;
}

SuperForm antiderivative(const SuperForm& form) {
  if (!d(form).is_zero()) fail(ErrorKind::NotClosed, "form is not closed");
  SuperForm scaled(form.domain());
  for (const auto& [m, c] : form.terms()) {
    const unsigned w = m.weight();
    if (w == 0) continue;
    scaled.add_term(m, c / Scalar(static_cast<long>(w)));
  }
  return euler_contract(scaled);
}

int total_parity(const SuperForm& form) {
  int parity = -2;
  for (const auto& [m, c] : form.terms()) {
    const int p = static_cast<int>(m.parity());
    if (parity == -2) parity = p;
    else if (parity != p) return -1;
  }
  return parity == -2 ? 0 : parity;
}

std::string to_string(const SuperForm& form) {
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  std::vector<std::string> factors;
  auto powered = [](std::string token, unsigned e) {
    if (e > 1) token += "^" + std::to_string(e);
    return token;
  };
  for (const auto& [m, c] : form.terms()) {
    factors.clear();
    for (std::size_t i = 0; i < m.x.size(); ++i)
      if (m.x[i] != 0) factors.push_back(powered("x" + std::to_string(i + 1), m.x[i]));
    for (unsigned a : m.xi.indices()) factors.push_back("xi" + std::to_string(a));
    for (unsigned i : m.dx.indices()) factors.push_back("dx" + std::to_string(i));
    for (std::size_t a = 0; a < m.dxi.size(); ++a)
      if (m.dxi[a] != 0) factors.push_back(powered("dxi" + std::to_string(a + 1), m.dxi[a]));
    append_term(out, c, factors, first);
    first = false;
  }
  return out;
}

namespace {

// Calls f on every exponent vector of the given length with entries summing
// to total.
void for_each_composition(std::size_t length, unsigned total,
                          const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> v(length, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos + 1 >= length) {
      if (length == 0) {
        if (left == 0) f(v);
        return;
      }
      v[pos] = left;
      f(v);
      v[pos] = 0;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      v[pos] = k;
      rec(pos + 1, left - k);
    }
    v[pos] = 0;
  };
  rec(0, total);
}

}  // namespace

std::vector<FormMonomial> form_basis(SuperDomainSpec domain, unsigned degree, unsigned weight) {
  std::vector<FormMonomial> out;
  const unsigned m = domain.even_dim;
  const unsigned n = domain.odd_dim;
  if (weight < degree) return out;
  for (std::uint64_t dx_bits = 0; dx_bits < (std::uint64_t{1} << m); ++dx_bits) {
    const Monomial dx = Monomial::from_bits(dx_bits);
    if (dx.size() > degree) continue;
    for (std::uint64_t xi_bits = 0; xi_bits < (std::uint64_t{1} << n); ++xi_bits) {
      const Monomial xi = Monomial::from_bits(xi_bits);
      if (degree + xi.size() > weight) continue;
      const unsigned x_total = weight - degree - xi.size();
      for_each_composition(n, degree - dx.size(), [&](const std::vector<unsigned>& dxi) {
        for_each_composition(m, x_total, [&](const std::vector<unsigned>& x) {
          out.push_back(FormMonomial{x, xi, dx, dxi});
        });
      });
    }
  }
  std::sort(out.begin(), out.end(), FormMonomialOrder{});
  return out;
}

namespace {

using FormVector = SparseEchelon<FormMonomial, FormMonomialOrder>::Vector;

// Binomial coefficient, saturating at limit.
double choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  double r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Exponent vectors of the given length summing to total.
double compositions(unsigned length, unsigned total) {
  if (length == 0) return total == 0 ? 1 : 0;
  return choose(total + length - 1, length - 1);
}

double block_size(SuperDomainSpec domain, unsigned p, unsigned w) {
  const unsigned m = domain.even_dim;
  const unsigned n = domain.odd_dim;
  double total = 0;
  for (unsigned i = 0; i <= std::min(p, m); ++i)
    for (unsigned j = 0; j <= n && p + j <= w; ++j)
      total += choose(m, i) * choose(n, j) * compositions(n, p - i) * compositions(m, w - p - j);
  return total;
}

void check_block(SuperDomainSpec domain, unsigned p, unsigned w, std::size_t cap) {
  const double size = block_size(domain, p, w);
  if (size > static_cast<double>(cap))
    fail(ErrorKind::BudgetExceeded, "block (degree " + std::to_string(p) + ", weight " + std::to_string(w) +
                                        ") has " + std::to_string(static_cast<long long>(size)) +
                                        " monomials, cap is " + std::to_string(cap));
}

// Fails before any elimination if some block of the truncation is too large.
void check_budget(SuperDomainSpec domain, unsigned max_degree, unsigned max_weight, std::size_t cap) {
  for (unsigned w = 0; w <= max_weight; ++w)
    for (unsigned p = 0; p <= max_degree + 1; ++p) check_block(domain, p, w, cap);
}

std::vector<FormMonomial> capped_basis(SuperDomainSpec domain, unsigned p, unsigned w,
                                       std::size_t cap) {
  check_block(domain, p, w, cap);
  return form_basis(domain, p, w);
}

// Rank of d restricted to the (degree p, weight w) block.
std::size_t rank_of_d(SuperDomainSpec domain, unsigned p, unsigned w, std::size_t cap) {
  SparseEchelon<FormMonomial, FormMonomialOrder> image;
  for (const FormMonomial& mu : capped_basis(domain, p, w, cap)) {
    const SuperForm dmu = d(SuperForm::monomial(domain, mu));
    image.insert(FormVector(dmu.terms().begin(), dmu.terms().end()));
  }
  return image.rank();
}

}  // namespace

std::vector<std::size_t> cohomology_dims(unsigned m, unsigned n, unsigned max_degree,
                                         unsigned max_weight, std::size_t block_cap) {
  const SuperDomainSpec domain{m, n};
  check_budget(domain, max_degree, max_weight, block_cap);
  std::vector<std::size_t> dims(max_degree + 1, 0);
  // d preserves weight, so each weight is an independent subcomplex.
  for (unsigned w = 0; w <= max_weight; ++w) {
    std::size_t rank_below = 0;  // rank of d from degree p-1
    for (unsigned p = 0; p <= max_degree; ++p) {
      const std::size_t dim = capped_basis(domain, p, w, block_cap).size();
      const std::size_t rank_here = rank_of_d(domain, p, w, block_cap);
      dims[p] += dim - rank_here - rank_below;
      rank_below = rank_here;
    }
  }
  return dims;
}

std::vector<std::size_t> cohomology_dims_homotopy(unsigned m, unsigned n, unsigned max_degree,
                                                  unsigned max_weight, std::size_t block_cap) {
  const SuperDomainSpec domain{m, n};
  check_budget(domain, max_degree, max_weight, block_cap);
  std::vector<std::size_t> dims(max_degree + 1, 0);
  for (unsigned w = 0; w <= max_weight; ++w) {
    for (unsigned p = 0; p <= max_degree; ++p) {
      for (const FormMonomial& mu : capped_basis(domain, p, w, block_cap)) {
        const SuperForm f = SuperForm::monomial(domain, mu);
        const SuperForm lie = d(euler_contract(f)) + euler_contract(d(f));
        if (lie != Scalar(static_cast<long>(w)) * f)
          fail(ErrorKind::VerificationFailed, "Cartan identity fails on " + to_string(f));
        // Weight 0 holds only constants, which are closed and not exact.
        if (w == 0) ++dims[p];
      }
    }
  }
  return dims;
}

Derivation partial_x(SuperDomainSpec domain, unsigned index) {
  check_index(index, domain.even_dim, "x");
  Derivation D;
  D.parity = 0;
  for (unsigned i = 1; i <= domain.even_dim; ++i)
    D.on_x.push_back(SuperForm::constant(domain, Scalar(i == index ? 1 : 0)));
  for (unsigned a = 1; a <= domain.odd_dim; ++a) D.on_xi.push_back(SuperForm(domain));
  return D;
}

Derivation partial_xi(SuperDomainSpec domain, unsigned index) {
  check_index(index, domain.odd_dim, "xi");
  Derivation D;
  D.parity = 1;
  for (unsigned i = 1; i <= domain.even_dim; ++i) D.on_x.push_back(SuperForm(domain));
  for (unsigned a = 1; a <= domain.odd_dim; ++a)
    D.on_xi.push_back(SuperForm::constant(domain, Scalar(a == index ? 1 : 0)));
  return D;
}

namespace {

void require_function(const SuperForm& f, const char* what) {
  for (const auto& [m, c] : f.terms())
    if (m.form_degree() != 0)
      fail(ErrorKind::DomainMismatch, std::string(what) + " is not a function (form degree > 0)");
}

void require_parity(const SuperForm& f, unsigned parity, const std::string& what) {
  if (f.is_zero()) return;
  if (total_parity(f) != static_cast<int>(parity))
    fail(ErrorKind::ParityViolation, what + " has the wrong parity for this derivation");
}

}  // namespace

SuperForm graded_derivation_apply(const Derivation& D, const SuperForm& f) {
  const SuperDomainSpec domain = f.domain();
  if (D.on_x.size() != domain.even_dim || D.on_xi.size() != domain.odd_dim)
    fail(ErrorKind::DomainMismatch, "derivation does not match the superdomain");
  if (D.parity > 1) fail(ErrorKind::ParityViolation, "derivation parity must be 0 or 1");
  require_function(f, "argument");
  for (std::size_t i = 0; i < D.on_x.size(); ++i) {
    require_domain(D.on_x[i].domain(), domain);
    require_function(D.on_x[i], "derivation value");
    require_parity(D.on_x[i], D.parity, "value on x" + std::to_string(i + 1));
  }
  for (std::size_t a = 0; a < D.on_xi.size(); ++a) {
    require_domain(D.on_xi[a].domain(), domain);
    require_function(D.on_xi[a], "derivation value");
    require_parity(D.on_xi[a], D.parity ^ 1U, "value on xi" + std::to_string(a + 1));
  }

  SuperForm out(domain);
  for (const auto& [mu, c] : f.terms()) {
    FormMonomial odd_part = unit_monomial(domain);
    odd_part.xi = mu.xi;
    FormMonomial even_part = mu;
    even_part.xi = Monomial{};
    const SuperForm xi_alpha = SuperForm::monomial(domain, odd_part);

    // D(x^e) xi^alpha
    for (unsigned i = 1; i <= domain.even_dim; ++i) {
      const unsigned e = mu.x[i - 1];
      if (e == 0) continue;
      FormMonomial lowered = even_part;
      lowered.x[i - 1] -= 1;
      out += wedge(wedge(SuperForm::monomial(domain, lowered, c * Scalar(static_cast<long>(e))),
                         D.on_x[i - 1]),
                   xi_alpha);
    }
    // x^e D(xi_a1 ... xi_ak), sign (-1)^{|D| (j-1)} at slot j.
    const std::vector<unsigned> alpha = mu.xi.indices();
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      FormMonomial prefix = even_part;
      FormMonomial suffix = unit_monomial(domain);
      for (std::size_t l = 0; l < alpha.size(); ++l) {
        if (l < j) prefix.xi = Monomial::from_bits(prefix.xi.bits() | xi_bit(alpha[l]));
        if (l > j) suffix.xi = Monomial::from_bits(suffix.xi.bits() | xi_bit(alpha[l]));
      }
      const bool flip = (D.parity & 1U) && (j & 1U);
      out += wedge(wedge(SuperForm::monomial(domain, prefix, flip ? -c : c), D.on_xi[alpha[j] - 1]),
                   SuperForm::monomial(domain, suffix));
    }
  }
  return out;
}

}  // namespace vss
