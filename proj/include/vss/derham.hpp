#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vss/grassmann.hpp"
#include "vss/points.hpp"

namespace vss {

// Sign convention: each generator carries a total parity (form degree plus
// intrinsic parity, mod 2): x_i even, xi_a odd, dx_i odd, dxi_a even, and
// any two generators satisfy uv = (-1)^{|u||v|} vu. Hence dx_i^2 = 0 while
// powers of dxi_a survive.

// x^e * xi^alpha * dx^I * dxi^K in this generator order.
struct FormMonomial {
  std::vector<unsigned> x;    // exponents, one per even coordinate
  Monomial xi;                // odd coordinates present
  Monomial dx;                // differentials of even coordinates present
  std::vector<unsigned> dxi;  // exponents of the odd differentials

  unsigned form_degree() const;
  unsigned weight() const;
  // Total parity (|alpha| + |I|) mod 2.
  unsigned parity() const { return (xi.size() + dx.size()) & 1U; }

  friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
};

// Form degree, weight, then x exponents (decreasing), xi, dx, dxi exponents
// (decreasing).
struct FormMonomialOrder {
  bool operator()(const FormMonomial& a, const FormMonomial& b) const;
};

class SuperForm {
 public:
  using Terms = std::map<FormMonomial, Scalar, FormMonomialOrder>;

  SuperForm() = default;
  explicit SuperForm(SuperDomainSpec domain);

  static SuperForm constant(SuperDomainSpec domain, const Scalar& c);
  static SuperForm monomial(SuperDomainSpec domain, const FormMonomial& m, const Scalar& c = Scalar(1));
  static SuperForm x(SuperDomainSpec domain, unsigned index);
  static SuperForm xi(SuperDomainSpec domain, unsigned index);
  static SuperForm dx(SuperDomainSpec domain, unsigned index);
  static SuperForm dxi(SuperDomainSpec domain, unsigned index);

  const SuperDomainSpec& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FormMonomial& m, const Scalar& coeff);

  SuperForm& operator+=(const SuperForm& o);
  SuperForm& operator-=(const SuperForm& o);
  friend SuperForm operator+(SuperForm a, const SuperForm& b) { return a += b; }
  friend SuperForm operator-(SuperForm a, const SuperForm& b) { return a -= b; }
  friend SuperForm operator*(const Scalar& s, const SuperForm& f);
  friend bool operator==(const SuperForm&, const SuperForm&) = default;

 private:
  SuperDomainSpec domain_;
  Terms terms_;
};

FormMonomial unit_monomial(SuperDomainSpec domain);

SuperForm wedge(const SuperForm& a, const SuperForm& b);

// The odd derivation with d(x_i) = dx_i, d(xi_a) = dxi_a, d(dx) = d(dxi) = 0.
SuperForm d(const SuperForm& form);

// Contraction with the Euler field: the odd derivation with
// i_E(dx_i) = x_i, i_E(dxi_a) = xi_a, i_E(x) = i_E(xi) = 0.
SuperForm euler_contract(const SuperForm& form);

// Weight-w component.
SuperForm weight_part(const SuperForm& form, unsigned weight);

// tau = sum over w >= 1 of i_E(form_w) / w, so d(tau) = form - form_0.
// Throws NotClosed when d(form) != 0.
SuperForm antiderivative(const SuperForm& form);

// -1 when the form mixes total parities, otherwise 0 or 1 (zero is even).
int total_parity(const SuperForm& form);

std::string to_string(const SuperForm& form);

// All monomials with the given form degree and weight, in canonical order.
std::vector<FormMonomial> form_basis(SuperDomainSpec domain, unsigned degree, unsigned weight);

inline constexpr std::size_t kDefaultBlockCap = 20000;

// dim H^p for p = 0..max_degree from the weight <= max_weight truncation:
// exact rank/nullity of d on each (degree, weight) block.
std::vector<std::size_t> cohomology_dims(unsigned m, unsigned n, unsigned max_degree,
                                         unsigned max_weight,
                                         std::size_t block_cap = kDefaultBlockCap);

// Same dimensions from the Euler homotopy: every block of positive weight is
// contractible once d i_E + i_E d = weight is confirmed on its basis, so
// only weight 0 contributes. Throws VerificationFailed if the identity fails.
std::vector<std::size_t> cohomology_dims_homotopy(unsigned m, unsigned n, unsigned max_degree,
                                                  unsigned max_weight,
                                                  std::size_t block_cap = kDefaultBlockCap);

// A derivation of functions (form degree 0) given by its values on the
// coordinates; parity 0 or 1.
struct Derivation {
  unsigned parity = 0;
  std::vector<SuperForm> on_x;
  std::vector<SuperForm> on_xi;
};

Derivation partial_x(SuperDomainSpec domain, unsigned index);
// Left derivative: d/dxi_a xi^alpha = (-1)^{#{b in alpha : b < a}} xi^{alpha \ a}.
Derivation partial_xi(SuperDomainSpec domain, unsigned index);

// Extends D by the graded Leibniz rule D(fg) = D(f) g + (-1)^{|D||f|} f D(g).
// Throws ParityViolation if a value of D has the wrong parity and
// DomainMismatch if f or a value is not a function.
SuperForm graded_derivation_apply(const Derivation& derivation, const SuperForm& f);

}  // namespace vss
