#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "vss/derham.hpp"
#include "vss/graded_hom.hpp"
#include "vss/points.hpp"
#include "vss/semigroup.hpp"

namespace vss {

// Concrete syntax shared by every kind of value:
//
//   expr     := term (('+' | '-') term)*      (a leading sign is allowed)
//   term     := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
//   factor   := token ['^' nat]
//   rational := int ['/' nat]
//   token    := ('xi' | 'x' | 'th' | 'dx' | 'dxi') nat | 'zeta'
//
// Whitespace is ignored. Odd tokens (xi, th, dx, zeta) reject powers > 1.

enum class Token { Xi, X, Th, Dx, Dxi, Zeta };

struct Factor {
  Token token;
  unsigned index;  // zeta is index 1
  unsigned power;
  std::size_t position;
};

struct ParsedTerm {
  Scalar coeff;
  std::vector<Factor> factors;
};

struct ParseTree {
  std::vector<ParsedTerm> terms;
  // Largest xi/zeta index mentioned, 0 if none.
  unsigned max_xi_index() const;
};

struct Assignment {
  Factor target;
  ParseTree value;
};

ParseTree parse_expression(std::string_view text);
// "lhs=expr; lhs=expr; ..."; empty segments are skipped.
std::vector<Assignment> parse_assignments(std::string_view text);

GrassmannElement parse_element(std::string_view text, Rank rank);
// "e1; e2; ..." as used for subalgebra generators.
std::vector<GrassmannElement> parse_element_list(std::string_view text, Rank rank);
SuperFunction parse_superfunction(std::string_view text, SuperDomainSpec domain);
SuperForm parse_form(std::string_view text, SuperDomainSpec domain);
// "xi1=...; xi2=..."; generators left out map to 0. Images must be odd.
GradedHom parse_hom(std::string_view text, Rank source_rank, Rank target_rank);
// Like a hom, with support and range read off the largest indices used.
FiniteRangeEndo parse_endo(std::string_view text);
// "x1=...; th1=..." with coordinates in the rank-q algebra; unassigned
// coordinates are 0.
QPoint parse_point(std::string_view text, SuperDomainSpec domain, Rank q);
// Rank taken as the largest xi index used.
QPoint parse_point(std::string_view text, SuperDomainSpec domain);

}  // namespace vss
