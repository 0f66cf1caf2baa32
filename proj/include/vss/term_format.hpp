#pragma once

#include <string>
#include <vector>

#include "vss/scalar.hpp"

namespace vss {

// Appends "coeff*f1*f2..." to a canonical sum. The first term carries a
// bare leading '-', later terms are joined with " + " or " - ". Unit
// coefficients are elided whenever at least one factor follows.
inline void append_term(std::string& out, const Scalar& coeff,
                        const std::vector<std::string>& factors, bool first) {
  const bool negative = coeff.sign() < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  const Scalar magnitude = coeff.abs();
  if (factors.empty()) {
    out += magnitude.to_string();
    return;
  }
  if (!magnitude.is_one()) {
    out += magnitude.to_string();
    out += '*';
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) out += '*';
    out += factors[i];
  }
}

}  // namespace vss
