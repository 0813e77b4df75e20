#pragma once

// Parameterization of a primitive q mod k^2 by (d, xi, alpha, c, gamma,
// mu, m) with [d xi q]_{k^2} = (mu m + gamma c) k + alpha < k^2 / 2.

#include "lsk/modmath.hpp"

namespace lsk {

enum class QType { Type0, Positive, Negative };

struct ParamSet {
  int_t d = 1;
  int xi = +1;
  int alpha = +1;
  int_t c = 0;
  int gamma = +1;
  int mu = +1;
  int_t m = 0;
  QType type = QType::Type0;
};

const char* q_type_name(QType t);

// Derives the parameter set for a unit q mod k^2, k > 2.  Every structural
// identity of the parameterization is asserted before returning.
ParamSet derive_params(int_t k, int_t q);

}  // namespace lsk
