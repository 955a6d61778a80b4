#pragma once

#include <gmpxx.h>
#include <string>

namespace tensalg {

using Rat = mpq_class;
using Int = mpz_class;

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

}  // namespace tensalg
