#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace npa {

/// Arbitrary-precision natural number.
using Natural = mpz_class;

inline std::size_t bit_length(const Natural& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

inline std::size_t hash_value(const Natural& x) {
  std::size_t h = static_cast<std::size_t>(mpz_size(x.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < mpz_size(x.get_mpz_t()); ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

inline std::string to_string(const Natural& x) { return x.get_str(); }

}  // namespace npa
