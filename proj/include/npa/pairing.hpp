#pragma once

#include <utility>

#include "npa/natural.hpp"

namespace npa {

/// Cantor pairing (i+j)(i+j+1)/2 + j. Injective on N x N.
Natural cantor_pair(const Natural& i, const Natural& j);

/// (i+j, i*j). Symmetric, and injective on unordered pairs of naturals.
std::pair<Natural, Natural> sym_pair(const Natural& i, const Natural& j);

/// Left-nested pairing of four values: cantor(cantor(cantor(a, b), c), d).
Natural cantor_pair4(const Natural& a, const Natural& b, const Natural& c, const Natural& d);

/// One (y, h, m1, m2) argument of the combiner.
struct Quad {
  Natural y;
  Natural h;
  Natural m1;
  Natural m2;
};

/// cantor(cantor(sym_pair(cantor4(first), cantor4(second))), b). Symmetric in
/// the two quads, injective on (unordered quad pair, b).
Natural r_combine(const Quad& first, const Quad& second, bool b);

}  // namespace npa
