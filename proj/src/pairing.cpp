#include "npa/pairing.hpp"

namespace npa {

Natural cantor_pair(const Natural& i, const Natural& j) {
  Natural s = i + j;
  Natural t = s * (s + 1);
  t /= 2;
  return t + j;
}

std::pair<Natural, Natural> sym_pair(const Natural& i, const Natural& j) { return {i + j, i * j}; }

Natural cantor_pair4(const Natural& a, const Natural& b, const Natural& c, const Natural& d) {
  return cantor_pair(cantor_pair(cantor_pair(a, b), c), d);
}

Natural r_combine(const Quad& first, const Quad& second, bool b) {
  const auto [sum, product] =
      sym_pair(cantor_pair4(first.y, first.h, first.m1, first.m2), cantor_pair4(second.y, second.h, second.m1, second.m2));
  return cantor_pair(cantor_pair(sum, product), Natural(b ? 1 : 0));
}

}  // namespace npa
