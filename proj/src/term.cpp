#include "npa/term.hpp"

#include <algorithm>
#include <limits>

#include "npa/pairing.hpp"

namespace npa {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t child_hash(const TermChild& c) {
  return mix(static_cast<std::size_t>(c.y), hash_value(c.h));
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

}  // namespace

TermId TermStore::insert(Node n, std::size_t hash) {
  auto [lo, hi] = index_.equal_range(hash);
  for (auto it = lo; it != hi; ++it) {
    const Node& e = node(it->second);
    if (e.is_leaf != n.is_leaf) continue;
    if (n.is_leaf ? e.label == n.label
                  : e.indicator == n.indicator && e.children[0].y == n.children[0].y &&
                        e.children[1].y == n.children[1].y && e.children[0].h == n.children[0].h &&
                        e.children[1].h == n.children[1].h) {
      return it->second;
    }
  }
  const auto id = static_cast<TermId>(static_cast<std::uint32_t>(nodes_.size()));
  nodes_.push_back(std::move(n));
  index_.emplace(hash, id);
  return id;
}

TermId TermStore::leaf(Label label) {
  Node n;
  n.is_leaf = true;
  n.label = label;
  n.m1 = 0;
  n.m2 = Natural(label) + 1;
  return insert(std::move(n), mix(0x1eafULL, label));
}

TermId TermStore::merge(TermChild first, TermChild second, bool same_component) {
  if (compare_child(second, first) == std::strong_ordering::less) std::swap(first, second);
  Node n;
  n.is_leaf = false;
  n.indicator = same_component;
  n.m1 = first.m2 + second.m2 + 1;
  n.m2 = 2 * n.m1;
  n.depth = 1 + std::max(depth(first.y), depth(second.y));
  const auto hash = mix(mix(mix(0x3e76eULL, child_hash(first)), child_hash(second)), same_component ? 1 : 0);
  n.children = {std::move(first), std::move(second)};
  return insert(std::move(n), hash);
}

std::strong_ordering TermStore::compare_child(const TermChild& a, const TermChild& b) const {
  if (auto c = compare(a.y, b.y); c != 0) return c;
  if (auto c = cmp(a.h, b.h); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = cmp(a.m1, b.m1); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = cmp(a.m2, b.m2); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering TermStore::compare(TermId a, TermId b) const {
  if (a == b) return std::strong_ordering::equal;
  const Node& x = node(a);
  const Node& y = node(b);
  if (x.is_leaf != y.is_leaf) return x.is_leaf ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.is_leaf) return x.label <=> y.label;
  if (auto c = compare_child(x.children[0], y.children[0]); c != 0) return c;
  if (auto c = compare_child(x.children[1], y.children[1]); c != 0) return c;
  return x.indicator <=> y.indicator;
}

void TermStore::serialize_into(TermId t, std::string& out) const {
  const Node& n = node(t);
  if (n.is_leaf) {
    out += "L(" + std::to_string(n.label) + ")";
    return;
  }
  out += n.indicator ? "M(b=1; " : "M(b=0; ";
  for (std::size_t i = 0; i < 2; ++i) {
    if (i) out += ", ";
    const auto& c = n.children[i];
    out += '(';
    serialize_into(c.y, out);
    out += ',' + to_string(c.h) + ',' + to_string(c.m1) + ',' + to_string(c.m2) + ')';
  }
  out += ')';
}

std::string TermStore::serialize(TermId t) const {
  std::string out;
  serialize_into(t, out);
  return out;
}

std::size_t TermStore::serialized_size(TermId t) const {
  const auto idx = static_cast<std::uint32_t>(t);
  if (serialized_size_cache_.size() < nodes_.size()) serialized_size_cache_.resize(nodes_.size(), 0);
  if (serialized_size_cache_[idx] != 0) return serialized_size_cache_[idx];
  const Node& n = node(t);
  std::size_t size = 0;
  if (n.is_leaf) {
    size = 3 + std::to_string(n.label).size();
  } else {
    size = 7 + 2 + 1;  // "M(b=x; " ", " ")"
    for (const auto& c : n.children) {
      size = sat_add(size, serialized_size(c.y));
      size = sat_add(size, 5 + mpz_sizeinbase(c.h.get_mpz_t(), 10) + mpz_sizeinbase(c.m1.get_mpz_t(), 10) +
                               mpz_sizeinbase(c.m2.get_mpz_t(), 10));
    }
  }
  serialized_size_cache_[idx] = size;
  return size;
}

std::optional<Natural> TermStore::evaluate(TermId t, std::size_t bit_budget) const {
  NumericEvaluator eval(*this, bit_budget);
  return eval.value(t);
}

std::optional<Natural> NumericEvaluator::value(TermId t) {
  if (store_.is_leaf(t)) return Natural(0);
  if (auto it = cache_.find(static_cast<std::uint32_t>(t)); it != cache_.end()) return it->second;

  std::array<Quad, 2> quads;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& c = store_.child(t, i);
    auto y = value(c.y);
    if (!y) return std::nullopt;
    quads[i] = Quad{std::move(*y), c.h, c.m1, c.m2};
  }
  // Each pairing at most doubles the bit length (plus a few bits); bail out
  // before doing the work if the result cannot fit.
  auto pair_bits = [](std::size_t a, std::size_t b) { return 2 * (std::max(a, b) + 2); };
  std::array<std::size_t, 2> q4{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& q = quads[i];
    q4[i] = pair_bits(pair_bits(pair_bits(bit_length(q.y), bit_length(q.h)), bit_length(q.m1)), bit_length(q.m2));
  }
  const auto rho_sum = std::max(q4[0], q4[1]) + 1;
  const auto rho_prod = q4[0] + q4[1];
  const auto bound = pair_bits(pair_bits(rho_sum, rho_prod), 1);
  if (bound > budget_) return std::nullopt;

  Natural y = r_combine(quads[0], quads[1], store_.indicator(t));
  if (bit_length(y) > budget_) return std::nullopt;
  if (bit_length(y) <= cache_limit_) cache_.emplace(static_cast<std::uint32_t>(t), y);
  return y;
}

}  // namespace npa
