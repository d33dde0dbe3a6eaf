#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "npa/graph.hpp"
#include "npa/natural.hpp"

namespace npa {

/// Handle to an interned term. Only meaningful together with the TermStore
/// that issued it.
enum class TermId : std::uint32_t {};

/// One side of a merge: the merged component's term, the endpoint h-value,
/// and the component's (m1, m2).
struct TermChild {
  TermId y{};
  Natural h;
  Natural m1;
  Natural m2;

  friend bool operator==(const TermChild&, const TermChild&) = default;
};

/// c-encoding (y, m1, m2) of a parsed component. m1 == 0 marks an edge-free
/// (leaf) encoding.
struct CEncoding {
  TermId y{};
  Natural m1;
  Natural m2;

  friend bool operator==(const CEncoding&, const CEncoding&) = default;
};

inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 20;

/// Hash-consed store of encoding terms.
///
///   Leaf(label)             implicit (y, m1, m2) = (0, 0, label + 1)
///   Merge({c1, c2}, b)      m1 = m2(c1) + m2(c2) + 1, m2 = 2 * m1
///
/// Merge children are kept sorted by compare(), so equal terms share one id
/// regardless of argument order. A store is not thread-safe; confine it to one
/// thread and compare ids only within the same store.
class TermStore {
 public:
  TermStore() = default;
  TermStore(const TermStore&) = delete;
  TermStore& operator=(const TermStore&) = delete;
  TermStore(TermStore&&) = default;
  TermStore& operator=(TermStore&&) = default;

  TermId leaf(Label label);
  TermId merge(TermChild first, TermChild second, bool same_component);

  bool is_leaf(TermId t) const { return node(t).is_leaf; }
  Label leaf_label(TermId t) const { return node(t).label; }
  const TermChild& child(TermId t, std::size_t i) const { return node(t).children[i]; }
  bool indicator(TermId t) const { return node(t).indicator; }
  const Natural& m1(TermId t) const { return node(t).m1; }
  const Natural& m2(TermId t) const { return node(t).m2; }
  /// Merge nesting depth; leaves are 0.
  std::size_t depth(TermId t) const { return node(t).depth; }

  CEncoding encoding(TermId t) const { return {t, m1(t), m2(t)}; }

  /// Strict total order: Leaf < Merge; leaves by label; merges
  /// lexicographically by (first child, second child, indicator) with
  /// children compared by (y, h, m1, m2).
  std::strong_ordering compare(TermId a, TermId b) const;

  /// `L(<label>)` or `M(b=<0|1>; (<y>,<h>,<m1>,<m2>), (<y>,<h>,<m1>,<m2>))`.
  std::string serialize(TermId t) const;
  /// Length of serialize(t) without building it; saturates at SIZE_MAX.
  std::size_t serialized_size(TermId t) const;

  /// Exact numeric y-value of the term under the pairing combiner, or
  /// nullopt if an intermediate would exceed bit_budget bits.
  std::optional<Natural> evaluate(TermId t, std::size_t bit_budget = kDefaultBitBudget) const;

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    bool is_leaf = true;
    Label label = 0;
    std::array<TermChild, 2> children{};
    bool indicator = false;
    Natural m1;
    Natural m2;
    std::uint32_t depth = 0;
  };

  const Node& node(TermId t) const { return nodes_[static_cast<std::uint32_t>(t)]; }
  std::strong_ordering compare_child(const TermChild& a, const TermChild& b) const;
  void serialize_into(TermId t, std::string& out) const;
  TermId insert(Node n, std::size_t hash);

  std::vector<Node> nodes_;
  std::unordered_multimap<std::size_t, TermId> index_;
  mutable std::vector<std::size_t> serialized_size_cache_;
};

/// Evaluates terms numerically, caching sub-results whose size is at most
/// cache_limit_bits.
class NumericEvaluator {
 public:
  NumericEvaluator(const TermStore& store, std::size_t bit_budget = kDefaultBitBudget,
                   std::size_t cache_limit_bits = std::size_t{1} << 18)
      : store_(store), budget_(bit_budget), cache_limit_(cache_limit_bits) {}

  std::optional<Natural> value(TermId t);

  std::size_t bit_budget() const { return budget_; }

 private:
  const TermStore& store_;
  std::size_t budget_;
  std::size_t cache_limit_;
  std::unordered_map<std::uint32_t, Natural> cache_;
};

}  // namespace npa
