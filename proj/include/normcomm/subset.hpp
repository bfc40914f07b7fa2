#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace normcomm {

using Element = std::uint32_t;

/// A subset of a carrier 0..parent_size-1, stored as a packed bitset.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t parent_size);
  Subset(std::size_t parent_size, std::initializer_list<Element> elements);
  Subset(std::size_t parent_size, const std::vector<Element>& elements);

  static Subset full(std::size_t parent_size);

  std::size_t parent_size() const { return parent_size_; }

  bool contains(Element x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  /// Returns true when x was not already present.
  bool insert(Element x) {
    auto& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }
  void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == parent_size_; }
  std::vector<Element> elements() const;

  bool is_subset_of(const Subset& other) const;
  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }

  friend bool operator==(const Subset&, const Subset&) = default;

  /// Deterministic total order: by size, then by the sorted element lists.
  friend std::strong_ordering canonical_order(const Subset& a, const Subset& b);

 private:
  std::size_t parent_size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A binary relation on a carrier, stored as a row-major bit matrix.
class BinaryRelation {
 public:
  BinaryRelation() = default;
  explicit BinaryRelation(std::size_t parent_size);

  static BinaryRelation diagonal(std::size_t parent_size);

  std::size_t parent_size() const { return parent_size_; }
  bool contains(Element a, Element b) const { return rows_[a].contains(b); }
  bool insert(Element a, Element b) { return rows_[a].insert(b); }
  const Subset& row(Element a) const { return rows_[a]; }

  std::size_t count() const;
  bool is_subset_of(const BinaryRelation& other) const;
  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::size_t parent_size_ = 0;
  std::vector<Subset> rows_;
};

}  // namespace normcomm
