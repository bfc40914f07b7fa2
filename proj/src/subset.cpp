#include "normcomm/subset.hpp"

#include <algorithm>
#include <bit>

namespace normcomm {

Subset::Subset(std::size_t parent_size)
    : parent_size_(parent_size), words_((parent_size + 63) / 64, 0) {}

Subset::Subset(std::size_t parent_size, std::initializer_list<Element> elements)
    : Subset(parent_size) {
  for (Element x : elements) insert(x);
}

Subset::Subset(std::size_t parent_size, const std::vector<Element>& elements)
    : Subset(parent_size) {
  for (Element x : elements) insert(x);
}

Subset Subset::full(std::size_t parent_size) {
  Subset s(parent_size);
  for (Element x = 0; x < parent_size; ++x) s.insert(x);
  return s;
}

std::size_t Subset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

Subset& Subset::operator|=(const Subset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::strong_ordering canonical_order(const Subset& a, const Subset& b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(),
                                                eb.end());
}

BinaryRelation::BinaryRelation(std::size_t parent_size)
    : parent_size_(parent_size), rows_(parent_size, Subset(parent_size)) {}

BinaryRelation BinaryRelation::diagonal(std::size_t parent_size) {
  BinaryRelation r(parent_size);
  for (Element x = 0; x < parent_size; ++x) r.insert(x, x);
  return r;
}

std::size_t BinaryRelation::count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

bool BinaryRelation::is_subset_of(const BinaryRelation& other) const {
  for (std::size_t a = 0; a < parent_size_; ++a)
    if (!rows_[a].is_subset_of(other.rows_[a])) return false;
  return true;
}

bool BinaryRelation::is_reflexive() const {
  for (Element a = 0; a < parent_size_; ++a)
    if (!contains(a, a)) return false;
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (Element a = 0; a < parent_size_; ++a)
    for (Element b : rows_[a].elements())
      if (!contains(b, a)) return false;
  return true;
}

bool BinaryRelation::is_transitive() const {
  for (Element a = 0; a < parent_size_; ++a)
    for (Element b : rows_[a].elements())
      if (!rows_[b].is_subset_of(rows_[a])) return false;
  return true;
}

}  // namespace normcomm
