#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/group.hpp"

namespace sumfree {

// Subset of a group of fixed order, stored as a bitmask over element
// indices. Bits at positions >= order are always zero. Sets compare by
// bitmask value, most significant word first.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t order);
  ElementSet(std::size_t order, std::initializer_list<Element> elements);

  static ElementSet full(std::size_t order);
  // Low 64 bits only; requires order <= 64 or a mask fitting the order.
  static ElementSet from_mask(std::size_t order, std::uint64_t mask);
  static ElementSet from_elements(std::size_t order, const std::vector<Element>& elements);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Element x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;
  ElementSet complement() const;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  std::vector<Element> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }

  // Requires order() <= 64.
  std::uint64_t to_mask() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  // "{i1,i2,...}" in ascending order.
  std::string to_literal() const;
  // "0x..." hexadecimal bitmask.
  std::string to_hex() const;

  bool operator==(const ElementSet& other) const noexcept = default;
  std::strong_ordering operator<=>(const ElementSet& other) const noexcept;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

// Accepts "{i1,i2,...}" or "0x<hex>".
ElementSet parse_set_literal(std::string_view text, std::size_t order);

}  // namespace sumfree
