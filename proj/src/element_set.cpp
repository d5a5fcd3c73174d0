#include "sumfree/element_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sumfree/error.hpp"

namespace sumfree {
namespace {

std::size_t word_count(std::size_t order) { return (order + 63) / 64; }

}  // namespace

ElementSet::ElementSet(std::size_t order) : order_(order), words_(word_count(order), 0) {}

ElementSet::ElementSet(std::size_t order, std::initializer_list<Element> elements)
    : ElementSet(order) {
  for (const Element x : elements) {
    if (x >= order) throw Error(ErrorKind::Range, "element " + std::to_string(x) + " out of range");
    insert(x);
  }
}

ElementSet ElementSet::full(std::size_t order) {
  ElementSet s(order);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const auto tail = order % 64; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

ElementSet ElementSet::from_mask(std::size_t order, std::uint64_t mask) {
  ElementSet s(order);
  if (order < 64 && (mask >> order) != 0) {
    throw Error(ErrorKind::Range, "bitmask has bits beyond the group order");
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

ElementSet ElementSet::from_elements(std::size_t order, const std::vector<Element>& elements) {
  ElementSet s(order);
  for (const Element x : elements) {
    if (x >= order) throw Error(ErrorKind::Range, "element " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ElementSet ElementSet::complement() const {
  ElementSet c = full(order_);
  for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] &= ~words_[i];
  return c;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&out](Element x) { out.push_back(x); });
  return out;
}

std::uint64_t ElementSet::to_mask() const {
  if (order_ > 64) throw Error(ErrorKind::Range, "set does not fit a 64-bit mask");
  return words_.empty() ? 0 : words_[0];
}

std::string ElementSet::to_literal() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

std::string ElementSet::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string hex;
  for (std::size_t w = words_.size(); w-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) hex += digits[(words_[w] >> (4 * nib)) & 0xF];
  }
  const auto first = hex.find_first_not_of('0');
  return "0x" + (first == std::string::npos ? std::string("0") : hex.substr(first));
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const noexcept {
  if (order_ != other.order_) return order_ <=> other.order_;
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != other.words_[w]) return words_[w] <=> other.words_[w];
  }
  return std::strong_ordering::equal;
}

ElementSet parse_set_literal(std::string_view text, std::size_t order) {
  auto fail = [&text]() -> ElementSet {
    throw Error(ErrorKind::Parse, "malformed set literal '" + std::string(text) + "'");
  };
  ElementSet s(order);
  if (text.starts_with("0x") || text.starts_with("0X")) {
    const auto hex = text.substr(2);
    if (hex.empty()) return fail();
    std::size_t bit = 0;
    for (std::size_t i = hex.size(); i-- > 0; bit += 4) {
      unsigned v = 0;
      const auto [p, ec] = std::from_chars(hex.data() + i, hex.data() + i + 1, v, 16);
      if (ec != std::errc()) return fail();
      for (unsigned b = 0; b < 4; ++b) {
        if (!((v >> b) & 1U)) continue;
        if (bit + b >= order) throw Error(ErrorKind::Range, "bitmask has bits beyond the group order");
        s.insert(static_cast<Element>(bit + b));
      }
    }
    return s;
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return fail();
  auto body = text.substr(1, text.size() - 2);
  if (body.find_first_not_of(" ") == std::string_view::npos) return s;
  while (true) {
    const auto comma = body.find(',');
    auto item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    unsigned long v = 0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || p != item.data() + item.size()) return fail();
    if (v >= order) throw Error(ErrorKind::Range, "element " + std::to_string(v) + " out of range");
    s.insert(static_cast<Element>(v));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return s;
}

}  // namespace sumfree
