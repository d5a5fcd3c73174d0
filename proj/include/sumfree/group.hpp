#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumfree {

using Element = std::uint32_t;
using TableEntry = std::uint16_t;

inline constexpr std::size_t kMaxGroupOrder = 4096;
inline constexpr unsigned kMaxElementaryRank = 12;

// A finite group given by its Cayley table. The operation is written
// additively whether or not the group is abelian. The identity is always
// element 0. Instances are immutable once constructed.
class GroupTable {
 public:
  // Validates the full axiom suite and renumbers so that the identity is 0.
  // `table` is row-major: table[a * order + b] = a + b.
  GroupTable(std::size_t order, std::vector<TableEntry> table, std::string name);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  Element add(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  static constexpr Element identity() noexcept { return 0; }

  std::span<const TableEntry> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }

  bool is_abelian() const noexcept;

  bool operator==(const GroupTable& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<TableEntry> table_;
  std::vector<Element> neg_;
  std::string name_;
};

// Builds a group from an expression: Z<m>, Z2^<n>, D<m>, Q8, S3,
// <spec>x<spec>, or file:<path>.
GroupTable parse_group_spec(std::string_view expression);

// Index of (a, b) is a * h.order() + b.
GroupTable build_direct_product(const GroupTable& g, const GroupTable& h);

GroupTable make_cyclic(std::size_t m);
GroupTable make_elementary_abelian_2(unsigned n);
// Dihedral group of order 2m: index k is r^k, index m + k is s r^k.
GroupTable make_dihedral(std::size_t m);
// Index order: 1, -1, i, -i, j, -j, k, -k.
GroupTable make_quaternion();
// Permutations of {0,1,2} in lexicographic order, (p + q)(x) = p(q(x)).
GroupTable make_symmetric3();

GroupTable from_table_text(std::string_view text);
GroupTable from_table_file(const std::filesystem::path& path);
std::string to_table_text(const GroupTable& g);
void save_table_file(const GroupTable& g, const std::filesystem::path& path);

std::size_t element_order(const GroupTable& g, Element x);
bool is_elementary_abelian_2(const GroupTable& g);

}  // namespace sumfree
