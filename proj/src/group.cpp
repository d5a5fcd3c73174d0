#include "sumfree/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "sumfree/error.hpp"

namespace sumfree {
namespace {

constexpr std::size_t kExhaustiveAssociativityOrder = 64;
constexpr std::size_t kSampledAssociativityTriples = 1'000'000;

std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream out;
  out << "(" << a << "," << b << "," << c << ")";
  return out.str();
}

void check_order(std::size_t order) {
  if (order == 0) throw Error(ErrorKind::Parse, "group order must be positive");
  if (order > kMaxGroupOrder) {
    throw Error(ErrorKind::OrderOverflow,
                "group order " + std::to_string(order) + " exceeds " +
                    std::to_string(kMaxGroupOrder));
  }
}

std::size_t find_identity(std::size_t n, const std::vector<TableEntry>& t) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) {
      ok = t[e * n + g] == g && t[g * n + e] == g;
    }
    if (ok) return e;
  }
  throw Error(ErrorKind::Axiom, "table has no two-sided identity element");
}

}  // namespace

GroupTable::GroupTable(std::size_t order, std::vector<TableEntry> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  check_order(order_);
  const std::size_t n = order_;
  if (table_.size() != n * n) {
    throw Error(ErrorKind::Parse, "table has " + std::to_string(table_.size()) +
                                      " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n) {
      throw Error(ErrorKind::Axiom, "closure fails: " + std::to_string(i / n) + "+" +
                                        std::to_string(i % n) + " = " +
                                        std::to_string(table_[i]) + " is out of range");
    }
  }

  if (const std::size_t e = find_identity(n, table_); e != 0) {
    auto relabel = [e](std::size_t x) -> std::size_t {
      return x == e ? 0 : (x == 0 ? e : x);
    };
    std::vector<TableEntry> renumbered(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        renumbered[relabel(a) * n + relabel(b)] =
            static_cast<TableEntry>(relabel(table_[a * n + b]));
      }
    }
    table_ = std::move(renumbered);
  }

  neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto r = row(static_cast<Element>(a));
    const auto it = std::find(r.begin(), r.end(), 0);
    if (it == r.end()) {
      throw Error(ErrorKind::Axiom, "element " + std::to_string(a) + " has no inverse");
    }
    const auto inv = static_cast<Element>(it - r.begin());
    if (add(inv, static_cast<Element>(a)) != 0) {
      throw Error(ErrorKind::Axiom, "element " + std::to_string(a) +
                                        " has no two-sided inverse");
    }
    neg_[a] = inv;
  }

  auto check_triple = [this](Element a, Element b, Element c) {
    if (add(add(a, b), c) != add(a, add(b, c))) {
      throw Error(ErrorKind::Axiom, "associativity fails at " + triple_text(a, b, c));
    }
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL ^ n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < kSampledAssociativityTriples; ++i) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }
  }
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

GroupTable make_cyclic(std::size_t m) {
  check_order(m);
  std::vector<TableEntry> t(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a * m + b] = static_cast<TableEntry>((a + b) % m);
  return GroupTable(m, std::move(t), "Z" + std::to_string(m));
}

GroupTable make_elementary_abelian_2(unsigned n) {
  if (n > kMaxElementaryRank) {
    throw Error(ErrorKind::OrderOverflow,
                "Z2^" + std::to_string(n) + " exceeds the order cap");
  }
  const std::size_t order = std::size_t{1} << n;
  std::vector<TableEntry> t(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a * order + b] = static_cast<TableEntry>(a ^ b);
  return GroupTable(order, std::move(t), "Z2^" + std::to_string(n));
}

GroupTable make_dihedral(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::Parse, "dihedral parameter must be positive");
  check_order(2 * m);
  const std::size_t n = 2 * m;
  std::vector<TableEntry> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x % m, b = y % m;
      const bool xs = x >= m, ys = y >= m;
      std::size_t z;
      if (!xs && !ys) z = (a + b) % m;            // r^a r^b
      else if (!xs) z = m + (b + m - a) % m;      // r^a s r^b = s r^(b-a)
      else if (!ys) z = m + (a + b) % m;          // s r^a r^b
      else z = (b + m - a) % m;                   // s r^a s r^b = r^(b-a)
      t[x * n + y] = static_cast<TableEntry>(z);
    }
  }
  return GroupTable(n, std::move(t), "D" + std::to_string(m));
}

GroupTable make_quaternion() {
  // Unit u in {1,i,j,k} -> 0..3; element index = 2*u + (negative ? 1 : 0).
  // unit_product[u][v] = {sign, unit}.
  static constexpr int unit_product[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<TableEntry> t(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const auto& p = unit_product[x / 2][y / 2];
      const int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * p[0];
      t[x * 8 + y] = static_cast<TableEntry>(2 * p[1] + (sign < 0 ? 1 : 0));
    }
  }
  return GroupTable(8, std::move(t), "Q8");
}

GroupTable make_symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&perms](const std::array<int, 3>& q) {
    return static_cast<TableEntry>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<TableEntry> t(36);
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a * 6 + b] = index_of(c);
    }
  }
  return GroupTable(6, std::move(t), "S3");
}

GroupTable build_direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  check_order(n);
  std::vector<TableEntry> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g.add(static_cast<Element>(x / m), static_cast<Element>(y / m));
      const auto b = h.add(static_cast<Element>(x % m), static_cast<Element>(y % m));
      t[x * n + y] = static_cast<TableEntry>(a * m + b);
    }
  }
  return GroupTable(n, std::move(t), g.name() + "x" + h.name());
}

namespace {

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::Parse, "malformed group spec '" + std::string(whole) + "'");
  }
  return value;
}

GroupTable parse_factor(std::string_view f, std::string_view whole) {
  if (f == "Q8") return make_quaternion();
  if (f == "S3") return make_symmetric3();
  if (f.starts_with("Z2^")) {
    const auto n = parse_count(f.substr(3), whole);
    if (n > kMaxElementaryRank) {
      throw Error(ErrorKind::OrderOverflow, "Z2^" + std::to_string(n) + " exceeds the order cap");
    }
    return make_elementary_abelian_2(static_cast<unsigned>(n));
  }
  if (f.starts_with("Z")) {
    const auto m = parse_count(f.substr(1), whole);
    if (m == 0) throw Error(ErrorKind::Parse, "Z0 is not a group");
    if (m > kMaxGroupOrder) throw Error(ErrorKind::OrderOverflow, "Z" + std::to_string(m) + " exceeds the order cap");
    return make_cyclic(m);
  }
  if (f.starts_with("D")) {
    const auto m = parse_count(f.substr(1), whole);
    if (m == 0) throw Error(ErrorKind::Parse, "D0 is not a group");
    if (m > kMaxGroupOrder / 2) throw Error(ErrorKind::OrderOverflow, "D" + std::to_string(m) + " exceeds the order cap");
    return make_dihedral(m);
  }
  throw Error(ErrorKind::Parse, "malformed group spec '" + std::string(whole) + "'");
}

}  // namespace

GroupTable parse_group_spec(std::string_view expression) {
  if (expression.starts_with("file:")) {
    return from_table_file(std::filesystem::path(std::string(expression.substr(5))));
  }
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= expression.size(); ++i) {
    if (i == expression.size() || expression[i] == 'x') {
      factors.push_back(expression.substr(start, i - start));
      start = i + 1;
    }
  }
  for (const auto f : factors) {
    if (f.empty()) throw Error(ErrorKind::Parse, "malformed group spec '" + std::string(expression) + "'");
  }
  GroupTable result = parse_factor(factors.front(), expression);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    GroupTable next = parse_factor(factors[i], expression);
    if (result.order() * next.order() > kMaxGroupOrder) {
      throw Error(ErrorKind::OrderOverflow, "'" + std::string(expression) + "' exceeds the order cap");
    }
    result = build_direct_product(result, next);
  }
  return result;
}

GroupTable from_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t order = 0;
  std::string name = "table";
  std::vector<TableEntry> t;
  std::size_t rows = 0;

  auto fail = [&line_no](const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    if (order == 0) {
      std::string keyword;
      long long n = 0;
      if (!(fields >> keyword >> n) || keyword != "order") fail("expected 'order <n>'");
      if (n <= 0) fail("order must be positive");
      if (static_cast<std::size_t>(n) > kMaxGroupOrder) {
        throw Error(ErrorKind::OrderOverflow, "order " + std::to_string(n) + " exceeds the cap");
      }
      order = static_cast<std::size_t>(n);
      t.reserve(order * order);
      continue;
    }
    if (line.starts_with("name ")) {
      name = line.substr(5);
      continue;
    }
    if (rows == order) fail("unexpected extra row");
    for (std::size_t c = 0; c < order; ++c) {
      long long v = 0;
      if (!(fields >> v)) fail("row has fewer than " + std::to_string(order) + " entries");
      if (v < 0 || static_cast<std::size_t>(v) >= order) {
        throw Error(ErrorKind::Axiom, "closure fails: entry " + std::to_string(v) +
                                          " at row " + std::to_string(rows) + " is out of range");
      }
      t.push_back(static_cast<TableEntry>(v));
    }
    std::string extra;
    if (fields >> extra) fail("row has more than " + std::to_string(order) + " entries");
    ++rows;
  }
  if (order == 0) throw Error(ErrorKind::Parse, "missing 'order <n>' header");
  if (rows != order) {
    throw Error(ErrorKind::Parse, "expected " + std::to_string(order) + " rows, found " +
                                      std::to_string(rows));
  }
  return GroupTable(order, std::move(t), name);
}

GroupTable from_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open group table file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_table_text(buffer.str());
}

std::string to_table_text(const GroupTable& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (Element a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    for (std::size_t b = 0; b < r.size(); ++b) out << (b ? " " : "") << r[b];
    out << "\n";
  }
  out << "name " << g.name() << "\n";
  return out.str();
}

void save_table_file(const GroupTable& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write group table file '" + path.string() + "'");
  out << to_table_text(g);
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

std::size_t element_order(const GroupTable& g, Element x) {
  std::size_t k = 1;
  for (Element acc = x; acc != 0; acc = g.add(acc, x)) ++k;
  return k;
}

bool is_elementary_abelian_2(const GroupTable& g) {
  for (Element x = 1; x < g.order(); ++x) {
    if (g.add(x, x) != 0) return false;
  }
  // Every element being an involution forces commutativity.
  if (!g.is_abelian()) throw Error(ErrorKind::Axiom, "exponent-2 group is not abelian");
  return true;
}

}  // namespace sumfree
