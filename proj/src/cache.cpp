#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "sumfree/claims.hpp"
#include "sumfree/error.hpp"

namespace sumfree::claims {
namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<std::filesystem::path> resolve_cache_dir(const RunOptions& options) {
  if (options.cache_dir) return options.cache_dir;
  if (const char* env = std::getenv(std::string(kCacheDirEnv).c_str()); env && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::filesystem::path entry_path(const std::filesystem::path& dir, const std::string& key) {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(key)));
  return dir / name;
}

json encode(const EnumerationResult& r, const std::string& key, std::size_t order) {
  json sets = json::array();
  for (const auto& s : r.maximal_sets) sets.push_back(s.to_hex());
  return json{{"key", key},
              {"order", order},
              {"total_sum_free", to_decimal(r.total_sum_free)},
              {"maximal_sets", sets}};
}

std::optional<EnumerationResult> decode(const json& j, const std::string& key, std::size_t order) {
  if (!j.is_object() || j.value("key", "") != key || j.value("order", 0U) != order) {
    return std::nullopt;
  }
  EnumerationResult r;
  r.total_sum_free = BigInt(j.at("total_sum_free").get<std::string>());
  for (const auto& s : j.at("maximal_sets")) {
    ElementSet set = parse_set_literal(s.get<std::string>(), order);
    ++r.size_histogram[set.size()];
    r.maximal_sets.push_back(std::move(set));
  }
  return r;
}

std::optional<json> read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return json::parse(in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

}  // namespace

CachedEnumeration cached_enumeration(const GroupTable& g, std::string_view spec,
                                     const RunOptions& options) {
  const auto dir = resolve_cache_dir(options);
  if (!dir) return {enumerate_maximal_sum_free(g, options.jobs), false};

  const std::string key = "enumerate-maximal|" + std::string(spec) + "|" + std::string(kCodeVersion);
  const auto path = entry_path(*dir, key);
  std::optional<EnumerationResult> cached;
  if (const auto j = read_json(path)) {
    try {
      cached = decode(*j, key, g.order());
    } catch (const std::exception&) {
      cached.reset();
    }
  }
  if (cached && !options.no_cache) return {std::move(*cached), false};

  CachedEnumeration out{enumerate_maximal_sum_free(g, options.jobs), false};
  if (cached) {
    out.cache_mismatch = !(*cached == out.result);
    return out;
  }
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Io, "cannot write cache entry '" + path.string() + "'");
  file << encode(out.result, key, g.order()).dump() << "\n";
  return out;
}

}  // namespace sumfree::claims
