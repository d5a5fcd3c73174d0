#include <fstream>
#include <iostream>

#include "json.hpp"

#include "sumfree/claims.hpp"
#include "sumfree/error.hpp"

namespace sumfree::claims {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::RefutedAsExpected: return "refuted-as-expected";
  }
  return "fail";
}

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  return std::nullopt;
}

bool all_ok(std::span<const VerificationReport> reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return false;
  return true;
}

std::string render_reports(std::span<const VerificationReport> reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        arr.push_back({{"claim_id", r.claim_id},
                       {"group", r.group},
                       {"status", std::string(to_string(r.status))},
                       {"witnesses", r.witnesses},
                       {"runtime_ms", r.runtime_ms}});
      }
      return arr.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = "claim_id,group,status,witnesses,runtime_ms\n";
      for (const auto& r : reports) {
        out += csv_field(r.claim_id) + "," + csv_field(r.group) + "," +
               std::string(to_string(r.status)) + "," + csv_field(join(r.witnesses, "; ")) +
               "," + std::to_string(r.runtime_ms) + "\n";
      }
      return out;
    }
    case ReportFormat::Text: {
      std::string out;
      for (const auto& r : reports) {
        std::string preview = join(r.witnesses, "; ");
        if (preview.size() > 96) preview = preview.substr(0, 93) + "...";
        out += (r.status == Status::Fail ? "✗ " : "✓ ") + pad(r.claim_id, 14) + " " +
               pad(r.group, 8) + " " + pad(std::string(to_string(r.status)), 19) + " " +
               preview + "\n";
      }
      return out;
    }
  }
  return {};
}

void emit_report(std::span<const VerificationReport> reports, ReportFormat format,
                 const std::optional<std::filesystem::path>& out) {
  const std::string text = render_reports(reports, format);
  if (!out) {
    std::cout << text << std::flush;
    if (!std::cout) throw Error(ErrorKind::Io, "write to standard output failed");
    return;
  }
  std::ofstream file(*out);
  if (!file) throw Error(ErrorKind::Io, "cannot open '" + out->string() + "' for writing");
  file << text;
  if (!file) throw Error(ErrorKind::Io, "write to '" + out->string() + "' failed");
}

}  // namespace sumfree::claims
