#include "zcol/json_io.hpp"

#include <fstream>

#include <json.hpp>

namespace zcol {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["title"] = rep.title;
  j["all_confirmed"] = rep.all_confirmed();
  j["hypothesis_consistent"] = rep.hypothesis_consistent;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& row : rep.rows) {
    nlohmann::ordered_json r;
    r["p"] = row.p;
    r["q"] = row.q;
    r["r"] = row.r;
    r["instance"] = row.instance;
    r["claimed"] = row.claimed;
    r["computed"] = row.computed;
    r["status"] = status_name(row.status);
    r["witness"] = row.witness;
    r["notes"] = row.notes;
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& rep) {
  std::string out = "p,q,r,claimed,computed,status,witness\n";
  for (const ReportRow& row : rep.rows) {
    out += std::to_string(row.p) + ',' + std::to_string(row.q) + ',' + std::to_string(row.r) +
           ',' + csv_field(row.claimed) + ',' + csv_field(row.computed) + ',' +
           status_name(row.status) + ',' + csv_field(row.witness) + '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::IoFailure, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out.good()) fail(errc::IoFailure, "failed writing " + path);
}

}  // namespace zcol
