#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <openssl/evp.h>

namespace hnlab::cli {

std::string digest(const json& inputs) {
  const std::string text = inputs.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::string out = "sha256:";
  char hex[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(hex, sizeof hex, "%02x", md[i]);
    out += hex;
  }
  return out;
}

json to_json(const Report& r) {
  json j;
  j["subcommand"] = r.subcommand;
  j["inputs"] = r.inputs;
  j["inputs_digest"] = digest(r.inputs);
  j["results"] = r.results;
  if (r.pass) j["pass"] = *r.pass;
  return j;
}

namespace {

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const Report& r, Format format) {
  if (format == Format::json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << r.subcommand << "  " << digest(r.inputs).substr(0, 19) << '\n';
  os << aligned(r.table);
  if (r.pass) os << (*r.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string render_error(const std::string& subcommand, const std::string& message, int code) {
  json j;
  j["subcommand"] = subcommand;
  j["error"] = message;
  j["exit_code"] = code;
  return j.dump(2) + "\n";
}

}  // namespace hnlab::cli
