#include "rootqca/seed_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rootqca {

namespace {

std::vector<std::vector<long>> matrix_field(const nlohmann::json& j, const char* key, int rows, int cols) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("seed document: missing \"") + key + "\"");
  const auto m = j.at(key).get<std::vector<std::vector<long>>>();
  if (static_cast<int>(m.size()) != rows)
    throw std::invalid_argument(std::string("seed document: \"") + key + "\" needs " + std::to_string(rows) + " rows");
  for (const auto& r : m)
    if (static_cast<int>(r.size()) != cols)
      throw std::invalid_argument(std::string("seed document: \"") + key + "\" needs " + std::to_string(cols) +
                                  " columns");
  return m;
}

std::vector<int> index_list(const nlohmann::json& j, const char* key, int n) {
  std::vector<int> out;
  if (!j.contains(key)) return out;
  for (int v : j.at(key).get<std::vector<int>>()) {
    if (v < 1 || v > n)
      throw std::invalid_argument(std::string("seed document: \"") + key + "\" entry out of range 1.." +
                                  std::to_string(n));
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

SeedDocument seed_document_from_json(const nlohmann::json& j) {
  SeedDocument doc;
  try {
    doc.ell = j.at("ell").get<long>();
    doc.n = j.at("n").get<int>();
    if (doc.n <= 0) throw std::invalid_argument("seed document: n must be positive");
    doc.idx.n = doc.n;
    doc.idx.ex = j.contains("ex") ? index_list(j, "ex", doc.n) : IndexProfile::all_exchangeable(doc.n).ex;
    doc.idx.inv = index_list(j, "inv", doc.n);
    doc.idx.validate();
    const int m = static_cast<int>(doc.idx.ex.size());
    doc.btilde = matrix_field(j, "btilde", doc.n, m);
    doc.lambda = matrix_field(j, "lambda", doc.n, doc.n);
    doc.d = j.contains("d") ? j.at("d").get<std::vector<long>>() : std::vector<long>(m, 1);
    if (static_cast<int>(doc.d.size()) != m) throw std::invalid_argument("seed document: \"d\" needs one entry per exchangeable index");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("seed document: ") + e.what());
  }
  return doc;
}

nlohmann::json to_json(const SeedDocument& doc) {
  std::vector<int> ex, inv;
  for (int i : doc.idx.ex) ex.push_back(i + 1);
  for (int i : doc.idx.inv) inv.push_back(i + 1);
  return {{"ell", doc.ell}, {"n", doc.n},           {"ex", ex}, {"inv", inv},
          {"btilde", doc.btilde}, {"lambda", doc.lambda}, {"d", doc.d}};
}

SeedDocument load_seed_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open seed file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("seed file '" + path + "': " + e.what());
  }
  return seed_document_from_json(j);
}

Seed seed_from_document(const SeedDocument& doc, long ell_override) {
  const long ell = ell_override > 0 ? ell_override : doc.ell;
  if (ell <= 0) throw std::invalid_argument("seed document: ell must be positive");
  return make_root_seed(Bicharacter(ell, doc.lambda), IntMatrix(doc.btilde), doc.d, doc.idx);
}

nlohmann::json seed_summary(const Seed& s) {
  std::vector<std::vector<long>> lam(s.n(), std::vector<long>(s.n()));
  for (int i = 0; i < s.n(); ++i)
    for (int j = 0; j < s.n(); ++j) lam[i][j] = s.lambda.signed_at(i, j);
  SeedDocument doc{s.ell(), s.n(), s.idx, s.btilde.to_rows(), lam, s.d};
  nlohmann::json j = to_json(doc);
  j["path"] = word_to_json(s.path);
  j["frame"] = frame_strings(s);
  return j;
}

MutationWord parse_word(const std::string& text, int n) {
  MutationWord w;
  if (text.empty() || text == "-") return w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("word: bad index '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("word: bad index '" + tok + "'");
    if (k < 1 || k > n) throw std::invalid_argument("word: index " + tok + " out of range 1.." + std::to_string(n));
    w.push_back(k - 1);
  }
  return w;
}

nlohmann::json word_to_json(const MutationWord& w) {
  auto j = nlohmann::json::array();
  for (int k : w) j.push_back(k + 1);
  return j;
}

}  // namespace rootqca
