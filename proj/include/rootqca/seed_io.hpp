#pragma once

// JSON seed documents. Indices in documents are 1-based:
//   {"ell": 3, "n": 2, "ex": [1, 2], "inv": [], "btilde": [[0, 1], [-1, 0]],
//    "lambda": [[0, 1], [-1, 0]], "d": [1, 1]}
// btilde is N x |ex|, row-major; "d" lists the diagonal of D.

#include <string>

#include <json.hpp>

#include "rootqca/seed.hpp"

namespace rootqca {

struct SeedDocument {
  long ell = 0;
  int n = 0;
  IndexProfile idx;
  std::vector<std::vector<long>> btilde;
  std::vector<std::vector<long>> lambda;
  std::vector<long> d;
};

SeedDocument seed_document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SeedDocument& doc);
SeedDocument load_seed_document(const std::string& path);
/// With ell_override > 0 the document's ell is replaced.
Seed seed_from_document(const SeedDocument& doc, long ell_override = 0);

/// Current seed data plus frame in text form; "path" is 1-based.
nlohmann::json seed_summary(const Seed& s);

/// "1,2,1" -> {0,1,0}. Empty text or "-" is the empty word.
MutationWord parse_word(const std::string& text, int n);
nlohmann::json word_to_json(const MutationWord& w);

}  // namespace rootqca
