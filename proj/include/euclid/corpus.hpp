#pragma once

#include <string>
#include <vector>

namespace euclid {

// Bundled construction scripts, keyed by proposition id ("I.1", ...). The
// same texts ship as scripts/*.euc for the CLI; a test keeps them in sync.
struct CorpusEntry {
  std::string id;        // proposition id
  std::string filename;  // shipped file name
  std::string text;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& id);

}  // namespace euclid
