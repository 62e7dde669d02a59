#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cnlat {

enum class SuiteCorpus { Fixtures, Cn1, Cn2, Broken, All };

SuiteCorpus parse_corpus(const std::string& name);

struct SuiteItem {
  std::string invariant;
  std::string item;
  bool pass = true;
  std::string witness;
};

struct SuiteReport {
  std::vector<SuiteItem> entries;

  bool all_pass() const;
};

// Evaluates the cross-module property checks over the chosen corpus.
// Failures become report entries with witnesses, never exceptions; the
// report order is deterministic and independent of the thread count.
SuiteReport run_property_suite(SuiteCorpus corpus, std::uint64_t seed,
                               int threads);

std::string suite_report_json(const SuiteReport& report);

}  // namespace cnlat
