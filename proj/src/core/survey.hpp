#pragma once

#include <iosfwd>

#include "core/group.hpp"

namespace hamcay {

struct SurveyOptions {
  int max_order = 24;
  int workers = 1;
  long long dfs_node_cap = 100'000'000;
};

// Walks the standard catalog and every connected 2-generated Cayley digraph on
// it, runs the exhaustive and the travel-pattern searches plus the applicable
// quick tests, and appends one JSON record per digraph. Output is
// deterministic for a fixed option set, independent of worker count.
// Returns the number of records written.
long long run_survey(const SurveyOptions& opt, std::ostream& out);

}  // namespace hamcay
