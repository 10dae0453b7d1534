#pragma once

#include <string>
#include <string_view>

#include "posetsim/model.hpp"
#include "posetsim/rank_measures.hpp"

namespace posetsim {

// Run files are UTF-8 text. Line 1 is `#type: <shape>`; later lines are
// blank, `#` comments, or tab-separated data rows:
//   antichain / chain        id
//   partition / ordered_partition   id <TAB> class   (1-based)
//   partition_of_chains      id <TAB> class <TAB> rank  (both 1-based)
// Chain rows appear in rank order. Ranks within a class must be contiguous
// from 1, and class indices must leave no class empty.
ResultSet parse_runfile(std::string_view text, std::string label = "");

// Canonical text form; parsing it back yields an equal result set.
std::string serialize_runfile(const ResultSet& rs);

// One relevant element id per line; blank lines and `#` comments ignored.
Qrels parse_qrels(std::string_view text);

}  // namespace posetsim
