#pragma once

#include <string>

#include "graphs.hpp"
#include "report.hpp"

namespace kellymod {

// Catalogue ids: thm-graph-1.4, thm-graph-1.5, thm-graph-4.1, thm-graph-4.2,
// thm-graph-4.3, thm-graph-4.4, claim-bipartite, claim-clawfree.
// params: v, k, p as applicable; optional "graph"/"graph2" texts run the
// check on that single pair instead of sweeping.
Report verify_graph_theorem(const std::string& id, const Json& params, const VerifyOptions& opts = {});

bool is_graph_theorem(const std::string& id);

}  // namespace kellymod
