#pragma once

#include <string>

#include "report.hpp"
#include "tournaments.hpp"

namespace kellymod {

// Catalogue ids: thm-tournament-5.1, thm-tournament-5.2, thm-tournament-5.3,
// lemma-hypomorphe, claim-3hyp4hyp, lemma-41, thm-beta6.
// params: v, k, p as applicable; optional "tournament"/"tournament2" texts
// run the check on that single pair.
Report verify_tournament_theorem(const std::string& id, const Json& params, const VerifyOptions& opts = {});

bool is_tournament_theorem(const std::string& id);

}  // namespace kellymod
