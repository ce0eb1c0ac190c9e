#pragma once

#include "family.hpp"
#include "report.hpp"

namespace kellymod {

// Both strategies of the mod-p reconstruction statement: the kernel of
// W[t,k] mod p is computed and checked against the digit prediction, and
// family pairs satisfying the congruence hypothesis are classified
// (exhaustively, or on a seeded sample above the cap).
Report verify_main_theorem(unsigned v, unsigned t, unsigned k, uint32_t p, const VerifyOptions& opts = {});

// Exact inclusion-count lemma: pairs with equal counts on all (t+r)-subsets
// agree on every chain count between nested subsets.
Report verify_pouzet_lemma(unsigned v, unsigned t, unsigned r, const VerifyOptions& opts = {});

}  // namespace kellymod
