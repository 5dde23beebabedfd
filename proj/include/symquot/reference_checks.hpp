#pragma once

#include "symquot/auditor.hpp"

namespace symquot {

/// Fixed values quoted in the literature on these quotients, recomputed from
/// scratch, followed by the finite scans of verify_paper_arguments(scan_bound).
std::vector<ArgumentCheck> reference_value_checks(std::int64_t scan_bound = 100);

}  // namespace symquot
