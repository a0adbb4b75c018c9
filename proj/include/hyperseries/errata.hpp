#pragma once

#include <string>
#include <vector>

namespace hyperseries {

/// One audited reading of a printed formula: which variant was run, where,
/// and what the audit measured (a residual for floating-point audits, the
/// first differing coefficient index for the exact ones).
struct ErrataRecord {
  std::string formula_id;
  std::string variant;     // "printed" or "corrected"
  std::string grid_point;  // parameter set / evaluation point
  std::string metric;      // residual or diff_order value, or "pass"
};

/// Line-oriented CSV: formula_id,variant,grid_point,<metric column>.
void write_errata_csv(const std::string& path,
                      const std::string& metric_column,
                      const std::vector<ErrataRecord>& records);

}  // namespace hyperseries
