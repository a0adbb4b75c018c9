#include "hyperseries/errata.hpp"

#include <fstream>

#include "hyperseries/core.hpp"

namespace hyperseries {

namespace {
std::string csv_field(const std::string& s) {
  bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}
}  // namespace

void write_errata_csv(const std::string& path, const std::string& metric_column,
                      const std::vector<ErrataRecord>& records) {
  std::ofstream f(path);
  if (!f) throw HsError("write_errata_csv: cannot open " + path);
  f << "formula_id,variant,grid_point," << metric_column << "\n";
  for (const ErrataRecord& r : records)
    f << csv_field(r.formula_id) << ',' << csv_field(r.variant) << ','
      << csv_field(r.grid_point) << ',' << csv_field(r.metric) << "\n";
}

}  // namespace hyperseries
