#pragma once

#include <iosfwd>

#include "json.hpp"

#include "corrsens/datagen.hpp"
#include "corrsens/engine.hpp"
#include "corrsens/oracle.hpp"

namespace corrsens {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const SensitivityReport& rep);
[[nodiscard]] Json to_json(const StreamRecord& rec);
[[nodiscard]] Json to_json(const OracleReport& rep);
[[nodiscard]] Json to_json(const BenchReport& rep);

// Flat key,value renderings for the csv output format.
void write_csv(std::ostream& out, const SensitivityReport& rep);
void write_csv(std::ostream& out, const OracleReport& rep);
void write_csv(std::ostream& out, const BenchReport& rep);
// One row per record; header emitted when `header` is set.
void write_csv_row(std::ostream& out, const StreamRecord& rec, bool header);

}  // namespace corrsens
