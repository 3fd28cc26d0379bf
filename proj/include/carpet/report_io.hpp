// Text and JSON forms of traces, Wiener reports and validation reports.
// Wide integers are rendered as decimal strings everywhere (JSON numbers
// would silently lose precision past 2^53).
#pragma once

#include <ostream>

#include "json.hpp"

#include "carpet/metric.hpp"
#include "carpet/wiener.hpp"

namespace carpet {

nlohmann::json trace_to_json(const Word& w1, const Word& w2, const DistanceTrace& trace);
void write_trace_text(std::ostream& out, const Word& w1, const Word& w2,
                      const DistanceTrace& trace);

nlohmann::json report_to_json(const WienerReport& report, bool with_timings);
// One row per engine value: level, vertices, wiener, method[, seconds].
void write_report_tsv_header(std::ostream& out, bool with_timings);
void write_report_tsv(std::ostream& out, const WienerReport& report, bool with_timings);

nlohmann::json validation_to_json(const ValidationReport& report, bool with_timings);
void write_validation_text(std::ostream& out, const ValidationReport& report, bool with_timings);

}  // namespace carpet
