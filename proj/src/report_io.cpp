#include "carpet/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace carpet {
namespace {

using nlohmann::json;

std::string point_str(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

json point_json(LatticePoint p) { return json{{"x", p.x}, {"y", p.y}}; }

std::string seconds_str(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s;
    return os.str();
}

}  // namespace

json trace_to_json(const Word& w1, const Word& w2, const DistanceTrace& trace) {
    json j{{"word1", to_string(w1)},
           {"word2", to_string(w2)},
           {"level", w1.level()},
           {"point1", point_json(word_to_point(w1))},
           {"point2", point_json(word_to_point(w2))},
           {"case", to_string(trace.kind.kind)},
           {"axis", to_string(trace.kind.travel_axis)},
           {"swapped", trace.kind.swapped},
           {"route", to_string(trace.route)},
           {"value", trace.value}};
    j["h"] = trace.h ? json(*trace.h) : json();
    j["l"] = trace.obstruction_index ? json(*trace.obstruction_index) : json();
    if (trace.corners) {
        j["corners"] = json{{"A", point_json(trace.corners->a)},
                            {"B", point_json(trace.corners->b)},
                            {"C", point_json(trace.corners->c)},
                            {"D", point_json(trace.corners->d)},
                            {"side", trace.corners->side},
                            {"hole_level", trace.corners->level}};
    } else {
        j["corners"] = json();
    }
    return j;
}

void write_trace_text(std::ostream& out, const Word& w1, const Word& w2,
                      const DistanceTrace& trace) {
    out << "word1=" << to_string(w1) << '\n';
    out << "word2=" << to_string(w2) << '\n';
    out << "level=" << w1.level() << '\n';
    out << "point1=" << point_str(word_to_point(w1)) << '\n';
    out << "point2=" << point_str(word_to_point(w2)) << '\n';
    out << "case=" << to_string(trace.kind.kind) << '\n';
    out << "axis=" << to_string(trace.kind.travel_axis) << '\n';
    out << "swapped=" << (trace.kind.swapped ? "true" : "false") << '\n';
    out << "h=" << (trace.h ? std::to_string(*trace.h) : "none") << '\n';
    out << "l=" << (trace.obstruction_index ? std::to_string(*trace.obstruction_index) : "none")
        << '\n';
    if (trace.corners) {
        out << "corners=" << point_str(trace.corners->a) << ' ' << point_str(trace.corners->b)
            << ' ' << point_str(trace.corners->c) << ' ' << point_str(trace.corners->d) << '\n';
        out << "side=" << trace.corners->side << '\n';
    } else {
        out << "corners=none\n";
    }
    out << "route=" << to_string(trace.route) << '\n';
    out << "value=" << trace.value << '\n';
}

namespace {

void report_rows(const WienerReport& report,
                 const std::function<void(const char*, uint128)>& emit) {
    if (report.method == Method::both) {
        emit("formula", report.wiener);
        emit("oracle", *report.oracle_value);
    } else {
        emit(report.method == Method::oracle ? "oracle" : "formula", report.wiener);
    }
}

}  // namespace

json report_to_json(const WienerReport& report, bool with_timings) {
    json j{{"level", report.level},
           {"vertices", report.vertex_count},
           {"method", to_string(report.method)},
           {"wiener", to_string(report.wiener)}};
    if (report.method == Method::both) {
        j["oracle"] = to_string(*report.oracle_value);
        j["agree"] = report.agreed();
    }
    if (with_timings) j["seconds"] = report.seconds;
    return j;
}

void write_report_tsv_header(std::ostream& out, bool with_timings) {
    out << "level\tvertices\twiener\tmethod";
    if (with_timings) out << "\tseconds";
    out << '\n';
}

void write_report_tsv(std::ostream& out, const WienerReport& report, bool with_timings) {
    report_rows(report, [&](const char* method, uint128 value) {
        out << report.level << '\t' << report.vertex_count << '\t' << to_string(value) << '\t'
            << method;
        if (with_timings) out << '\t' << seconds_str(report.seconds);
        out << '\n';
    });
}

json validation_to_json(const ValidationReport& report, bool with_timings) {
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
        json entry = trace_to_json(m.word1, m.word2, m.trace);
        entry["formula"] = m.formula_value;
        entry["oracle"] = m.oracle_value;
        mismatches.push_back(std::move(entry));
    }
    json j{{"level", report.level},
           {"pairs_checked", report.pairs_checked},
           {"mismatch_count", report.mismatch_count},
           {"ok", report.ok()},
           {"mismatches", std::move(mismatches)}};
    if (with_timings) j["seconds"] = report.seconds;
    return j;
}

void write_validation_text(std::ostream& out, const ValidationReport& report, bool with_timings) {
    out << "level=" << report.level << '\n';
    out << "pairs_checked=" << report.pairs_checked << '\n';
    out << "mismatch_count=" << report.mismatch_count << '\n';
    out << "ok=" << (report.ok() ? "true" : "false") << '\n';
    if (with_timings) out << "seconds=" << seconds_str(report.seconds) << '\n';
    if (!report.mismatches.empty()) {
        out << "stored_mismatches=" << report.mismatches.size() << '\n';
        std::size_t k = 0;
        for (const auto& m : report.mismatches) {
            out << "--- mismatch " << k++ << " (formula=" << m.formula_value
                << " oracle=" << m.oracle_value << ") ---\n";
            write_trace_text(out, m.word1, m.word2, m.trace);
        }
    }
}

}  // namespace carpet
