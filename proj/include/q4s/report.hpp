// Machine-readable verification records: one record per numeric check, with
// deterministic ordering and byte-stable JSON / CSV emission.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace q4s {

struct Record {
    std::string suite;
    std::string check_id;
    std::string paper_anchor;  // the identity or bound being checked, as text
    double q = 0.0;
    std::string cutoff;  // normalized half-integer text, or "-" when not used
    double value = 0.0;
    double expected = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// value must match expected within tol.
inline Record check_close(std::string suite, std::string check_id, std::string anchor, double q,
                          std::string cutoff, double value, double expected, double tol) {
    Record r{std::move(suite), std::move(check_id), std::move(anchor),
             q,               std::move(cutoff),   value,
             expected,        std::abs(value - expected), tol};
    r.pass = r.residual <= tol;
    return r;
}

// value must not exceed limit (one-sided bound; expected records the limit).
inline Record check_le(std::string suite, std::string check_id, std::string anchor, double q,
                       std::string cutoff, double value, double limit) {
    Record r{std::move(suite), std::move(check_id), std::move(anchor), q, std::move(cutoff),
             value,            limit,               value,             limit};
    r.pass = value <= limit;
    return r;
}

// value must reach at least threshold (one-sided bound from below).
inline Record check_ge(std::string suite, std::string check_id, std::string anchor, double q,
                       std::string cutoff, double value, double threshold) {
    Record r{std::move(suite), std::move(check_id), std::move(anchor),
             q,               std::move(cutoff),   value,
             threshold,       threshold - value,   0.0};
    r.pass = value >= threshold;
    return r;
}

inline void sort_records(std::vector<Record>& rs) {
    std::sort(rs.begin(), rs.end(), [](const Record& a, const Record& b) {
        return std::tie(a.suite, a.check_id, a.q, a.cutoff) <
               std::tie(b.suite, b.check_id, b.q, b.cutoff);
    });
}

inline bool all_pass(const std::vector<Record>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

namespace detail {

// Shortest-round-trip style fixed formatting: %.17g is byte-stable for a
// given value and always reparses to the same double.
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace detail

inline void emit_json(const std::vector<Record>& rs, std::ostream& os) {
    using detail::fmt_double;
    using detail::json_escape;
    os << "{\n  \"schema\": 1,\n  \"records\": [";
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const Record& r = rs[i];
        os << (i ? ",\n    {" : "\n    {") << "\"suite\": \"" << json_escape(r.suite)
           << "\", \"check_id\": \"" << json_escape(r.check_id) << "\", \"paper_anchor\": \""
           << json_escape(r.paper_anchor) << "\", \"q\": " << fmt_double(r.q)
           << ", \"cutoff\": \"" << json_escape(r.cutoff)
           << "\", \"value\": " << fmt_double(r.value)
           << ", \"expected\": " << fmt_double(r.expected)
           << ", \"residual\": " << fmt_double(r.residual)
           << ", \"tolerance\": " << fmt_double(r.tolerance)
           << ", \"pass\": " << (r.pass ? "true" : "false") << "}";
    }
    os << "\n  ]\n}\n";
}

inline void emit_csv(const std::vector<Record>& rs, std::ostream& os) {
    using detail::csv_field;
    using detail::fmt_double;
    os << "suite,check_id,paper_anchor,q,cutoff,value,expected,residual,tolerance,pass\n";
    for (const Record& r : rs) {
        os << csv_field(r.suite) << ',' << csv_field(r.check_id) << ','
           << csv_field(r.paper_anchor) << ',' << fmt_double(r.q) << ',' << csv_field(r.cutoff)
           << ',' << fmt_double(r.value) << ',' << fmt_double(r.expected) << ','
           << fmt_double(r.residual) << ',' << fmt_double(r.tolerance) << ','
           << (r.pass ? "true" : "false") << '\n';
    }
}

}  // namespace q4s
