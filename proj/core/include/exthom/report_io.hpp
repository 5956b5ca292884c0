#ifndef EXTHOM_REPORT_IO_HPP
#define EXTHOM_REPORT_IO_HPP

#include <string>
#include <vector>

#include "exthom/bounds.hpp"
#include "exthom/polynomials.hpp"
#include "exthom/scan.hpp"
#include "exthom/structure.hpp"

namespace exthom {

/// JSON serialization with a fixed field order, so identical inputs give
/// byte-identical output. All counts are exact decimal strings, rationals
/// are "num/den" strings; nothing is emitted in floating point.
std::string to_json(const BoundReport& report, int indent = 2);
std::string to_json(const std::vector<BoundReport>& reports, int indent = 2);
std::string to_json(const ScanReport& report, int indent = 2);
std::string to_json(const CountPolynomial& poly, int indent = 2);
std::string to_json(const SwapCertificate& cert, int indent = 2);
std::string to_json(const BstVerdict& verdict, int indent = 2);

/// Inverses of the serializers above (throw std::invalid_argument on
/// malformed documents). Round-tripping preserves every field.
BoundReport bound_report_from_json(const std::string& text);
std::vector<BoundReport> bound_reports_from_json(const std::string& text);
ScanReport scan_report_from_json(const std::string& text);
CountPolynomial polynomial_from_json(const std::string& text);

/// CSV: one row per graph×bound for verify runs; for scans, the value table
/// when present, otherwise one row per violation. Fields containing commas
/// or quotes are quoted.
std::string to_csv(const std::vector<BoundReport>& reports);
std::string to_csv(const ScanReport& report);

const char* verdict_name(BoundVerdict v);

} // namespace exthom

#endif
