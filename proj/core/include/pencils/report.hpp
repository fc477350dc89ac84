#ifndef PENCILS_REPORT_HPP
#define PENCILS_REPORT_HPP

#include <string>

#include "pencils/driver.hpp"
#include "pencils/parser.hpp"

namespace pencils {

/// The output document as canonical JSON text. Deterministic: fixed key
/// order, exact strings for every number, no timing data.
std::string render_json(const ParsedInput& input, const DriverResult& result);

/// Human-readable report for standard output; elapsed wall-clock seconds
/// are appended here and only here.
std::string render_text(const ParsedInput& input, const DriverResult& result,
                        double seconds);

}  // namespace pencils

#endif
