#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "dirichlet_rkhs/diagnostics.h"
#include "dirichlet_rkhs/interpolation.h"

namespace dirichlet_rkhs {

using Json = nlohmann::ordered_json;

/// "%.17g": 17 significant digits, lowercase exponent. Non-finite values
/// become null.
std::string format_number(double value);

/// Deterministic serializer: two-space indentation, numbers via
/// format_number, arrays of scalars on one line.
std::string dump_json(const Json& value);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& value);
/// Parses the CLI form "re,im" (or a bare real "re").
Complex parse_complex(const std::string& text);

/// Point files are JSON arrays of [sigma, t] pairs.
Json points_to_json(const PointSequence& sequence);
PointSequence points_from_json(const Json& value);

Json complex_vector_to_json(const ComplexVector& values);
ComplexVector complex_vector_from_json(const Json& value);

Json space_to_json(const SpaceId& space);
Json report_to_json(const SequenceReport& report);
Json equivalence_to_json(const EquivalenceReport& report);
/// Space tag, nodes, coefficients, representation tag and residual report.
Json interpolant_to_json(const Interpolant& f);

Json read_json_file(const std::string& path);

}  // namespace dirichlet_rkhs
