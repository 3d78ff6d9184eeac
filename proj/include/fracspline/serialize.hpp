#ifndef FRACSPLINE_SERIALIZE_HPP
#define FRACSPLINE_SERIALIZE_HPP

// JSON and CSV forms of the library types. Every number is written with 17
// significant digits.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracspline/clifford.hpp"
#include "fracspline/fourier.hpp"
#include "fracspline/fracops.hpp"

namespace fracspline {

using Json = nlohmann::ordered_json;

std::string format_double(double v);

/// JSON text with every floating-point number printed by format_double.
std::string dump_json(const Json& j, int indent = 2);

Json to_json(cdouble z); ///< [re, im]
Json to_json(const Paravector& p);
Json to_json(const ComplexParavector& p);
Json to_json(const CliffordElement& e);
Json to_json(const ComplexCliffordElement& e);
Json to_json(const ResidualReport& r);
Json to_json(const TransformValue& t);
Json to_json(const SplineEvalResult& r);

cdouble complex_from_json(const Json& j); ///< number or [re, im]
Paravector paravector_from_json(const Json& j);
ComplexParavector complex_paravector_from_json(const Json& j);
CliffordElement clifford_from_json(const Json& j);
ComplexCliffordElement complex_clifford_from_json(const Json& j);

/// s_re, s_im, v1_re, v1_im, ..., vn_re, vn_im.
std::vector<std::string> component_columns(int n);

/// Real and imaginary part of every component, in component_columns order.
std::vector<double> component_values(const SplineValue& v, int n);
std::vector<double> component_values(const TransformSample& v, int n);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);
void write_csv_row(std::ostream& os, const std::vector<double>& values);

/// Columns x, value (real) or x, s_re, s_im[, valid]; the grid must be uniform.
SampledSignal read_signal_csv(std::istream& is);

/// Columns x, s_re, s_im, valid.
void write_signal_csv(std::ostream& os, const SampledSignal& f);

} // namespace fracspline

#endif
