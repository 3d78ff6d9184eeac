#include "fracspline/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace fracspline {

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_value(std::string& out, const Json& j, int indent, int depth)
{
    const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const std::string colon = indent > 0 ? ": " : ":";
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            out += first ? "" : ",";
            out += pad + Json(key).dump() + colon;
            dump_value(out, value, indent, depth + 1);
            first = false;
        }
        out += close + '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            out += first ? "" : ",";
            out += pad;
            dump_value(out, value, indent, depth + 1);
            first = false;
        }
        out += close + ']';
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_double(v) : "null";
        return;
    }
    default:
        out += j.dump();
    }
}

double number_from_json(const Json& j, const char* what)
{
    if (!j.is_number())
        throw FormatError(std::string("expected a number for ") + what);
    return j.get<double>();
}

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing JSON member \"") + key + "\"");
    return j.at(key);
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(trim(cell));
    return cells;
}

bool parse_number(const std::string& s, double& v)
{
    if (s.empty())
        return false;
    char* end = nullptr;
    v = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

// Validated "n" and "coeffs" members of a serialized Clifford element.
std::pair<int, const Json*> element_shape(const Json& j)
{
    const Json& jn = member(j, "n");
    if (!jn.is_number_integer() || jn.get<int>() < 0 || jn.get<int>() > kMaxDimension)
        throw FormatError("element \"n\" must be an integer in [0, " + std::to_string(kMaxDimension) + "]");
    const int n = jn.get<int>();
    const Json& c = member(j, "coeffs");
    if (!c.is_array() || c.size() != (std::size_t{1} << n))
        throw FormatError("element \"coeffs\" must hold 2^n entries");
    return {n, &c};
}

} // namespace

std::string dump_json(const Json& j, int indent)
{
    std::string out;
    dump_value(out, j, indent, 0);
    return out;
}

Json to_json(cdouble z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Paravector& p)
{
    Json v = Json::array();
    for (int i = 1; i <= p.dimension(); ++i)
        v.push_back(p.vec(i));
    return Json{{"s", p.scalar()}, {"v", v}};
}

Json to_json(const ComplexParavector& p)
{
    Json v = Json::array();
    for (int i = 1; i <= p.dimension(); ++i)
        v.push_back(to_json(p.vec(i)));
    return Json{{"s", to_json(p.scalar())}, {"v", v}};
}

Json to_json(const CliffordElement& e)
{
    Json c = Json::array();
    for (double x : e.coefficients())
        c.push_back(x);
    return Json{{"n", e.dimension()}, {"coeffs", c}};
}

Json to_json(const ComplexCliffordElement& e)
{
    Json c = Json::array();
    for (cdouble x : e.coefficients())
        c.push_back(to_json(x));
    return Json{{"n", e.dimension()}, {"coeffs", c}};
}

Json to_json(const ResidualReport& r)
{
    auto atoms = [](const AtomSum& s) {
        Json a = Json::array();
        for (const auto& t : s)
            a.push_back(Json{{"shift", t.shift}, {"coefficient", to_json(t.coefficient)}});
        return a;
    };
    Json j{{"family", r.family},
           {"order", r.order},
           {"K", r.truncation},
           {"grid", Json{{"lo", r.grid.lo}, {"hi", r.grid.hi}, {"count", r.grid.count}}},
           {"max_residual", r.max_residual},
           {"tail_bound", r.tail_bound},
           {"excluded_omegas", r.excluded_omegas},
           {"omegas", r.omegas},
           {"residuals", r.residuals},
           {"coefficient_error", r.coefficient_error},
           {"analytic_atoms", atoms(r.analytic_atoms)},
           {"recovered_atoms", atoms(r.recovered_atoms)}};
    if (r.partial_sum_modulus)
        j["partial_sum_modulus"] = *r.partial_sum_modulus;
    if (r.zero_frequency_error)
        j["zero_frequency_error"] = *r.zero_frequency_error;
    return j;
}

Json to_json(const TransformValue& t)
{
    Json v = std::visit([](const auto& x) { return to_json(x); }, t.value);
    return Json{{"omega", t.omega}, {"value", v}};
}

Json to_json(const SplineEvalResult& r)
{
    Json v = std::visit(
        [](const auto& x) -> Json {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>)
                return x;
            else
                return to_json(x);
        },
        r.value);
    return Json{{"x", r.x}, {"value", v}, {"terms_used", r.terms_used}};
}

cdouble complex_from_json(const Json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_array() && j.size() == 2)
        return {number_from_json(j[0], "real part"), number_from_json(j[1], "imaginary part")};
    throw FormatError("expected a number or [re, im]");
}

Paravector paravector_from_json(const Json& j)
{
    const Json& v = member(j, "v");
    if (!v.is_array())
        throw FormatError("paravector \"v\" must be an array");
    std::vector<double> xs;
    for (const auto& x : v)
        xs.push_back(number_from_json(x, "paravector component"));
    if (xs.size() > static_cast<std::size_t>(kMaxDimension))
        throw DimensionError("paravector dimension exceeds the supported maximum");
    return Paravector(number_from_json(member(j, "s"), "paravector scalar"), std::span<const double>(xs));
}

ComplexParavector complex_paravector_from_json(const Json& j)
{
    const Json& v = member(j, "v");
    if (!v.is_array())
        throw FormatError("paravector \"v\" must be an array");
    std::vector<cdouble> xs;
    for (const auto& x : v)
        xs.push_back(complex_from_json(x));
    if (xs.size() > static_cast<std::size_t>(kMaxDimension))
        throw DimensionError("paravector dimension exceeds the supported maximum");
    return ComplexParavector(complex_from_json(member(j, "s")), std::span<const cdouble>(xs));
}

CliffordElement clifford_from_json(const Json& j)
{
    const auto [n, coeffs] = element_shape(j);
    std::vector<double> c;
    for (const auto& x : *coeffs)
        c.push_back(number_from_json(x, "coefficient"));
    return CliffordElement(n, std::span<const double>(c));
}

ComplexCliffordElement complex_clifford_from_json(const Json& j)
{
    const auto [n, coeffs] = element_shape(j);
    std::vector<cdouble> c;
    for (const auto& x : *coeffs)
        c.push_back(complex_from_json(x));
    return ComplexCliffordElement(n, std::span<const cdouble>(c));
}

std::vector<std::string> component_columns(int n)
{
    std::vector<std::string> c{"s_re", "s_im"};
    for (int i = 1; i <= n; ++i) {
        c.push_back("v" + std::to_string(i) + "_re");
        c.push_back("v" + std::to_string(i) + "_im");
    }
    return c;
}

namespace {

std::vector<double> paravector_values(const ComplexParavector& p, int n)
{
    std::vector<double> out{p.scalar().real(), p.scalar().imag()};
    for (int i = 1; i <= n; ++i) {
        const cdouble c = i <= p.dimension() ? p.vec(i) : cdouble(0.0);
        out.push_back(c.real());
        out.push_back(c.imag());
    }
    return out;
}

std::vector<double> scalar_values(cdouble z, int n)
{
    std::vector<double> out(2 + 2 * static_cast<std::size_t>(n), 0.0);
    out[0] = z.real();
    out[1] = z.imag();
    return out;
}

} // namespace

std::vector<double> component_values(const SplineValue& v, int n)
{
    if (const auto* d = std::get_if<double>(&v))
        return scalar_values(*d, n);
    if (const auto* z = std::get_if<cdouble>(&v))
        return scalar_values(*z, n);
    return paravector_values(std::get<ComplexParavector>(v), n);
}

std::vector<double> component_values(const TransformSample& v, int n)
{
    if (const auto* z = std::get_if<cdouble>(&v))
        return scalar_values(*z, n);
    return paravector_values(std::get<ComplexParavector>(v), n);
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? "," : "") << cells[i];
    os << '\n';
}

void write_csv_row(std::ostream& os, const std::vector<double>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << format_double(values[i]);
    os << '\n';
}

SampledSignal read_signal_csv(std::istream& is)
{
    std::vector<double> xs;
    std::vector<cdouble> vs;
    std::vector<char> valid;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto cells = split_csv(line);
        double x = 0.0;
        if (!parse_number(cells[0], x)) {
            if (xs.empty() && line_no == 1)
                continue; // header
            throw FormatError("line " + std::to_string(line_no) + ": x is not a number");
        }
        if (cells.size() < 2)
            throw FormatError("line " + std::to_string(line_no) + ": expected columns x,value");
        double re = 0.0;
        double im = 0.0;
        if (!parse_number(cells[1], re) || (cells.size() >= 3 && !parse_number(cells[2], im)))
            throw FormatError("line " + std::to_string(line_no) + ": value is not a number");
        double flag = 1.0;
        if (cells.size() >= 4 && (!parse_number(cells[3], flag) || (flag != 0.0 && flag != 1.0)))
            throw FormatError("line " + std::to_string(line_no) + ": valid flag must be 0 or 1");
        xs.push_back(x);
        vs.emplace_back(re, im);
        valid.push_back(flag != 0.0 ? 1 : 0);
    }
    if (xs.size() < 2)
        throw FormatError("input signal needs at least two samples");
    if (xs.front() < 0.0)
        throw FormatError("input grid must start at x >= 0");
    const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    if (!(step > 0.0))
        throw FormatError("input grid must be increasing");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double expected = xs.front() + static_cast<double>(i) * step;
        if (std::abs(xs[i] - expected) > 1e-6 * step)
            throw FormatError("input grid is not uniform near x = " + format_double(xs[i]));
    }
    SampledSignal f(xs.front(), step, std::move(vs));
    f.valid = std::move(valid);
    return f;
}

void write_signal_csv(std::ostream& os, const SampledSignal& f)
{
    write_csv_row(os, std::vector<std::string>{"x", "s_re", "s_im", "valid"});
    for (std::size_t i = 0; i < f.size(); ++i) {
        os << format_double(f.x(i)) << ',' << format_double(f.samples[i].real()) << ','
           << format_double(f.samples[i].imag()) << ',' << (f.is_valid(i) ? 1 : 0) << '\n';
    }
}

} // namespace fracspline
