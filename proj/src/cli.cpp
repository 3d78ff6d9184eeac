#include "fracspline/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fracspline/fourier.hpp"
#include "fracspline/parallel.hpp"
#include "fracspline/splines.hpp"

namespace fracspline::cli {

namespace {

std::string lower(std::string s)
{
    for (auto& ch : s)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

double parse_double(const std::string& s)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParameterError("not a number: '" + s + "'");
    }
    if (used != s.size())
        throw ParameterError("not a number: '" + s + "'");
    return v;
}

FracOp parse_op(const std::string& s)
{
    const auto v = lower(s);
    if (v == "derivative")
        return FracOp::Derivative;
    if (v == "integral")
        return FracOp::Integral;
    if (v == "shifted")
        return FracOp::Shifted;
    throw ParameterError("unknown fracop '" + s + "' (derivative | integral | shifted)");
}

FractionalForm parse_form(const std::string& s)
{
    const auto v = lower(s);
    if (v == "rl" || v == "riemann-liouville")
        return FractionalForm::RiemannLiouville;
    if (v == "caputo")
        return FractionalForm::Caputo;
    throw ParameterError("unknown fractional form '" + s + "' (rl | caputo)");
}

MultiplierSign parse_sign(const std::string& s)
{
    const auto v = lower(s);
    if (v == "plus" || v == "+")
        return MultiplierSign::Plus;
    if (v == "minus" || v == "-")
        return MultiplierSign::Minus;
    throw ParameterError("unknown multiplier sign '" + s + "' (plus | minus)");
}

OutputFormat parse_format(const std::string& s)
{
    const auto v = lower(s);
    if (v == "csv")
        return OutputFormat::Csv;
    if (v == "json")
        return OutputFormat::Json;
    throw ParameterError("unknown output format '" + s + "' (csv | json)");
}

Paravector parse_upsilon(const std::vector<double>& xs)
{
    if (xs.empty())
        throw ParameterError("upsilon needs at least the scalar part");
    if (xs.size() - 1 > static_cast<std::size_t>(kMaxDimension))
        throw DimensionError("upsilon has more than " + std::to_string(kMaxDimension) + " vector components");
    return Paravector(xs[0], std::span<const double>(xs.data() + 1, xs.size() - 1));
}

cdouble json_complex(const Json& j)
{
    if (j.is_string())
        return parse_complex(j.get<std::string>());
    return complex_from_json(j);
}

std::string json_string(const Json& j, const char* key)
{
    if (!j.is_string())
        throw FormatError(std::string("config member \"") + key + "\" must be a string");
    return j.get<std::string>();
}

// Config values are parameters; JSON type mismatches are format errors.
template <typename T>
T json_number(const Json& j, const char* key)
{
    if (!j.is_number())
        throw FormatError(std::string("config member \"") + key + "\" must be a number");
    return j.get<T>();
}

std::vector<double> json_list(const Json& j, const char* key)
{
    if (j.is_string())
        return parse_list(j.get<std::string>());
    if (j.is_number())
        return {j.get<double>()};
    if (!j.is_array())
        throw FormatError(std::string("config member \"") + key + "\" must be a list");
    std::vector<double> v;
    for (const auto& x : j)
        v.push_back(json_number<double>(x, key));
    return v;
}

void write_output(const RunConfig& c, const std::string& content)
{
    if (c.output.empty()) {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream os(c.output, std::ios::binary);
    if (!os)
        throw IoError("cannot open output file '" + c.output + "'");
    os << content;
    if (!os)
        throw IoError("cannot write output file '" + c.output + "'");
}

OutputFormat format_or(const RunConfig& c, OutputFormat def) { return c.format.value_or(def); }

const GridSpec& require_grid(const RunConfig& c)
{
    if (!c.grid)
        throw ParameterError("a grid start:stop:step is required");
    return *c.grid;
}

int component_dimension(const RunConfig& c)
{
    return c.family == Family::Hypercomplex ? c.upsilon->dimension() : 0;
}

SplineEvalResult eval_point(const RunConfig& c, double x)
{
    switch (*c.family) {
    case Family::Classical:
        return evaluate(SplineOrder::integer(*c.n), x);
    case Family::Fractional:
        return evaluate(SplineOrder::real(*c.alpha), x);
    case Family::Complex:
        return evaluate(SplineOrder::complex(*c.z), x);
    case Family::Hypercomplex:
        return evaluate(SplineOrder::hypercomplex(*c.upsilon), x);
    case Family::Exponential: {
        const ExponentialWeights a(c.a);
        const bool inside = x >= 0.0 && x < a.order();
        return {x, eval_exp_bspline(a, x), inside ? a.order() : 0};
    }
    case Family::ComplexExponential:
        return {x, eval_ez(c.a[0], *c.z, x), x < 0.0 ? 0 : static_cast<int>(std::floor(x)) + 1};
    }
    throw ParameterError("unknown family");
}

TransformSample transform_point(const RunConfig& c, double w)
{
    switch (*c.family) {
    case Family::Classical: {
        const cdouble o = omega_fn(w);
        cdouble p = 1.0;
        for (int k = 0; k < *c.n; ++k)
            p *= o;
        return p;
    }
    case Family::Fractional:
        return hat_bz(*c.alpha, w);
    case Family::Complex:
        return hat_bz(*c.z, w);
    case Family::Exponential:
        return hat_en(ExponentialWeights(c.a), w);
    case Family::ComplexExponential:
        return hat_ez(c.a[0], *c.z, w);
    case Family::Hypercomplex:
        return hat_bupsilon(*c.upsilon, w);
    }
    throw ParameterError("unknown family");
}

template <typename T, typename F>
std::vector<T> sweep(const GridSpec& g, F&& f)
{
    const int count = g.count();
    std::vector<T> out(static_cast<std::size_t>(count));
    parallel_for(out.size(), [&](std::size_t i) { out[i] = f(g.at(static_cast<int>(i))); });
    return out;
}

OmegaRange verify_range(const RunConfig& c)
{
    if (!c.grid)
        return OmegaRange{};
    return OmegaRange{c.grid->start, c.grid->at(c.grid->count() - 1), c.grid->count()};
}

} // namespace

GridSpec GridSpec::parse(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(item);
    if (parts.size() != 3)
        throw ParameterError("grid must be start:stop:step, got '" + text + "'");
    GridSpec g{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
    g.count();
    return g;
}

int GridSpec::count() const
{
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop))
        throw ParameterError("grid step must be positive and bounds finite");
    if (stop < start)
        throw ParameterError("grid stop must not precede start");
    const double c = std::round((stop - start) / step) + 1.0;
    if (c > 1e8)
        throw ParameterError("grid has too many points");
    return static_cast<int>(c);
}

Command parse_command(const std::string& s)
{
    const auto v = lower(s);
    if (v == "eval")
        return Command::Eval;
    if (v == "transform")
        return Command::Transform;
    if (v == "fracop")
        return Command::Fracop;
    if (v == "verify")
        return Command::Verify;
    throw ParameterError("unknown command '" + s + "' (eval | transform | fracop | verify)");
}

Family parse_family(const std::string& s)
{
    const auto v = lower(s);
    if (v == "classical")
        return Family::Classical;
    if (v == "fractional")
        return Family::Fractional;
    if (v == "complex")
        return Family::Complex;
    if (v == "exponential")
        return Family::Exponential;
    if (v == "complex-exponential")
        return Family::ComplexExponential;
    if (v == "hypercomplex")
        return Family::Hypercomplex;
    throw ParameterError("unknown family '" + s + "'");
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::Classical:
        return "classical";
    case Family::Fractional:
        return "fractional";
    case Family::Complex:
        return "complex";
    case Family::Exponential:
        return "exponential";
    case Family::ComplexExponential:
        return "complex-exponential";
    case Family::Hypercomplex:
        return "hypercomplex";
    }
    return "?";
}

std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(parse_double(item));
    if (v.empty())
        throw ParameterError("empty number list");
    return v;
}

cdouble parse_complex(const std::string& s)
{
    const auto v = parse_list(s);
    if (v.size() > 2)
        throw ParameterError("complex number must be re or re,im; got '" + s + "'");
    return v.size() == 1 ? cdouble(v[0]) : cdouble(v[0], v[1]);
}

RunConfig merge_json(RunConfig c, const Json& j)
{
    if (!j.is_object())
        throw FormatError("config file must hold a JSON object");
    for (const auto& [key, v] : j.items()) {
        const char* k = key.c_str();
        if (key == "command")
            c.command = parse_command(json_string(v, k));
        else if (key == "family")
            c.family = parse_family(json_string(v, k));
        else if (key == "n")
            c.n = json_number<int>(v, k);
        else if (key == "alpha")
            c.alpha = json_number<double>(v, k);
        else if (key == "z")
            c.z = json_complex(v);
        else if (key == "a")
            c.a = json_list(v, k);
        else if (key == "upsilon")
            c.upsilon = v.is_object() ? paravector_from_json(v) : parse_upsilon(json_list(v, k));
        else if (key == "grid") {
            if (v.is_string())
                c.grid = GridSpec::parse(v.get<std::string>());
            else
                c.grid = GridSpec{json_number<double>(v.at("start"), "grid.start"),
                                  json_number<double>(v.at("stop"), "grid.stop"),
                                  json_number<double>(v.at("step"), "grid.step")};
        } else if (key == "K" || key == "truncation")
            c.truncation = json_number<int>(v, k);
        else if (key == "tolerance" || key == "tol")
            c.tolerance = json_number<double>(v, k);
        else if (key == "output")
            c.output = json_string(v, k);
        else if (key == "format")
            c.format = parse_format(json_string(v, k));
        else if (key == "op")
            c.op = parse_op(json_string(v, k));
        else if (key == "input")
            c.input = json_string(v, k);
        else if (key == "form")
            c.form = parse_form(json_string(v, k));
        else if (key == "sign")
            c.sign = parse_sign(json_string(v, k));
        else
            throw ParameterError("unknown config key '" + key + "'");
    }
    return c;
}

RunConfig load_config_file(const std::string& path, RunConfig base)
{
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open config file '" + path + "'");
    try {
        return merge_json(std::move(base), Json::parse(is));
    } catch (const Json::exception& e) {
        throw FormatError("config file '" + path + "': " + e.what());
    }
}

void validate(const RunConfig& c)
{
    if (c.command == Command::Fracop) {
        if (c.input.empty())
            throw ParameterError("fracop requires an input CSV (--input)");
        if (!c.z)
            throw ParameterError("fracop requires the order z");
        if (!(c.z->real() > 0.0))
            throw ParameterError("fractional operator order requires re z > 0");
        if (c.op == FracOp::Shifted && (c.a.size() != 1 || !(c.a[0] > 0.0)))
            throw ParameterError("shifted fracop requires a single a > 0");
        return;
    }
    if (!c.family)
        throw ParameterError("--family is required");
    if (c.command != Command::Verify)
        require_grid(c);
    if (c.truncation < 0)
        throw ParameterError("truncation K must be nonnegative");
    switch (*c.family) {
    case Family::Classical:
        if (!c.n)
            throw ParameterError("family classical requires n");
        SplineOrder::integer(*c.n);
        break;
    case Family::Fractional:
        if (!c.alpha)
            throw ParameterError("family fractional requires alpha");
        SplineOrder::real(*c.alpha);
        break;
    case Family::Complex:
        if (!c.z)
            throw ParameterError("family complex requires z=re,im");
        SplineOrder::complex(*c.z);
        break;
    case Family::Exponential:
        ExponentialWeights{c.a};
        break;
    case Family::ComplexExponential:
        if (c.a.size() != 1 || !c.z)
            throw ParameterError("family complex-exponential requires a single a and z=re,im");
        if (!(c.a[0] > 0.0))
            throw ParameterError("complex exponential B-spline is well-defined only for a > 0");
        SplineOrder::complex(*c.z);
        break;
    case Family::Hypercomplex:
        if (!c.upsilon)
            throw ParameterError("family hypercomplex requires upsilon=s,v1..vn");
        SplineOrder::hypercomplex(*c.upsilon);
        break;
    }
}

int run_eval(const RunConfig& c)
{
    const auto& g = require_grid(c);
    const auto rows = sweep<SplineEvalResult>(g, [&](double x) { return eval_point(c, x); });
    std::ostringstream os;
    if (format_or(c, OutputFormat::Csv) == OutputFormat::Json) {
        Json j = Json::array();
        for (const auto& r : rows)
            j.push_back(to_json(r));
        os << dump_json(j) << '\n';
    } else {
        const int n = component_dimension(c);
        auto header = component_columns(n);
        header.insert(header.begin(), "x");
        header.push_back("terms_used");
        write_csv_row(os, header);
        for (const auto& r : rows) {
            os << format_double(r.x);
            for (double v : component_values(r.value, n))
                os << ',' << format_double(v);
            os << ',' << r.terms_used << '\n';
        }
    }
    write_output(c, os.str());
    return kExitPass;
}

int run_transform(const RunConfig& c)
{
    const auto& g = require_grid(c);
    const auto rows = sweep<TransformValue>(g, [&](double w) { return TransformValue{w, transform_point(c, w)}; });
    std::ostringstream os;
    if (format_or(c, OutputFormat::Csv) == OutputFormat::Json) {
        Json j = Json::array();
        for (const auto& r : rows)
            j.push_back(to_json(r));
        os << dump_json(j) << '\n';
    } else {
        const int n = component_dimension(c);
        auto header = component_columns(n);
        header.insert(header.begin(), "omega");
        write_csv_row(os, header);
        for (const auto& r : rows) {
            std::vector<double> v{r.omega};
            for (double x : component_values(r.value, n))
                v.push_back(x);
            write_csv_row(os, v);
        }
    }
    write_output(c, os.str());
    return kExitPass;
}

int run_fracop(const RunConfig& c)
{
    std::ifstream is(c.input);
    if (!is)
        throw IoError("cannot open input file '" + c.input + "'");
    const SampledSignal f = read_signal_csv(is);
    SampledSignal r;
    switch (c.op) {
    case FracOp::Derivative:
        r = frac_derivative(*c.z, f, c.form);
        break;
    case FracOp::Integral:
        r = frac_integral(*c.z, f);
        break;
    case FracOp::Shifted:
        r = shifted_frac_derivative(c.a[0], *c.z, f, c.form);
        break;
    }
    if (r.conditioning_warning)
        std::cerr << "warning: difference stencil is ill-conditioned at this step size\n";
    std::ostringstream os;
    if (format_or(c, OutputFormat::Csv) == OutputFormat::Json) {
        Json j = Json::array();
        for (std::size_t i = 0; i < r.size(); ++i)
            j.push_back(Json{{"x", r.x(i)}, {"value", to_json(r.samples[i])}, {"valid", r.is_valid(i)}});
        os << dump_json(j) << '\n';
    } else {
        write_signal_csv(os, r);
    }
    write_output(c, os.str());
    return kExitPass;
}

int run_verify(const RunConfig& c)
{
    const OmegaRange range = verify_range(c);
    ResidualReport r;
    switch (*c.family) {
    case Family::Classical:
        r = classical_atom_check(*c.n, range);
        break;
    case Family::Fractional:
        r = verify_atom_identity_complex(*c.alpha, c.truncation, range, c.sign);
        r.family = "fractional";
        break;
    case Family::Complex:
        r = verify_atom_identity_complex(*c.z, c.truncation, range, c.sign);
        break;
    case Family::Exponential:
        r = exp_difference_check(ExponentialWeights(c.a), range);
        break;
    case Family::ComplexExponential:
        r = verify_atom_identity_expz(c.a[0], *c.z, c.truncation, range);
        break;
    case Family::Hypercomplex:
        r = verify_atom_identity_hc(*c.upsilon, c.truncation, range, c.sign);
        break;
    }
    std::ostringstream os;
    if (format_or(c, OutputFormat::Json) == OutputFormat::Json) {
        os << dump_json(to_json(r)) << '\n';
    } else {
        write_csv_row(os, std::vector<std::string>{"omega", "residual"});
        for (std::size_t i = 0; i < r.omegas.size(); ++i)
            write_csv_row(os, std::vector<double>{r.omegas[i], r.residuals[i]});
    }
    write_output(c, os.str());
    return r.passed(c.tolerance) ? kExitPass : kExitVerification;
}

int run(const RunConfig& c)
{
    try {
        validate(c);
        switch (c.command) {
        case Command::Eval:
            return run_eval(c);
        case Command::Transform:
            return run_transform(c);
        case Command::Fracop:
            return run_fracop(c);
        case Command::Verify:
            return run_verify(c);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const GridError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return c.command == Command::Verify ? kExitVerification : kExitUsage;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return c.command == Command::Verify ? kExitVerification : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int main(int argc, char** argv)
{
    CLI::App app{"Cardinal B-splines of integer, real, complex and hypercomplex order"};
    app.require_subcommand(1);
    std::string config_path;
    std::string family, z, a, upsilon, grid, output, format, op, input, form, sign;
    int n = 0;
    double alpha = 0.0;
    int truncation = 0;
    double tolerance = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; flags override its values");
        sub->add_option("--family", family, "classical | fractional | complex | exponential | complex-exponential | hypercomplex");
        sub->add_option("--n", n, "integer order");
        sub->add_option("--alpha", alpha, "real order");
        sub->add_option("--z", z, "complex order re,im");
        sub->add_option("--a", a, "exponential weights a1,...,an (or the single a)");
        sub->add_option("--upsilon", upsilon, "hypercomplex order s,v1,...,vn");
        sub->add_option("--grid", grid, "start:stop:step");
        sub->add_option("-K,--truncation", truncation, "atom-sum truncation");
        sub->add_option("--tol,--tolerance", tolerance, "verification tolerance");
        sub->add_option("-o,--output", output, "output path (default: stdout)");
        sub->add_option("--format", format, "csv | json");
        sub->add_option("--op", op, "derivative | integral | shifted");
        sub->add_option("--input", input, "input CSV x,value");
        sub->add_option("--form", form, "rl | caputo");
        sub->add_option("--sign", sign, "multiplier sign of the derivative: plus | minus");
    };
    std::vector<std::pair<CLI::App*, Command>> subs{
        {app.add_subcommand("eval", "evaluate a spline on a grid"), Command::Eval},
        {app.add_subcommand("transform", "evaluate a Fourier transform on a frequency grid"), Command::Transform},
        {app.add_subcommand("fracop", "apply a fractional operator to sampled data"), Command::Fracop},
        {app.add_subcommand("verify", "verify the atom identity of a family"), Command::Verify}};
    for (auto& [sub, cmd] : subs)
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    RunConfig c;
    CLI::App* active = nullptr;
    for (auto& [sub, cmd] : subs) {
        if (sub->parsed()) {
            active = sub;
            c.command = cmd;
        }
    }
    auto given = [&](const char* name) { return active->count(name) > 0; };
    try {
        if (!config_path.empty()) {
            c = load_config_file(config_path, c);
            for (auto& [sub, cmd] : subs)
                if (sub == active)
                    c.command = cmd;
        }
        if (given("--family"))
            c.family = parse_family(family);
        if (given("--n"))
            c.n = n;
        if (given("--alpha"))
            c.alpha = alpha;
        if (given("--z"))
            c.z = parse_complex(z);
        if (given("--a"))
            c.a = parse_list(a);
        if (given("--upsilon"))
            c.upsilon = parse_upsilon(parse_list(upsilon));
        if (given("--grid"))
            c.grid = GridSpec::parse(grid);
        if (given("--truncation"))
            c.truncation = truncation;
        if (given("--tolerance"))
            c.tolerance = tolerance;
        if (given("--output"))
            c.output = output;
        if (given("--format"))
            c.format = parse_format(format);
        if (given("--op"))
            c.op = parse_op(op);
        if (given("--input"))
            c.input = input;
        if (given("--form"))
            c.form = parse_form(form);
        if (given("--sign"))
            c.sign = parse_sign(sign);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(c);
}

} // namespace fracspline::cli
