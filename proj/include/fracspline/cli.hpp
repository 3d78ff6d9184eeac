#ifndef FRACSPLINE_CLI_HPP
#define FRACSPLINE_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "fracspline/fracops.hpp"
#include "fracspline/serialize.hpp"

namespace fracspline::cli {

enum class Command { Eval, Transform, Fracop, Verify };
enum class Family { Classical, Fractional, Complex, Exponential, ComplexExponential, Hypercomplex };
enum class OutputFormat { Csv, Json };
enum class FracOp { Derivative, Integral, Shifted };

enum ExitCode : int { kExitPass = 0, kExitUsage = 1, kExitVerification = 2, kExitIo = 3 };

/// start:stop:step; count = round((stop - start) / step) + 1.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    static GridSpec parse(const std::string& text);
    int count() const;
    double at(int i) const { return start + i * step; }
};

struct RunConfig {
    Command command = Command::Eval;
    std::optional<Family> family;
    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<cdouble> z;
    std::vector<double> a; ///< exponential tuple, or the single a of complex-exponential
    std::optional<Paravector> upsilon;
    std::optional<GridSpec> grid;
    int truncation = 200;
    double tolerance = 1e-3;
    std::string output; ///< empty: standard output
    std::optional<OutputFormat> format;

    FracOp op = FracOp::Derivative;
    std::string input;
    FractionalForm form = FractionalForm::RiemannLiouville;
    MultiplierSign sign = MultiplierSign::Plus;
};

Command parse_command(const std::string& s);
Family parse_family(const std::string& s);
std::string family_name(Family f);
cdouble parse_complex(const std::string& s); ///< "re" or "re,im"
std::vector<double> parse_list(const std::string& s);

/// Fields present in `j` overwrite those of `base`.
RunConfig merge_json(RunConfig base, const Json& j);
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Throws ParameterError / OrderError for incompatible or missing parameters.
void validate(const RunConfig& c);

int run_eval(const RunConfig& c);
int run_transform(const RunConfig& c);
int run_fracop(const RunConfig& c);
int run_verify(const RunConfig& c);

/// Validates, dispatches on c.command and maps exceptions to exit codes.
int run(const RunConfig& c);

int main(int argc, char** argv);

} // namespace fracspline::cli

#endif
