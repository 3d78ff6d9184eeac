#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fracspline/error.hpp"
#include "fracspline/serialize.hpp"
#include "oracles.hpp"

using namespace fracspline;

TEST_CASE("17 significant digits round trip")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.75) == "0.75");

    const std::string text = dump_json(Json{{"x", 0.1}, {"bad", std::nan("")}, {"k", 3}}, 0);
    CHECK(text == "{\"x\":0.10000000000000001,\"bad\":null,\"k\":3}");
}

TEST_CASE("Clifford values round trip through JSON")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n <= 5; ++n) {
        const Paravector p = oracle::random_paravector(n, rng);
        const Paravector q = paravector_from_json(Json::parse(dump_json(to_json(p))));
        CHECK(q.dimension() == n);
        CHECK((q - p).norm() == 0.0);

        const CliffordElement e = oracle::random_element(n, rng);
        const CliffordElement f = clifford_from_json(Json::parse(dump_json(to_json(e))));
        CHECK(f.dimension() == n);
        CHECK((f - e).norm() == 0.0);

        ComplexParavector c = complexify(p);
        c.scalar() += cdouble(0.0, 0.3);
        const ComplexParavector d = complex_paravector_from_json(Json::parse(dump_json(to_json(c))));
        CHECK((d - c).norm() == 0.0);

        ComplexCliffordElement ce(n);
        for (std::size_t k = 0; k < ce.coefficients().size(); ++k)
            ce[k] = cdouble(e[k], -e[k] / 3.0);
        const auto cf = complex_clifford_from_json(Json::parse(dump_json(to_json(ce))));
        CHECK((cf - ce).norm() == 0.0);
    }
    CHECK(complex_from_json(Json::parse("2.5")) == cdouble(2.5));
    CHECK(complex_from_json(Json::parse("[1, -2]")) == cdouble(1.0, -2.0));
}

TEST_CASE("malformed JSON values")
{
    CHECK_THROWS_AS(complex_from_json(Json::parse("\"x\"")), FormatError);
    CHECK_THROWS_AS(complex_from_json(Json::parse("[1, 2, 3]")), FormatError);
    CHECK_THROWS_AS(paravector_from_json(Json::parse("{\"v\": [1]}")), FormatError);
    CHECK_THROWS_AS(paravector_from_json(Json::parse("{\"s\": 1, \"v\": [1, 2, 3, 4, 5, 6]}")), Error);
    CHECK_THROWS_AS(clifford_from_json(Json::parse("{\"n\": 2, \"coeffs\": [1, 2, 3]}")), FormatError);
}

TEST_CASE("residual report JSON")
{
    ResidualReport r;
    r.family = "complex";
    r.order = "2.5,0";
    r.truncation = 200;
    r.grid = OmegaRange{-3.0, 3.0, 601};
    r.max_residual = 1.25e-7;
    r.tail_bound = 3e-7;
    r.excluded_omegas = {0.0};
    r.omegas = {-3.0, 3.0};
    r.residuals = {1e-7, 1.25e-7};
    r.recovered_atoms.push_back({0, ComplexParavector(0, 1.0)});
    const Json j = Json::parse(dump_json(to_json(r)));
    CHECK(j["family"] == "complex");
    CHECK(j["K"] == 200);
    CHECK(j["grid"]["count"] == 601);
    CHECK(j["max_residual"].get<double>() == 1.25e-7);
    CHECK(j["excluded_omegas"].size() == 1);
    CHECK(j["recovered_atoms"][0]["shift"] == 0);
    CHECK_FALSE(j.contains("partial_sum_modulus"));
    r.partial_sum_modulus = 0.5;
    CHECK(to_json(r)["partial_sum_modulus"].get<double>() == 0.5);
}

TEST_CASE("component columns")
{
    CHECK(component_columns(0) == std::vector<std::string>{"s_re", "s_im"});
    CHECK(component_columns(2) == std::vector<std::string>{"s_re", "s_im", "v1_re", "v1_im", "v2_re", "v2_im"});
    CHECK(component_values(SplineValue(0.75), 0) == std::vector<double>{0.75, 0.0});
    CHECK(component_values(SplineValue(cdouble(1.0, 2.0)), 0) == std::vector<double>{1.0, 2.0});
    ComplexParavector p(cdouble(1.0, 2.0), {cdouble(3.0, 4.0)});
    CHECK(component_values(SplineValue(p), 1) == std::vector<double>{1.0, 2.0, 3.0, 4.0});
    CHECK(component_values(TransformSample(p), 1) == std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("signal CSV")
{
    std::istringstream real("x,value\n0,0\n0.5,1\n1,2\n");
    auto f = read_signal_csv(real);
    CHECK(f.size() == 3);
    CHECK(f.start == 0.0);
    CHECK(f.step == 0.5);
    CHECK(f.samples[2] == cdouble(2.0));

    std::istringstream cplx("0,1,-1\n0.1,2,-2\n0.2,3,-3\n");
    auto g = read_signal_csv(cplx);
    CHECK(g.samples[1] == cdouble(2.0, -2.0));

    g.valid[2] = 0;
    std::ostringstream out;
    write_signal_csv(out, g);
    CHECK(out.str().rfind("x,s_re,s_im,valid\n0,1,-1,1\n", 0) == 0);
    std::istringstream back(out.str());
    auto h = read_signal_csv(back);
    CHECK(h.samples == g.samples);
    CHECK(h.valid == g.valid);

    auto fails = [](const char* text) {
        std::istringstream is(text);
        return read_signal_csv(is);
    };
    CHECK_THROWS_AS(fails("x,v\n0,1\n0.1,2\n0.3,3\n"), FormatError);
    CHECK_THROWS_AS(fails("x,v\n-1,1\n0,2\n"), FormatError);
    CHECK_THROWS_AS(fails("x,v\n0,1\n"), FormatError);
    CHECK_THROWS_AS(fails("x,v\n0,1\n0.1,abc\n"), FormatError);
    CHECK_THROWS_AS(fails("x,v\n0,1\nfoo,2\n"), FormatError);
    CHECK_THROWS_AS(fails("x,v\n0,1\n0.1\n"), FormatError);
    CHECK_THROWS_AS(fails("x,v\n0,1,0,2\n0.1,1,0,1\n"), FormatError);
}

TEST_CASE("CSV rows")
{
    std::ostringstream os;
    write_csv_row(os, std::vector<double>{0.1, 1.0, -2.5e-300});
    CHECK(os.str() == "0.10000000000000001,1,-2.5e-300\n");
}
