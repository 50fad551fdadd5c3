#include "sumgap/io.hpp"

#include <gtest/gtest.h>

#include "sumgap/errors.hpp"
#include "sumgap/generators.hpp"

namespace sumgap::io {
namespace {

std::string diagnostic(const std::string& text) {
  try {
    (void)parse_input(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseInputTest, SetDocument) {
  const auto spec = parse_input(R"({"kind":"set","p":101,"payload":[1,5,10]})");
  EXPECT_EQ(spec.kind, InputKind::set);
  const auto f = to_density(spec);
  EXPECT_TRUE(f.is_indicator());
  EXPECT_EQ(f.support(), (std::vector<Residue>{1, 5, 10}));
  EXPECT_EQ(to_set(spec), (std::vector<Residue>{1, 5, 10}));
}

TEST(ParseInputTest, FourierDocumentGivesRemarkFunction) {
  const auto spec = parse_input(R"({"kind":"fourier","p":11,"payload":[[0,5.5,0],[1,2.75,0],[10,2.75,0]]})");
  const auto f = to_density(spec);
  const auto g = spectral_remark(PrimeField(11));
  EXPECT_LT((f.values() - g.values()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(f(0), 1.0, 1e-12);
}

TEST(ParseInputTest, ValuesDocument) {
  const auto f = to_density(parse_input(R"({"kind":"values","p":5,"payload":[0.5,1,0,0.25,0.125]})"));
  EXPECT_FALSE(f.is_indicator());
  EXPECT_DOUBLE_EQ(f(3), 0.25);
}

TEST(ParseInputTest, PlainFormat) {
  const auto spec = parse_input("# hand written\np 7\n1\n2   # square\n\n4\n");
  EXPECT_EQ(spec.p, 7);
  EXPECT_EQ(to_set(spec), (std::vector<Residue>{1, 2, 4}));
}

TEST(ParseInputTest, DistinctDiagnostics) {
  const auto composite = diagnostic(R"({"kind":"set","p":10,"payload":[1]})");
  const auto range = diagnostic(R"({"kind":"set","p":11,"payload":[1,11]})");
  const auto malformed = diagnostic(R"({"kind":"set","p":11,"payload":[1,)");
  EXPECT_NE(composite.find("composite"), std::string::npos) << composite;
  EXPECT_NE(range.find("out-of-range"), std::string::npos) << range;
  EXPECT_NE(malformed.find("malformed"), std::string::npos) << malformed;
}

TEST(ParseInputTest, RejectsEverythingMalformed) {
  const std::vector<std::string> bad{
      "",
      "[]",
      R"({"p":11,"payload":[1]})",
      R"({"kind":"set","payload":[1]})",
      R"({"kind":"set","p":11})",
      R"({"kind":"bag","p":11,"payload":[1]})",
      R"({"kind":"set","p":11.5,"payload":[1]})",
      R"({"kind":"set","p":11,"payload":["a"]})",
      R"({"kind":"set","p":11,"payload":[]})",
      R"({"kind":"set","p":11,"payload":[2,2]})",
      R"({"kind":"set","p":11,"payload":[-1]})",
      R"({"kind":"set","p":2,"payload":[1]})",
      R"({"kind":"values","p":5,"payload":[0,0,0]})",
      R"({"kind":"values","p":5,"payload":[0,0,0,0,1.5]})",
      R"({"kind":"fourier","p":11,"payload":[[1,2.75,0]]})",
      R"({"kind":"fourier","p":11,"payload":[[0,5.5]]]})",
      R"({"kind":"fourier","p":11,"payload":[[0]]})",
      "1\n2\n",
      "p 9\n1\n",
      "p 11\n1 2\n",
      "p 11\nx\n",
  };
  for (const auto& text : bad) EXPECT_THROW(parse_input(text), InputError) << text;
}

TEST(SerializeInputTest, RoundTrip) {
  const std::vector<std::string> docs{
      R"({"kind":"set","p":101,"payload":[1,5,10]})",
      R"({"kind":"values","p":5,"payload":[0.5,1.0,0.0,0.25,0.125]})",
      R"({"kind":"fourier","p":11,"payload":[[0,5.5,0.0],[1,2.75,0.0],[10,2.75,0.0]]})",
  };
  for (const auto& doc : docs) {
    const auto once = serialize_input(parse_input(doc));
    EXPECT_EQ(once, doc + "\n");
    EXPECT_EQ(serialize_input(parse_input(once)), once);
  }
}

TEST(SerializeInputTest, DescribeIndicatorAsSet) {
  const auto f = DensityFunction::indicator(PrimeField(7), {1, 2, 4});
  EXPECT_EQ(serialize_input(describe(f)), "{\"kind\":\"set\",\"p\":7,\"payload\":[1,2,4]}\n");
}

TEST(NumberTest, TwelveSignificantDigits) {
  EXPECT_EQ(number(1.0 / 3).dump(), "0.333333333333");
  EXPECT_EQ(number(2.0 / 3 * 1e10).dump(), "6666666666.67");
  EXPECT_EQ(number(0.1).dump(), "0.1");
  EXPECT_TRUE(number(std::nan("")).is_null());
}

TEST(ReportSchemaTest, CoverageKeyOrder) {
  const auto r = theorem1_report(spectral_remark(PrimeField(11)), 3);
  const auto j = to_json(r);
  const std::vector<std::string> expected{"p",     "k",      "gamma",         "theta", "lambda_k", "bound",
                                          "exact_support", "slack", "d", "a_x", "a_y"};
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  ASSERT_GE(keys.size(), expected.size());
  EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + expected.size()), expected);
}

TEST(ReportSchemaTest, SpectrumCsv) {
  const auto csv = spectrum_csv(dft(spectral_remark(PrimeField(11))));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "rank,frequency,magnitude,real,imag");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
  EXPECT_NE(csv.find("\n1,0,5.5,5.5,0\n"), std::string::npos);
}

TEST(ReportSchemaTest, Theorem2Fields) {
  const auto v = theorem2_report(spectral_remark(PrimeField(11)), 3, 3, 1);
  const auto j = to_json(v);
  for (const char* key : {"gamma_threshold", "min_value", "in_hypothesis", "positivity_threshold"})
    EXPECT_TRUE(j.contains(key)) << key;
  ASSERT_TRUE(j.contains("chain"));
  for (const char* key : {"ds", "set_sizes", "base"}) EXPECT_TRUE(j["chain"].contains(key)) << key;
}

TEST(JsonToCsvTest, FlattensRows) {
  Json rows = Json::array();
  rows.push_back(Json{{"k", 1}, {"gamma", number(0.25)}, {"best", nullptr}});
  rows.push_back(Json{{"k", 2}, {"gamma", number(0.5)}, {"best", "interval"}});
  EXPECT_EQ(json_to_csv(rows), "k,gamma,best\n1,0.25,\n2,0.5,interval\n");
}

}  // namespace
}  // namespace sumgap::io
