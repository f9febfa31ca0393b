#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cg/errors.hpp"
#include "cg/json_io.hpp"

using namespace cg;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cg_json_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(DesignJson, RoundTripsEveryFamily) {
  for (const Design& d : {build_p3(), build_boolean(3), build_sp_design(3, true), build_affine_design(2)}) {
    const json j = design_to_json(d);
    EXPECT_EQ(design_from_json(j), d) << d.name();
    // Emitting the parsed design reproduces the canonical text.
    EXPECT_EQ(design_to_json(design_from_json(json::parse(j.dump()))).dump(), j.dump());
  }
}

TEST(DesignJson, Schema) {
  const json j = design_to_json(build_sp_design(3, true));
  EXPECT_EQ(j["n"], 28);
  EXPECT_EQ(j["lambda"], 5);
  EXPECT_EQ(j["blocks"].size(), 315u);
  EXPECT_EQ(j["labels"][0].get<std::string>().size(), 6u);
  const json p3 = design_to_json(build_p3());
  EXPECT_FALSE(p3.contains("labels"));
}

TEST(DesignJson, RejectsMalformedInput) {
  EXPECT_THROW(design_from_json(json::parse(R"({"blocks": []})")), InvalidInput);
  EXPECT_THROW(design_from_json(json::parse(R"({"n": 5, "blocks": [[0,1,2]]})")), InvalidInput);
  EXPECT_THROW(design_from_json(json::parse(R"({"n": 5, "blocks": [[0,1,2,7]]})")), InvalidInput);
  EXPECT_THROW(design_from_json(json::parse(R"({"n": 5, "blocks": [[0,1,2,"x"]]})")), InvalidInput);
  EXPECT_THROW(design_from_json(json::parse(R"({"n": 1, "blocks": [], "labels": ["0x"]})")), InvalidInput);
  EXPECT_THROW(design_from_json(json::parse(R"({"n": 2, "blocks": [], "labels": ["0", "01"]})")), InvalidInput);
  EXPECT_THROW(design_from_json(json::parse("[1, 2]")), InvalidInput);
}

TEST(DesignJson, Files) {
  const auto path = temp_file("design.json");
  const Design d = build_affine_design(2);
  save_design(path, d);
  EXPECT_EQ(load_design(path), d);
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(load_design(path), InvalidInput);
  std::filesystem::remove(path);
  EXPECT_THROW(load_design(path), IoError);
  EXPECT_THROW(save_design("/nonexistent-dir/x.json", d), IoError);
}

TEST(CodeJson, RoundTrip) {
  const auto c = incidence_code(build_sp_design(3, true));
  const json j = code_to_json(c);
  EXPECT_EQ(j["n"], 28);
  EXPECT_EQ(j["k"], 21);
  EXPECT_FALSE(j.contains("parity_check"));
  const auto back = code_from_json(j);
  EXPECT_TRUE(span_equals(back, c));

  const auto with_h = c.with_parity_check(c.parity_check());
  const json jh = code_to_json(with_h);
  ASSERT_TRUE(jh.contains("parity_check"));
  EXPECT_EQ(code_from_json(jh).stored_parity_check(), with_h.stored_parity_check());

  json bad = j;
  bad["k"] = 20;
  EXPECT_THROW(code_from_json(bad), InvalidInput);
  bad = j;
  bad["basis"][0] = "101";
  EXPECT_THROW(code_from_json(bad), InvalidInput);
}

TEST(PermutationJson, RoundTrip) {
  const auto p = Permutation::from_cycles(6, {{0, 4, 2}});
  const json j = permutation_to_json(p);
  EXPECT_EQ(j, json::parse("[4,1,0,3,2,5]"));
  EXPECT_EQ(permutation_from_json(j), p);
  EXPECT_THROW(permutation_from_json(json::parse("[0,0]")), InvalidInput);
  EXPECT_THROW(permutation_from_json(json::parse(R"(["a"])")), InvalidInput);
}

TEST(SummaryJson, OrdersAreDecimalStrings) {
  const auto s = summarize_groupoid(build_p3(), 0);
  const json j = summary_to_json(s);
  EXPECT_EQ(j["pi_order"], "95040");
  EXPECT_EQ(j["groupoid_size"], "1235520");
  EXPECT_EQ(j["move_group_order"], "3113510400");
  EXPECT_EQ(j["is_group"], false);
  const auto back = summary_from_json(j);
  EXPECT_EQ(summary_to_json(back), j);
  json bad = j;
  bad["pi_order"] = "12a";
  EXPECT_THROW(summary_from_json(bad), InvalidInput);
}
