// Copyright 2026 The cfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <sstream>

#include "cfft/error.hpp"
#include "cfft/fixture.hpp"

using namespace cfft;

namespace {

const FixtureSpec& shipped() {
  static const FixtureSpec spec = load_fixture(default_fixture_path());
  return spec;
}

// Restores the seven output labels as originally printed.
std::string original_labels(const std::string& post) {
  const std::map<std::string, std::string> back = {{"10", "9"}, {"20", "18"}, {"28", "13"}, {"7", "11"},
                                                   {"14", "22"}, {"18", "17"}, {"9", "26"}};
  const std::regex lhs(R"(^S_\{([0-9]+)\} =)");
  std::istringstream in(post);
  std::ostringstream out;
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_search(line, m, lhs)) {
      auto it = back.find(m[1].str());
      if (it != back.end()) line = "S_{" + it->second + "} =" + m.suffix().str();
    }
    out << line << "\n";
  }
  return out.str();
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out << line << "\n";
  return out.str();
}

}  // namespace

TEST(Fixture, LoadsDescriptor) {
  const auto& s = shipped();
  EXPECT_EQ(s.field->m(), 8);
  EXPECT_EQ(s.field->prim_poly(), 0x11du);
  EXPECT_EQ(s.syndromes, 32u);
  EXPECT_EQ(s.input_order.size(), 255u);
  EXPECT_EQ(s.alpha_exponents.size(), 187u);
}

TEST(Fixture, CountsMatch) {
  const auto prog = compile_fixture(shipped());
  EXPECT_EQ(prog.pre_additions, 3793u);
  EXPECT_EQ(prog.post_additions, 177u);
  EXPECT_EQ(prog.pre_additions + prog.post_additions, 3970u);
  EXPECT_EQ(prog.multiplications, 149u);
  EXPECT_NO_THROW(check_fixture_counts(prog, shipped()));
  EXPECT_TRUE(prog.redefined.empty());
}

TEST(Fixture, MatchesHornerSyndromes) {
  const auto v = verify_fixture(shipped(), 1000, 2024);
  EXPECT_TRUE(v.passed);
  EXPECT_TRUE(v.missing.empty());
  ASSERT_EQ(v.indices.size(), 32u);
  for (const auto& i : v.indices) {
    EXPECT_FALSE(i.ambiguous);
    EXPECT_EQ(i.mismatches, 0u) << "S_" << i.index;
  }
}

TEST(Fixture, DeletedLineIsCountMismatch) {
  FixtureSpec s = shipped();
  const std::string victim = "S_{17} = g_{122} + g_{123} + g_{124} + g_{125} + g_{126}\n";
  const auto at = s.post_text.find(victim);
  ASSERT_NE(at, std::string::npos);
  s.post_text.erase(at, victim.size());
  try {
    verify_fixture(s, 10, 1);
    FAIL() << "expected CountMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CountMismatch);
  }
}

TEST(Fixture, OriginalLabelsReportConflicts) {
  FixtureSpec s = shipped();
  s.post_text = original_labels(s.post_text);
  const auto prog = compile_fixture(s);
  EXPECT_EQ(prog.redefined, (std::vector<uint32_t>{11, 13, 17, 22, 26}));
  EXPECT_EQ(prog.post_additions, 177u);
  const auto v = verify_fixture(s, 200, 5);
  EXPECT_EQ(v.missing, (std::vector<uint32_t>{7, 10, 14, 20, 28}));
  std::map<uint32_t, IndexVerdict> by;
  for (const auto& i : v.indices) by[i.index] = i;
  for (uint32_t i : {11u, 13u, 17u, 22u, 26u}) EXPECT_TRUE(by.at(i).ambiguous);
  EXPECT_GT(by.at(9).mismatches, 0u);
  EXPECT_GT(by.at(18).mismatches, 0u);
  EXPECT_EQ(by.at(0).mismatches, 0u);
  EXPECT_FALSE(v.passed);
}

TEST(Fixture, EmitterReproducesText) {
  ParseOptions opts;
  opts.input_prefix = "r'";
  opts.output_prefixes = {"p"};
  const auto pre = parse_slp_text(shipped().pre_text, opts);
  EXPECT_EQ(emit_slp_text(pre.slp), strip_comments(shipped().pre_text));
  opts.input_prefix = "g";
  opts.output_prefixes = {"S"};
  const auto post = parse_slp_text(shipped().post_text, opts);
  EXPECT_EQ(emit_slp_text(post.slp), strip_comments(shipped().post_text));
}

TEST(Fixture, MissingFileIsNotFound) {
  try {
    load_fixture("/nonexistent/fixture.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
}
