// Copyright 2026 the sd2 authors
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

#include "core/scholar_sets.h"

#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "expect_error.h"
#include "test_support.h"

namespace sd2 {
namespace {

using L = OperatorLabel;

class FixtureTest : public ::testing::Test {
 protected:
  FixtureTest() : corpus_(Corpus::Load(testing::SmallFixture())) {}

  std::vector<std::string> Ids(const PaperSet& set) const {
    std::vector<std::string> out;
    for (PaperIndex p : set.members) out.push_back(corpus_.paper(p).id);
    return out;
  }

  Corpus corpus_;
};

using CombineTest = FixtureTest;

TEST_F(CombineTest, AndIntersects) {
  const PaperSet s = Combine(corpus_, {{"bengio", L::kAnd}, {"courville", L::kAnd}});
  EXPECT_EQ(s.label, "Bengio + Courville");
  EXPECT_EQ(Ids(s), (std::vector<std::string>{"p01", "p08"}));
  ASSERT_TRUE(s.spec.has_value());
}

TEST_F(CombineTest, SingleAndIsProfile) {
  for (const ScholarProfile& sch : corpus_.scholars()) {
    EXPECT_EQ(Combine(corpus_, {{sch.id, L::kAnd}}).members, sch.papers);
  }
}

TEST_F(CombineTest, OrUnionMinusNot) {
  const PaperSet s = Combine(
      corpus_, {{"goodfellow", L::kOr}, {"courville", L::kOr}, {"bengio", L::kNot}});
  EXPECT_EQ(s.label, "Courville | Goodfellow - Bengio");
  EXPECT_EQ(Ids(s), (std::vector<std::string>{"p03", "p05", "p07", "p12"}));
}

TEST_F(CombineTest, Errors) {
  EXPECT_SD2_ERROR(Combine(corpus_, {{"bengio", L::kNot}, {"hinton", L::kIgnore}}),
                   ErrorCode::kNoPositiveSelector);
  EXPECT_SD2_ERROR(Combine(corpus_, {}), ErrorCode::kNoPositiveSelector);
  EXPECT_SD2_ERROR(Combine(corpus_, {{"lecun", L::kAnd}}),
                   ErrorCode::kUnknownScholarId);
}

// {A: Or, B: Or, C: Not} on a 20-paper corpus against the predicate scan.
TEST(CombineOracleTest, TwentyPaperCorpus) {
  testing::Rng rng(29);
  testing::RandomCorpusOptions opts;
  opts.max_papers = 20;
  for (int i = 0; i < 50; ++i) {
    const Corpus c = testing::RandomCorpus(rng, opts);
    if (c.scholars().size() < 3) continue;
    const CombinationSpec spec = {{c.scholars()[0].id, L::kOr},
                                  {c.scholars()[1].id, L::kOr},
                                  {c.scholars()[2].id, L::kNot}};
    EXPECT_EQ(Combine(c, spec).members, testing::BruteForceCombine(c, spec));
  }
}

TEST(CombineLawsTest, AlgebraicLaws) {
  testing::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Corpus c = testing::RandomCorpus(rng);
    CombinationSpec spec = testing::RandomSpec(rng, c);
    const PaperSet base = Combine(c, spec);
    // Ignore labels change nothing.
    CombinationSpec with_ignore = spec;
    for (const ScholarProfile& s : c.scholars()) {
      if (!with_ignore.contains(s.id)) with_ignore[s.id] = L::kIgnore;
    }
    EXPECT_EQ(Combine(c, with_ignore).members, base.members);
    // A new Not label never grows the result.
    for (const ScholarProfile& s : c.scholars()) {
      if (spec.contains(s.id)) continue;
      CombinationSpec more = spec;
      more[s.id] = L::kNot;
      const PaperSet narrowed = Combine(c, more);
      EXPECT_TRUE(std::includes(base.members.begin(), base.members.end(),
                                narrowed.members.begin(), narrowed.members.end()));
      break;
    }
  }
}

TEST(FormatLabelTest, Goldens) {
  using Entries = std::vector<std::pair<std::string, OperatorLabel>>;
  EXPECT_EQ(FormatLabel(Entries{{"Bengio", L::kAnd}, {"Courville", L::kAnd}}),
            "Bengio + Courville");
  EXPECT_EQ(FormatLabel(Entries{{"Goodfellow", L::kOr}, {"Courville", L::kOr}}),
            "Goodfellow | Courville");
  EXPECT_EQ(FormatLabel(Entries{{"Bengio", L::kAnd},
                                {"Goodfellow", L::kNot},
                                {"Courville", L::kNot}}),
            "Bengio - Goodfellow - Courville");
  EXPECT_EQ(FormatLabel(Entries{{"S6", L::kAnd}, {"S8", L::kOr}, {"S9", L::kOr}}),
            "S6 + (S8 | S9)");
  EXPECT_EQ(FormatLabel(Entries{{"A", L::kIgnore}, {"B", L::kOr}}), "B");
  EXPECT_SD2_ERROR(FormatLabel(Entries{{"A", L::kNot}}),
                   ErrorCode::kNoPositiveSelector);
}

TEST_F(FixtureTest, LabelUsesRegistrationOrder) {
  // The map is keyed by id; the label follows the profiles file.
  EXPECT_EQ(FormatLabel(corpus_, {{"goodfellow", L::kOr}, {"courville", L::kOr}}),
            "Courville | Goodfellow");
  EXPECT_EQ(FormatLabel(corpus_, {{"hinton", L::kAnd}, {"bengio", L::kAnd},
                                  {"goodfellow", L::kNot}}),
            "Bengio + Hinton - Goodfellow");
}

// Every assignment over four names renders a distinct string, once a lone
// Or (which selects the same papers as a lone And) is folded into And.
TEST(FormatLabelTest, InjectiveUpToCanonicalForm) {
  const std::vector<std::string> names = {"A", "B", "C", "D"};
  std::map<std::string, std::vector<OperatorLabel>> seen;
  const OperatorLabel all[] = {L::kNot, L::kIgnore, L::kAnd, L::kOr};
  for (int code = 0; code < 256; ++code) {
    std::vector<OperatorLabel> labels;
    for (int k = 0, c = code; k < 4; ++k, c /= 4) labels.push_back(all[c % 4]);
    const auto count = [&](L l) { return std::count(labels.begin(), labels.end(), l); };
    if (count(L::kAnd) + count(L::kOr) == 0) continue;
    if (count(L::kAnd) == 0 && count(L::kOr) == 1) {
      std::replace(labels.begin(), labels.end(), L::kOr, L::kAnd);
    }
    std::vector<std::pair<std::string, OperatorLabel>> entries;
    for (int k = 0; k < 4; ++k) entries.emplace_back(names[k], labels[k]);
    const std::string s = FormatLabel(entries);
    auto [it, inserted] = seen.emplace(s, labels);
    if (!inserted) {
      EXPECT_EQ(it->second, labels) << "collision on '" << s << "'";
    }
  }
}

TEST(CoauthorTest, OrderedByCoPapers) {
  std::vector<PaperRecord> papers;
  for (int i = 1; i <= 6; ++i) {
    PaperRecord p;
    p.id = "p" + std::to_string(i);
    papers.push_back(p);
  }
  const Corpus c = Corpus::FromParts(
      std::move(papers), {}, VenueTable(),
      {{"f", "Focus", {"p1", "p2", "p3", "p4"}},
       {"y", "Yang", {"p4", "p5"}},
       {"x", "Xu", {"p1", "p2", "p3", "p6"}},
       {"z", "Zed", {"p6"}},
       {"w", "Wei", {"p1"}}},
      {});
  const auto stats = CoauthorStats(c, "f");
  ASSERT_EQ(stats.size(), 3u);
  EXPECT_EQ(stats[0].coauthor, "x");
  EXPECT_EQ(stats[0].co_papers, 3u);
  EXPECT_EQ(stats[0].total_papers, 4u);
  EXPECT_EQ(stats[1].coauthor, "w");  // tie on 1 broken by name
  EXPECT_EQ(stats[2].coauthor, "y");
  EXPECT_TRUE(CoauthorStats(c, "z").size() == 1);
  EXPECT_SD2_ERROR(CoauthorStats(c, "nobody"), ErrorCode::kUnknownScholarId);
}

TEST(CoauthorTest, IsolatedScholarHasNone) {
  PaperRecord p;
  p.id = "p1";
  const Corpus c = Corpus::FromParts({p}, {}, VenueTable(),
                                     {{"a", "A", {"p1"}}, {"b", "B", {}}}, {});
  EXPECT_TRUE(CoauthorStats(c, "b").empty());
}

TEST_F(FixtureTest, CoPapersNeverExceedTotals) {
  for (const ScholarProfile& s : corpus_.scholars()) {
    for (const CoauthorStat& stat : CoauthorStats(corpus_, s.id)) {
      EXPECT_LE(stat.co_papers, stat.total_papers);
    }
  }
}

TEST_F(FixtureTest, Timeline) {
  EXPECT_TRUE(ComputeTimeline(corpus_, PaperSet{}).empty());
  // Courville: p01 2015, p03 2016, p07 unknown, p08 2019, p12 2021.
  const Timeline t = ComputeTimeline(corpus_, corpus_.PapersOf("courville"));
  const Timeline want = {{2015, 1}, {2016, 1}, {2019, 1}, {2021, 1},
                         {std::nullopt, 1}};
  EXPECT_EQ(t, want);
  EXPECT_EQ(TimelineToJson(t).back(),
            nlohmann::json::parse(R"({"year":null,"count":1})"));
}

TEST(TimelineTest, HandCountAndConservation) {
  std::vector<PaperRecord> papers;
  const std::optional<int> years[] = {2019, 2019, 2020, std::nullopt};
  for (int i = 0; i < 4; ++i) {
    PaperRecord p;
    p.id = "p" + std::to_string(i);
    p.year = years[i];
    papers.push_back(p);
  }
  const Corpus c = Corpus::FromParts(std::move(papers), {}, VenueTable(), {}, {});
  PaperSet all{c.universe(), "all", {}};
  EXPECT_EQ(ComputeTimeline(c, all),
            (Timeline{{2019, 2}, {2020, 1}, {std::nullopt, 1}}));

  testing::Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    const Corpus rc = testing::RandomCorpus(rng, {.max_papers = 60});
    const PaperSet s = testing::RandomSubset(rng, rc);
    uint64_t sum = 0;
    for (const TimelineEntry& e : ComputeTimeline(rc, s)) sum += e.count;
    EXPECT_EQ(sum, s.size());
  }
}

TEST(FilterYearsTest, InclusiveBoundsAndLabel) {
  std::vector<PaperRecord> papers;
  const std::optional<int> years[] = {2004, 2005, 2015, 2016, std::nullopt};
  for (int i = 0; i < 5; ++i) {
    PaperRecord p;
    p.id = "p" + std::to_string(i);
    p.year = years[i];
    papers.push_back(p);
  }
  const Corpus c = Corpus::FromParts(std::move(papers), {}, VenueTable(), {}, {});
  const PaperSet all{c.universe(), "Wu - Qu", {}};
  const PaperSet f = FilterYears(c, all, 2005, 2015);
  EXPECT_EQ(f.members, (std::vector<PaperIndex>{1, 2}));
  EXPECT_EQ(f.label, "Wu - Qu [2005–2015]");
  // A range covering every known year keeps everything but Unknown.
  EXPECT_EQ(FilterYears(c, all, 1900, 2100).members,
            (std::vector<PaperIndex>{0, 1, 2, 3}));
  EXPECT_SD2_ERROR(FilterYears(c, all, 2016, 2015), ErrorCode::kInvalidRange);
  EXPECT_EQ(YearRangeLabel(2005, 2015), "2005–2015");
}

TEST_F(FixtureTest, FullRangeIsIdentityWithoutUnknownYears) {
  const PaperSet b = corpus_.PapersOf("bengio");
  EXPECT_EQ(FilterYears(corpus_, b, 1900, 2100).members, b.members);
}

TEST_F(FixtureTest, SpecJson) {
  const CombinationSpec spec = SpecFromJson(nlohmann::json::parse(
      R"({"labels":{"bengio":"and","courville":"or","hinton":"not"}})"));
  EXPECT_EQ(spec.at("courville"), L::kOr);
  EXPECT_EQ(SpecFromJson(SpecToJson(spec)), spec);
  EXPECT_SD2_ERROR(SpecFromJson(nlohmann::json::parse(R"({"labels":{"a":"xor"}})")),
                   ErrorCode::kParseError);
  EXPECT_SD2_ERROR(SpecFromJson(nlohmann::json::array()), ErrorCode::kParseError);
}

}  // namespace
}  // namespace sd2
