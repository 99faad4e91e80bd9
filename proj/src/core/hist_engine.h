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

// Hierarchical histograms.
//
// A paper set (Papers mode) or the citation links pointing into it
// (Citations mode) is partitioned level by level along a chain of up to four
// attributes. "P." attributes read the paper (the cited paper of a link),
// "C." attributes read the citing paper. Internal nodes report how many
// leaves they span; leaves carry a measure.
//
// Two hierarchies built over the same chain can be aligned: sibling keys are
// matched level by level and missing keys are filled with empty
// placeholders, so both sides expose the same slots.

#ifndef SD2_CORE_HIST_ENGINE_H_
#define SD2_CORE_HIST_ENGINE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core/corpus.h"
#include "core/paper_set.h"
#include "core/venue_resolver.h"

namespace sd2 {

inline constexpr size_t kMaxChainLength = 4;

enum class Mode { kPapers, kCitations };

enum class AttributeSide { kPaper, kCitation };

enum class AttributeField {
  kYear,
  kVenue,
  kCcfRank,
  kCitationBucket,
  kIndividualPaper,
};

struct AttributeKey {
  AttributeSide side = AttributeSide::kPaper;
  AttributeField field = AttributeField::kYear;

  auto operator<=>(const AttributeKey&) const = default;

  // "P.Year", "C.CcfRank", ...
  std::string Name() const;
  // Accepts the canonical names case-insensitively, with an optional space
  // after the dot ("P. Year").
  static std::optional<AttributeKey> Parse(std::string_view text);

  bool is_year() const { return field == AttributeField::kYear; }
  // Years, ranks and citation buckets have a natural order; venues and
  // individual papers do not.
  bool is_ordered() const {
    return field == AttributeField::kYear || field == AttributeField::kCcfRank ||
           field == AttributeField::kCitationBucket;
  }
};

enum class CitationBucket { kHigh, kMedium, kLow };  // canonical bar order

std::string_view CitationBucketName(CitationBucket bucket);  // "High", ...
std::optional<CitationBucket> ParseCitationBucket(std::string_view name);

struct CitationThresholds {
  uint64_t low_below = 10;
  uint64_t high_at_least = 50;
};

// Low below `low_below`, High from `high_at_least`, Medium in between.
// Throws InvalidThresholds when low_below > high_at_least.
CitationBucket BucketCitations(uint64_t count,
                               const CitationThresholds& thresholds = {});

// Unknown (monostate), a year, a venue or paper id, a rank, or a bucket.
using AttributeValue =
    std::variant<std::monostate, int, std::string, CcfRank, CitationBucket>;

inline bool IsUnknown(const AttributeValue& v) {
  return std::holds_alternative<std::monostate>(v);
}

// One element of a hierarchy: a paper, or a citation link (cited paper plus
// the citing paper).
struct Element {
  PaperIndex paper;
  std::optional<PaperIndex> citing;

  bool operator==(const Element&) const = default;
};

std::vector<Element> ElementsOf(const Corpus& corpus, const PaperSet& set,
                                Mode mode);

// "p1" for papers, "p7->p1" for citation links.
std::string ElementId(const Corpus& corpus, const Element& element);

// Throws InvalidAttributeForMode for a C.* key on a paper element.
AttributeValue AttributeValueOf(const Corpus& corpus, const Element& element,
                                AttributeKey key,
                                const CitationThresholds& thresholds = {});

// Human-readable form: "2019", "Unknown", venue canonical name, paper
// title, "A", "High".
std::string DisplayValue(const Corpus& corpus, AttributeKey key,
                         const AttributeValue& value);

enum class Measure { kPaperCount, kTotalCitations, kHIndex };

std::string_view MeasureName(Measure measure);  // "papers", "citations", "h_index"
std::optional<Measure> ParseMeasure(std::string_view name);

struct ValueGroup {
  std::string label;
  std::vector<AttributeValue> values;
};

// Bar grouping for one chain attribute. Groups listed in `ignored`, or
// labelled literally "ignore", are removed from the hierarchy.
struct GroupSpec {
  AttributeKey attribute;
  std::vector<ValueGroup> groups;
  std::vector<std::string> ignored;
};

inline constexpr std::string_view kIgnoreLabel = "ignore";

// A brushed year range [from_year, to_year], labelled "from–to".
ValueGroup YearRangeGroup(int from_year, int to_year);

struct HierarchyRequest {
  Mode mode = Mode::kPapers;
  std::vector<AttributeKey> chain;
  std::vector<GroupSpec> groups;
  Measure measure = Measure::kPaperCount;
  CitationThresholds thresholds;
};

struct HierarchyNode {
  std::optional<AttributeKey> attribute;  // nullopt at the root
  AttributeValue value;                   // monostate for root and groups
  std::optional<std::string> group;       // group label for grouped bars
  std::optional<std::pair<int, int>> year_range;  // for year groups
  std::string label;
  // Position among siblings for ordered attributes: the year (or a year
  // group's first year), rank or bucket ordinal. Unknown sorts last.
  int64_t ordinal = 0;
  uint64_t width = 0;    // leaf descendants; 1 for a leaf
  uint64_t measure = 0;  // computed over the node's element subset
  std::vector<HierarchyNode> children;
  std::vector<uint32_t> elements;  // leaves only; indices into Hierarchy::elements
  bool leaf = false;

  bool operator==(const HierarchyNode&) const = default;
};

struct Hierarchy {
  HierarchyRequest request;
  std::string label;  // label of the source paper set
  std::vector<Element> elements;
  HierarchyNode root;
};

// Throws ChainTooLong, RepeatedAttribute, InvalidAttributeForMode,
// InvalidGroupSpec or InvalidThresholds.
void ValidateRequest(const HierarchyRequest& request);

Hierarchy BuildHierarchy(const Corpus& corpus, const PaperSet& set,
                         const HierarchyRequest& request);

// Rebuilds with chain[i] = request.chain[permutation[i]]. Throws
// InvalidArgument when `permutation` is not a permutation of the chain.
Hierarchy ReorderChain(const Corpus& corpus, const PaperSet& set,
                       const HierarchyRequest& request,
                       std::span<const size_t> permutation);

// Measure over an arbitrary element subset, as used for every node.
uint64_t ComputeMeasure(const Corpus& corpus, std::span<const Element> elements,
                        std::span<const uint32_t> subset, Mode mode,
                        Measure measure);

// Sorts `nodes` (siblings for `key`) into canonical bar order: years
// ascending with Unknown last, ranks A..Unranked, buckets High..Low, venues
// and papers by measure descending then label.
void SortSiblings(AttributeKey key, std::vector<HierarchyNode>& nodes);

// Leaves in depth-first order.
std::vector<const HierarchyNode*> Leaves(const Hierarchy& h);

struct AlignedSlot {
  std::string key;  // display key in the upper hierarchy's frame
  std::optional<HierarchyNode> upper;  // shallow copy; nullopt = placeholder
  std::optional<HierarchyNode> lower;
  uint64_t width = 0;  // leaf slots below (1 for a leaf slot)
  std::vector<AlignedSlot> children;

  uint64_t upper_measure() const { return upper ? upper->measure : 0; }
  uint64_t lower_measure() const { return lower ? lower->measure : 0; }
};

struct AlignedComparison {
  std::vector<AttributeKey> chain;
  int offset = 0;  // added to the lower side's year keys before matching
  AlignedSlot root;
};

// Throws ChainMismatch when the chains differ and OffsetOnUnorderedAttribute
// when offset != 0 but the top-level attribute is not a year.
AlignedComparison Align(const Hierarchy& upper, const Hierarchy& lower,
                        int offset = 0);

enum class AlignedSide { kUpper, kLower };

// Drops the placeholders of one side and restores canonical sibling order:
// the inverse of Align for that side's root node.
HierarchyNode StripPlaceholders(const AlignedComparison& aligned,
                                AlignedSide side);

enum class ScaleKind { kLinear, kSqrt, kLog };

std::string_view ScaleKindName(ScaleKind kind);  // "linear", "sqrt", "log"
std::optional<ScaleKind> ParseScaleKind(std::string_view name);

// Linear: v; Sqrt: sqrt(v); Log: log10(1 + v). Throws NegativeValue.
double ScaleHeight(double value, ScaleKind kind);
std::vector<double> ScaleHeights(std::span<const double> values, ScaleKind kind);

struct DescriptionSegment {
  std::string text;
  std::string role;  // "upper", "lower" or "separator"
};

struct ComparisonDescription {
  bool aligned = false;
  std::string upper;
  std::string lower;
  std::optional<std::string> combined;  // "<upper> VS <lower>" when aligned
  std::vector<DescriptionSegment> segments;
};

ComparisonDescription DescribeComparison(const std::string& upper_label,
                                         const std::string& lower_label,
                                         bool aligned);

}  // namespace sd2

#endif  // SD2_CORE_HIST_ENGINE_H_
