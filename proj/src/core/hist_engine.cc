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

#include "core/hist_engine.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "core/error.h"
#include "core/metrics.h"
#include "core/scholar_sets.h"

namespace sd2 {

namespace {

constexpr int64_t kUnknownOrdinal = std::numeric_limits<int64_t>::max();

constexpr std::pair<AttributeField, std::string_view> kFieldNames[] = {
    {AttributeField::kYear, "Year"},
    {AttributeField::kVenue, "Venue"},
    {AttributeField::kCcfRank, "CcfRank"},
    {AttributeField::kCitationBucket, "CitationBucket"},
    {AttributeField::kIndividualPaper, "IndividualPaper"},
};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

int64_t ValueOrdinal(const AttributeValue& value) {
  if (const int* year = std::get_if<int>(&value)) return *year;
  if (const CcfRank* rank = std::get_if<CcfRank>(&value)) {
    return static_cast<int64_t>(*rank);
  }
  if (const CitationBucket* b = std::get_if<CitationBucket>(&value)) {
    return static_cast<int64_t>(*b);
  }
  return kUnknownOrdinal;
}

bool ValueFitsField(const AttributeValue& value, AttributeField field) {
  switch (field) {
    case AttributeField::kYear:
      return std::holds_alternative<int>(value);
    case AttributeField::kVenue:
      return std::holds_alternative<std::string>(value) || IsUnknown(value);
    case AttributeField::kIndividualPaper:
      return std::holds_alternative<std::string>(value);
    case AttributeField::kCcfRank:
      return std::holds_alternative<CcfRank>(value);
    case AttributeField::kCitationBucket:
      return std::holds_alternative<CitationBucket>(value);
  }
  return false;
}

[[noreturn]] void BadGroup(const GroupSpec& spec, const std::string& why) {
  throw Error(ErrorCode::kInvalidGroupSpec,
              "grouping on " + spec.attribute.Name() + ": " + why);
}

void ValidateGroupSpec(const GroupSpec& spec) {
  std::set<std::string> labels;
  std::set<AttributeValue> seen;
  for (const ValueGroup& group : spec.groups) {
    if (group.label.empty()) BadGroup(spec, "group with an empty label");
    if (!labels.insert(group.label).second) {
      BadGroup(spec, "duplicate group label '" + group.label + "'");
    }
    if (group.values.empty()) {
      BadGroup(spec, "group '" + group.label + "' has no values");
    }
    std::vector<int> years;
    for (const AttributeValue& value : group.values) {
      if (!ValueFitsField(value, spec.attribute.field)) {
        BadGroup(spec, "group '" + group.label +
                           "' holds a value of the wrong kind");
      }
      if (!seen.insert(value).second) {
        BadGroup(spec, "a value belongs to more than one group");
      }
      if (const int* year = std::get_if<int>(&value)) years.push_back(*year);
    }
    if (spec.attribute.is_year()) {
      std::sort(years.begin(), years.end());
      if (years.back() - years.front() + 1 != static_cast<int>(years.size())) {
        BadGroup(spec, "year group '" + group.label + "' is not contiguous");
      }
    }
  }
  for (const std::string& ignored : spec.ignored) {
    if (!labels.contains(ignored)) {
      BadGroup(spec, "ignored label '" + ignored + "' names no group");
    }
  }
}

// Where one element lands at one level: a group index, or its raw value.
struct SlotKey {
  int64_t group = -1;
  AttributeValue value;

  auto operator<=>(const SlotKey&) const = default;
};

struct LevelPlan {
  AttributeKey key;
  const GroupSpec* spec = nullptr;
  std::map<AttributeValue, size_t> group_of;
  std::vector<bool> ignored;  // per group
};

class Builder {
 public:
  Builder(const Corpus& corpus, const HierarchyRequest& request,
          Hierarchy& out)
      : corpus_(corpus), request_(request), out_(out) {
    for (const AttributeKey& key : request.chain) {
      LevelPlan plan;
      plan.key = key;
      for (const GroupSpec& spec : request.groups) {
        if (spec.attribute != key) continue;
        plan.spec = &spec;
        plan.ignored.resize(spec.groups.size());
        for (size_t g = 0; g < spec.groups.size(); ++g) {
          for (const AttributeValue& v : spec.groups[g].values) {
            plan.group_of.emplace(v, g);
          }
          const std::string& label = spec.groups[g].label;
          plan.ignored[g] =
              label == kIgnoreLabel ||
              std::find(spec.ignored.begin(), spec.ignored.end(), label) !=
                  spec.ignored.end();
        }
      }
      levels_.push_back(std::move(plan));
    }
  }

  void Run() {
    const size_t depth = levels_.size();
    slots_.resize(out_.elements.size() * depth);
    std::vector<uint32_t> kept;
    for (uint32_t e = 0; e < out_.elements.size(); ++e) {
      bool drop = false;
      for (size_t level = 0; level < depth; ++level) {
        const LevelPlan& plan = levels_[level];
        SlotKey key;
        key.value = AttributeValueOf(corpus_, out_.elements[e], plan.key,
                                     request_.thresholds);
        if (auto it = plan.group_of.find(key.value); it != plan.group_of.end()) {
          key.group = static_cast<int64_t>(it->second);
          key.value = std::monostate{};
          drop |= plan.ignored[it->second];
        }
        slots_[e * depth + level] = std::move(key);
      }
      if (!drop) kept.push_back(e);
    }
    out_.root = MakeNode(kept, 0);
    out_.root.label = out_.label;
  }

 private:
  HierarchyNode MakeNode(const std::vector<uint32_t>& subset, size_t level) {
    HierarchyNode node;
    node.measure = ComputeMeasure(corpus_, out_.elements, subset,
                                  request_.mode, request_.measure);
    if (level == levels_.size()) {
      node.leaf = true;
      node.width = 1;
      node.elements = subset;
      return node;
    }
    const size_t depth = levels_.size();
    std::map<SlotKey, std::vector<uint32_t>> buckets;
    for (uint32_t e : subset) buckets[slots_[e * depth + level]].push_back(e);

    const LevelPlan& plan = levels_[level];
    for (auto& [key, members] : buckets) {
      HierarchyNode child = MakeNode(members, level + 1);
      child.attribute = plan.key;
      if (key.group >= 0) {
        const ValueGroup& group = plan.spec->groups[key.group];
        child.group = group.label;
        child.label = group.label;
        child.ordinal = kUnknownOrdinal;
        for (const AttributeValue& v : group.values) {
          child.ordinal = std::min(child.ordinal, ValueOrdinal(v));
        }
        if (plan.key.is_year()) {
          int hi = std::numeric_limits<int>::min();
          for (const AttributeValue& v : group.values) {
            hi = std::max(hi, std::get<int>(v));
          }
          child.year_range = {static_cast<int>(child.ordinal), hi};
        }
      } else {
        child.value = key.value;
        child.label = DisplayValue(corpus_, plan.key, key.value);
        child.ordinal = ValueOrdinal(key.value);
      }
      node.width += child.width;
      node.children.push_back(std::move(child));
    }
    SortSiblings(plan.key, node.children);
    return node;
  }

  const Corpus& corpus_;
  const HierarchyRequest& request_;
  Hierarchy& out_;
  std::vector<LevelPlan> levels_;
  std::vector<SlotKey> slots_;  // element-major, one per level
};

// Identity of a bar for alignment; year keys of the lower side are shifted.
struct MatchKey {
  int kind = 0;
  int64_t a = 0;
  int64_t b = 0;
  std::string s;

  auto operator<=>(const MatchKey&) const = default;
};

MatchKey KeyOf(const HierarchyNode& node, int shift) {
  const bool year = node.attribute && node.attribute->is_year();
  MatchKey key;
  if (node.group) {
    if (node.year_range) {
      key.kind = 5;
      key.a = node.year_range->first + shift;
      key.b = node.year_range->second + shift;
    } else {
      key.kind = 6;
      key.s = *node.group;
    }
    return key;
  }
  if (const int* y = std::get_if<int>(&node.value)) {
    key.kind = 1;
    key.a = *y + (year ? shift : 0);
  } else if (const std::string* s = std::get_if<std::string>(&node.value)) {
    key.kind = 2;
    key.s = *s;
  } else if (const CcfRank* r = std::get_if<CcfRank>(&node.value)) {
    key.kind = 3;
    key.a = static_cast<int64_t>(*r);
  } else if (const CitationBucket* c = std::get_if<CitationBucket>(&node.value)) {
    key.kind = 4;
    key.a = static_cast<int64_t>(*c);
  }
  return key;
}

int64_t ShiftedOrdinal(const HierarchyNode& node, int shift) {
  if (node.ordinal == kUnknownOrdinal) return kUnknownOrdinal;
  const bool year = node.attribute && node.attribute->is_year();
  return node.ordinal + (year ? shift : 0);
}

HierarchyNode Shallow(const HierarchyNode& node) {
  HierarchyNode copy = node;
  copy.children.clear();
  return copy;
}

AlignedSlot AlignNodes(const HierarchyNode* upper, const HierarchyNode* lower,
                       int shift) {
  AlignedSlot slot;
  if (upper) slot.upper = Shallow(*upper);
  if (lower) slot.lower = Shallow(*lower);
  if (upper) {
    slot.key = upper->label;
  } else if (shift != 0 && lower->year_range) {
    slot.key = YearRangeLabel(lower->year_range->first + shift,
                              lower->year_range->second + shift);
  } else if (shift != 0 && std::holds_alternative<int>(lower->value) &&
             lower->attribute && lower->attribute->is_year()) {
    slot.key = std::to_string(std::get<int>(lower->value) + shift);
  } else {
    slot.key = lower->label;
  }

  const bool leaf = (upper ? upper->leaf : lower->leaf);
  if (leaf) {
    slot.width = 1;
    return slot;
  }

  struct Entry {
    MatchKey key;
    int64_t ordinal = 0;
    const HierarchyNode* upper = nullptr;
    const HierarchyNode* lower = nullptr;
  };
  std::vector<Entry> entries;
  std::map<MatchKey, size_t> position;
  if (upper) {
    for (const HierarchyNode& child : upper->children) {
      MatchKey key = KeyOf(child, 0);
      position.emplace(key, entries.size());
      entries.push_back({key, ShiftedOrdinal(child, 0), &child, nullptr});
    }
  }
  if (lower) {
    for (const HierarchyNode& child : lower->children) {
      MatchKey key = KeyOf(child, shift);
      if (auto it = position.find(key); it != position.end()) {
        entries[it->second].lower = &child;
      } else {
        position.emplace(key, entries.size());
        entries.push_back({key, ShiftedOrdinal(child, shift), nullptr, &child});
      }
    }
  }
  const HierarchyNode* any_child =
      !entries.empty() ? (entries[0].upper ? entries[0].upper : entries[0].lower)
                       : nullptr;
  if (any_child && any_child->attribute && any_child->attribute->is_ordered()) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) {
                       return std::tie(x.ordinal, x.key) <
                              std::tie(y.ordinal, y.key);
                     });
  }
  for (const Entry& entry : entries) {
    slot.children.push_back(AlignNodes(entry.upper, entry.lower, shift));
    slot.width += slot.children.back().width;
  }
  return slot;
}

HierarchyNode Strip(const AlignedSlot& slot, AlignedSide side,
                    std::span<const AttributeKey> chain, size_t level) {
  const std::optional<HierarchyNode>& mine =
      side == AlignedSide::kUpper ? slot.upper : slot.lower;
  HierarchyNode node = *mine;
  for (const AlignedSlot& child : slot.children) {
    const bool present =
        side == AlignedSide::kUpper ? child.upper.has_value() : child.lower.has_value();
    if (present) node.children.push_back(Strip(child, side, chain, level + 1));
  }
  if (level < chain.size()) SortSiblings(chain[level], node.children);
  return node;
}

}  // namespace

std::string AttributeKey::Name() const {
  std::string out = side == AttributeSide::kPaper ? "P." : "C.";
  for (const auto& [f, name] : kFieldNames) {
    if (f == field) out += name;
  }
  return out;
}

std::optional<AttributeKey> AttributeKey::Parse(std::string_view text) {
  std::string lowered = Lower(text);
  AttributeKey key;
  if (lowered.starts_with("p.")) {
    key.side = AttributeSide::kPaper;
  } else if (lowered.starts_with("c.")) {
    key.side = AttributeSide::kCitation;
  } else {
    return std::nullopt;
  }
  std::string_view rest = std::string_view(lowered).substr(2);
  if (rest.starts_with(' ')) rest.remove_prefix(1);
  for (const auto& [field, name] : kFieldNames) {
    if (Lower(name) == rest) {
      key.field = field;
      return key;
    }
  }
  return std::nullopt;
}

std::string_view CitationBucketName(CitationBucket bucket) {
  switch (bucket) {
    case CitationBucket::kHigh: return "High";
    case CitationBucket::kMedium: return "Medium";
    case CitationBucket::kLow: return "Low";
  }
  return "Low";
}

std::optional<CitationBucket> ParseCitationBucket(std::string_view name) {
  const std::string lowered = Lower(name);
  if (lowered == "high") return CitationBucket::kHigh;
  if (lowered == "medium") return CitationBucket::kMedium;
  if (lowered == "low") return CitationBucket::kLow;
  return std::nullopt;
}

CitationBucket BucketCitations(uint64_t count,
                               const CitationThresholds& thresholds) {
  if (thresholds.low_below > thresholds.high_at_least) {
    throw Error(ErrorCode::kInvalidThresholds,
                "low_below (" + std::to_string(thresholds.low_below) +
                    ") exceeds high_at_least (" +
                    std::to_string(thresholds.high_at_least) + ")");
  }
  if (count < thresholds.low_below) return CitationBucket::kLow;
  if (count >= thresholds.high_at_least) return CitationBucket::kHigh;
  return CitationBucket::kMedium;
}

std::vector<Element> ElementsOf(const Corpus& corpus, const PaperSet& set,
                                Mode mode) {
  std::vector<Element> out;
  for (PaperIndex p : set.members) {
    if (mode == Mode::kPapers) {
      out.push_back({p, std::nullopt});
    } else {
      for (PaperIndex q : corpus.CitingOf(p)) out.push_back({p, q});
    }
  }
  return out;
}

std::string ElementId(const Corpus& corpus, const Element& element) {
  if (!element.citing) return corpus.paper(element.paper).id;
  return corpus.paper(*element.citing).id + "->" + corpus.paper(element.paper).id;
}

AttributeValue AttributeValueOf(const Corpus& corpus, const Element& element,
                                AttributeKey key,
                                const CitationThresholds& thresholds) {
  PaperIndex p = element.paper;
  if (key.side == AttributeSide::kCitation) {
    if (!element.citing) {
      throw Error(ErrorCode::kInvalidAttributeForMode,
                  key.Name() + " needs citation elements");
    }
    p = *element.citing;
  }
  const PaperRecord& paper = corpus.paper(p);
  switch (key.field) {
    case AttributeField::kYear:
      if (paper.year) return *paper.year;
      return std::monostate{};
    case AttributeField::kVenue:
      if (paper.venue) return *paper.venue;
      return std::monostate{};
    case AttributeField::kCcfRank:
      return corpus.ClassifyPaper(p).rank;
    case AttributeField::kCitationBucket:
      return BucketCitations(corpus.CitationCount(p), thresholds);
    case AttributeField::kIndividualPaper:
      return paper.id;
  }
  return std::monostate{};
}

std::string DisplayValue(const Corpus& corpus, AttributeKey key,
                         const AttributeValue& value) {
  if (IsUnknown(value)) return "Unknown";
  if (const int* year = std::get_if<int>(&value)) return std::to_string(*year);
  if (const CcfRank* rank = std::get_if<CcfRank>(&value)) {
    return std::string(CcfRankName(*rank));
  }
  if (const CitationBucket* b = std::get_if<CitationBucket>(&value)) {
    return std::string(CitationBucketName(*b));
  }
  const std::string& id = std::get<std::string>(value);
  if (key.field == AttributeField::kVenue) {
    const VenueRecord* venue = corpus.venues().Find(id);
    return venue ? venue->canonical_name : id;
  }
  if (auto p = corpus.FindPaper(id); p && !corpus.paper(*p).title.empty()) {
    return corpus.paper(*p).title;
  }
  return id;
}

std::string_view MeasureName(Measure measure) {
  switch (measure) {
    case Measure::kPaperCount: return "papers";
    case Measure::kTotalCitations: return "citations";
    case Measure::kHIndex: return "h_index";
  }
  return "papers";
}

std::optional<Measure> ParseMeasure(std::string_view name) {
  const std::string lowered = Lower(name);
  if (lowered == "papers" || lowered == "papercount") return Measure::kPaperCount;
  if (lowered == "citations" || lowered == "totalcitations") {
    return Measure::kTotalCitations;
  }
  if (lowered == "h_index" || lowered == "hindex" || lowered == "h-index") {
    return Measure::kHIndex;
  }
  return std::nullopt;
}

ValueGroup YearRangeGroup(int from_year, int to_year) {
  if (from_year > to_year) {
    throw Error(ErrorCode::kInvalidRange, "year range is reversed");
  }
  ValueGroup group{YearRangeLabel(from_year, to_year), {}};
  for (int y = from_year; y <= to_year; ++y) group.values.emplace_back(y);
  return group;
}

void ValidateRequest(const HierarchyRequest& request) {
  if (request.chain.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "attribute chain is empty");
  }
  if (request.chain.size() > kMaxChainLength) {
    throw Error(ErrorCode::kChainTooLong,
                "at most " + std::to_string(kMaxChainLength) +
                    " attributes per chain, got " +
                    std::to_string(request.chain.size()));
  }
  std::set<AttributeKey> seen;
  for (const AttributeKey& key : request.chain) {
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kRepeatedAttribute,
                  key.Name() + " appears twice in the chain");
    }
    if (key.side == AttributeSide::kCitation &&
        request.mode != Mode::kCitations) {
      throw Error(ErrorCode::kInvalidAttributeForMode,
                  key.Name() + " is only valid in citations mode");
    }
  }
  if (request.thresholds.low_below > request.thresholds.high_at_least) {
    BucketCitations(0, request.thresholds);
  }
  std::set<AttributeKey> grouped;
  for (const GroupSpec& spec : request.groups) {
    if (!seen.contains(spec.attribute)) {
      BadGroup(spec, "attribute is not in the chain");
    }
    if (!grouped.insert(spec.attribute).second) {
      BadGroup(spec, "attribute is grouped twice");
    }
    ValidateGroupSpec(spec);
  }
}

Hierarchy BuildHierarchy(const Corpus& corpus, const PaperSet& set,
                         const HierarchyRequest& request) {
  ValidateRequest(request);
  Hierarchy out;
  out.request = request;
  out.label = set.label;
  out.elements = ElementsOf(corpus, set, request.mode);
  Builder(corpus, out.request, out).Run();
  return out;
}

Hierarchy ReorderChain(const Corpus& corpus, const PaperSet& set,
                       const HierarchyRequest& request,
                       std::span<const size_t> permutation) {
  const size_t n = request.chain.size();
  std::vector<bool> used(n, false);
  if (permutation.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation length mismatch");
  }
  HierarchyRequest permuted = request;
  for (size_t i = 0; i < n; ++i) {
    if (permutation[i] >= n || used[permutation[i]]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    }
    used[permutation[i]] = true;
    permuted.chain[i] = request.chain[permutation[i]];
  }
  return BuildHierarchy(corpus, set, permuted);
}

uint64_t ComputeMeasure(const Corpus& corpus, std::span<const Element> elements,
                        std::span<const uint32_t> subset, Mode mode,
                        Measure measure) {
  if (mode == Mode::kPapers) {
    switch (measure) {
      case Measure::kPaperCount:
        return subset.size();
      case Measure::kTotalCitations: {
        uint64_t total = 0;
        for (uint32_t e : subset) total += corpus.CitationCount(elements[e].paper);
        return total;
      }
      case Measure::kHIndex: {
        std::vector<uint64_t> counts;
        counts.reserve(subset.size());
        for (uint32_t e : subset) {
          counts.push_back(corpus.CitationCount(elements[e].paper));
        }
        return HIndex(counts);
      }
    }
  }
  // Citations mode: each cited paper is scored by its links in the subset.
  if (measure == Measure::kTotalCitations) return subset.size();
  std::map<PaperIndex, uint64_t> per_paper;
  for (uint32_t e : subset) ++per_paper[elements[e].paper];
  if (measure == Measure::kPaperCount) return per_paper.size();
  std::vector<uint64_t> counts;
  counts.reserve(per_paper.size());
  for (const auto& [paper, links] : per_paper) counts.push_back(links);
  return HIndex(counts);
}

void SortSiblings(AttributeKey key, std::vector<HierarchyNode>& nodes) {
  if (key.is_ordered()) {
    std::stable_sort(nodes.begin(), nodes.end(),
                     [](const HierarchyNode& a, const HierarchyNode& b) {
                       return std::tie(a.ordinal, a.label) <
                              std::tie(b.ordinal, b.label);
                     });
    return;
  }
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const HierarchyNode& a, const HierarchyNode& b) {
                     if (a.measure != b.measure) return a.measure > b.measure;
                     if (a.label != b.label) return a.label < b.label;
                     if (a.group != b.group) return a.group < b.group;
                     return a.value < b.value;
                   });
}

std::vector<const HierarchyNode*> Leaves(const Hierarchy& h) {
  std::vector<const HierarchyNode*> out;
  std::vector<const HierarchyNode*> stack = {&h.root};
  while (!stack.empty()) {
    const HierarchyNode* node = stack.back();
    stack.pop_back();
    if (node->leaf) {
      out.push_back(node);
      continue;
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
      stack.push_back(&*it);
    }
  }
  return out;
}

AlignedComparison Align(const Hierarchy& upper, const Hierarchy& lower,
                        int offset) {
  if (upper.request.chain != lower.request.chain) {
    throw Error(ErrorCode::kChainMismatch,
                "aligned hierarchies must share the same attribute chain");
  }
  if (offset != 0 && !upper.request.chain.front().is_year()) {
    throw Error(ErrorCode::kOffsetOnUnorderedAttribute,
                "a year offset needs a year attribute at the top level, not " +
                    upper.request.chain.front().Name());
  }
  AlignedComparison out;
  out.chain = upper.request.chain;
  out.offset = offset;
  out.root = AlignNodes(&upper.root, &lower.root, offset);
  return out;
}

HierarchyNode StripPlaceholders(const AlignedComparison& aligned,
                                AlignedSide side) {
  return Strip(aligned.root, side, aligned.chain, 0);
}

std::string_view ScaleKindName(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::kLinear: return "linear";
    case ScaleKind::kSqrt: return "sqrt";
    case ScaleKind::kLog: return "log";
  }
  return "linear";
}

std::optional<ScaleKind> ParseScaleKind(std::string_view name) {
  const std::string lowered = Lower(name);
  if (lowered == "linear") return ScaleKind::kLinear;
  if (lowered == "sqrt") return ScaleKind::kSqrt;
  if (lowered == "log") return ScaleKind::kLog;
  return std::nullopt;
}

double ScaleHeight(double value, ScaleKind kind) {
  if (!(value >= 0.0)) {
    throw Error(ErrorCode::kNegativeValue,
                "cannot scale negative value " + std::to_string(value));
  }
  switch (kind) {
    case ScaleKind::kLinear: return value;
    case ScaleKind::kSqrt: return std::sqrt(value);
    case ScaleKind::kLog: return std::log10(1.0 + value);
  }
  return value;
}

std::vector<double> ScaleHeights(std::span<const double> values,
                                 ScaleKind kind) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(ScaleHeight(v, kind));
  return out;
}

ComparisonDescription DescribeComparison(const std::string& upper_label,
                                         const std::string& lower_label,
                                         bool aligned) {
  ComparisonDescription d;
  d.aligned = aligned;
  d.upper = upper_label;
  d.lower = lower_label;
  if (aligned) {
    d.combined = upper_label + " VS " + lower_label;
    d.segments = {{upper_label, "upper"}, {" VS ", "separator"},
                  {lower_label, "lower"}};
  } else {
    d.segments = {{upper_label, "upper"}, {lower_label, "lower"}};
  }
  return d;
}

}  // namespace sd2
