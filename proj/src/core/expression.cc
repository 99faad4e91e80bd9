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

#include "core/expression.h"

#include <string>
#include <vector>

#include "core/error.h"

namespace sd2 {

namespace {

enum class TokenKind { kName, kPlus, kBar, kMinus, kOpen, kClose, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
};

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string name;
  auto flush = [&] {
    size_t end = name.size();
    while (end > 0 && IsSpace(name[end - 1])) --end;
    name.resize(end);
    if (!name.empty()) tokens.push_back({TokenKind::kName, name});
    name.clear();
  };
  // True when the previous character ends an operand boundary, which is
  // where a '-' reads as set difference.
  bool at_boundary = true;
  for (char c : text) {
    TokenKind op = TokenKind::kEnd;
    if (c == '+') op = TokenKind::kPlus;
    if (c == '|') op = TokenKind::kBar;
    if (c == '(') op = TokenKind::kOpen;
    if (c == ')') op = TokenKind::kClose;
    if (c == '-' && at_boundary) op = TokenKind::kMinus;
    if (op != TokenKind::kEnd) {
      flush();
      tokens.push_back({op, std::string(1, c)});
      at_boundary = true;
      continue;
    }
    if (IsSpace(c)) {
      if (!name.empty()) name.push_back(c);
      at_boundary = true;
      continue;
    }
    name.push_back(c);
    at_boundary = false;
  }
  flush();
  tokens.push_back({TokenKind::kEnd, ""});
  return tokens;
}

class Parser {
 public:
  Parser(const Corpus& corpus, std::vector<Token> tokens)
      : corpus_(corpus), tokens_(std::move(tokens)) {}

  CombinationSpec Parse() {
    if (Peek() == TokenKind::kEnd) Fail("empty expression");
    if (Peek() == TokenKind::kMinus) {
      Fail("expression has no positive operand before '-'");
    }
    ParsePositive();
    while (Peek() == TokenKind::kMinus) {
      Next();
      Add(ExpectName(), OperatorLabel::kNot);
    }
    if (Peek() != TokenKind::kEnd) {
      Fail("unexpected '" + tokens_[pos_].text + "'");
    }
    return spec_;
  }

 private:
  TokenKind Peek() const { return tokens_[pos_].kind; }
  const Token& Next() { return tokens_[pos_++]; }

  std::string ExpectName() {
    if (Peek() != TokenKind::kName) {
      Fail(Peek() == TokenKind::kEnd
               ? std::string("expression ends where an operand is expected")
               : "expected an operand, found '" + tokens_[pos_].text + "'");
    }
    return Next().text;
  }

  void ParsePositive() {
    if (Peek() == TokenKind::kName && tokens_[pos_ + 1].kind == TokenKind::kBar) {
      Add(Next().text, OperatorLabel::kOr);
      while (Peek() == TokenKind::kBar) {
        Next();
        Add(ExpectName(), OperatorLabel::kOr);
      }
      if (Peek() == TokenKind::kPlus) {
        Fail("mixing '+' and '|' requires parentheses around the '|' group");
      }
      return;
    }
    bool group_seen = false;
    for (;;) {
      if (Peek() == TokenKind::kOpen) {
        if (group_seen) Fail("only one parenthesized '|' group is supported");
        group_seen = true;
        Next();
        Add(ExpectName(), OperatorLabel::kOr);
        while (Peek() == TokenKind::kBar) {
          Next();
          Add(ExpectName(), OperatorLabel::kOr);
        }
        if (Peek() != TokenKind::kClose) Fail("missing ')'");
        Next();
      } else {
        Add(ExpectName(), OperatorLabel::kAnd);
      }
      if (Peek() == TokenKind::kBar) {
        Fail("mixing '+' and '|' requires parentheses around the '|' group");
      }
      if (Peek() != TokenKind::kPlus) return;
      Next();
    }
  }

  void Add(const std::string& operand, OperatorLabel label) {
    const std::string id = ResolveOperand(operand);
    if (!spec_.emplace(id, label).second) {
      Fail("scholar '" + operand + "' appears more than once");
    }
  }

  std::string ResolveOperand(const std::string& operand) const {
    if (corpus_.FindScholar(operand)) return operand;
    const ScholarProfile* match = nullptr;
    for (const ScholarProfile& s : corpus_.scholars()) {
      if (s.name != operand) continue;
      if (match != nullptr) {
        Fail("name '" + operand + "' is shared by several scholars; use an id");
      }
      match = &s;
    }
    if (match == nullptr) {
      throw Error(ErrorCode::kUnknownScholarId,
                  "no scholar with id or name '" + operand + "'");
    }
    return match->id;
  }

  const Corpus& corpus_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  CombinationSpec spec_;
};

}  // namespace

CombinationSpec ParseExpression(const Corpus& corpus, std::string_view text) {
  return Parser(corpus, Tokenize(text)).Parse();
}

}  // namespace sd2
