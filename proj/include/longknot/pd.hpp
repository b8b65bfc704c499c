/*! \file pd.hpp
 *  \brief PD text format.
 *
 * A document is a sequence of whitespace-separated terms `X(a,b,c,d)` with
 * nonnegative integer edge labels, `#` comments running to end of line, and
 * an optional `basepoint <edge-id>` line.  Labels may be arbitrary; they are
 * renumbered to 0..2n-1 along the orientation on parse.
 */

#pragma once

#include "longknot/diagram.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace longknot {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, int line, int column)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct pd_document {
  closed_diagram diagram;
  std::optional<int> basepoint;
};

namespace detail {

class pd_scanner {
 public:
  explicit pd_scanner(std::string_view text) : text_(text) {}

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool eof() {
    skip_blank();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  bool try_keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  long long integer() {
    skip_spaces_only();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a nonnegative integer");
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (1LL << 60)) fail("edge label too large");
      advance();
    }
    return value;
  }

  void skip_spaces_only() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
  }

  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, line_, column_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace detail

/*! \brief Parse a PD document: crossing terms plus an optional basepoint line.
 *
 * A basepoint names an edge by its label as written in the document; it is
 * translated through the canonical renumbering.
 */
inline pd_document parse_pd_document(std::string_view text) {
  detail::pd_scanner scan(text);
  std::vector<std::array<long long, 4>> quads;
  std::optional<long long> basepoint_label;
  while (!scan.eof()) {
    if (scan.try_keyword("basepoint")) {
      if (basepoint_label) scan.fail("duplicate basepoint line");
      basepoint_label = scan.integer();
      continue;
    }
    if (!scan.try_consume('X')) scan.fail("expected 'X(a,b,c,d)' or 'basepoint <edge>'");
    scan.skip_spaces_only();
    scan.expect('(');
    std::array<long long, 4> quad{};
    for (int p = 0; p < 4; ++p) {
      quad[p] = scan.integer();
      scan.skip_spaces_only();
      scan.expect(p == 3 ? ')' : ',');
    }
    quads.push_back(quad);
  }
  std::unordered_map<long long, int> label_map;
  pd_document doc{canonicalize(quads, &label_map), std::nullopt};
  if (basepoint_label) {
    auto it = label_map.find(*basepoint_label);
    if (it == label_map.end())
      throw validation_error("basepoint edge " + std::to_string(*basepoint_label) +
                             " is not an edge of the diagram");
    doc.basepoint = it->second;
  }
  return doc;
}

/*! \brief Parse PD crossing terms into a validated, canonically labeled diagram. */
inline closed_diagram parse_pd(std::string_view text) { return parse_pd_document(text).diagram; }

}  // namespace longknot
