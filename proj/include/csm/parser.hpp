#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "csm/model.hpp"

namespace csm {

/// First syntax error in a CSM (or sequence) text.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found);

  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

/// Parses CSM text into an unvalidated model.
///
/// Grammar:
///   model := (const | block)*
///   const := "const" IDENT NAT
///   block := "block" IDENT ":=" "init" "(" IDENT ")" item*
///   item  := tc | tcd | guard | inv
///   tc    := "tc" IDENT path durs
///   tcd   := "tcd" "(" IDENT ")" IDENT path durs
///   path  := "(" IDENT ("," IDENT){2,} ")"
///   durs  := "{" (IDENT | NAT) ("," (IDENT | NAT))* "}"
///   guard := "guard" "(" IDENT ")" cond
///   inv   := "inv" "(" IDENT ")" cond
///   cond  := "[" IDENT ":" IDENT ("," IDENT ":" IDENT)* "]"
///
/// `#` starts a comment. `REQ_*` tokens in the comments right before a
/// `block`, `tc` or `tcd` keyword become that declaration's requirement tags.
Model parse_csm(std::string_view text, const std::string& file = "<input>");

/// Canonical CSM text: constants, then blocks in declaration order, one
/// declaration per line. parse_csm(print_csm(m)) == m.
std::string print_csm(const Model& model);

}  // namespace csm
