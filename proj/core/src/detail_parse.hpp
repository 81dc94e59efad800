#ifndef CURLED2_DETAIL_PARSE_HPP
#define CURLED2_DETAIL_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "curled2/errors.hpp"

namespace curled2::detail {

// Minimal cursor over a literal; field element tokens are the maximal runs
// free of the structural characters [](),; and whitespace.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool try_consume(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!try_consume(ch))
      throw ParseError("expected '" + std::string(1, ch) + "' at position " +
                       std::to_string(pos_) + " in \"" + std::string(text_) +
                       "\"");
  }

  std::string_view token() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_structural(text_[pos_])) ++pos_;
    if (pos_ == start)
      throw ParseError("expected a field element at position " +
                       std::to_string(pos_) + " in \"" + std::string(text_) +
                       "\"");
    return text_.substr(start, pos_ - start);
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing characters in \"" + std::string(text_) +
                       "\"");
  }

 private:
  static bool is_structural(char ch) {
    return ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ',' ||
           ch == ';' || ch == ' ' || ch == '\t';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses "[[t,t],[t,t],...]" with exactly `rows` rows of two tokens each.
inline std::vector<std::string_view> bracket_rows(Cursor& cur,
                                                  std::size_t rows) {
  std::vector<std::string_view> tokens;
  cur.expect('[');
  for (std::size_t r = 0; r < rows; ++r) {
    if (r > 0) cur.expect(',');
    cur.expect('[');
    tokens.push_back(cur.token());
    cur.expect(',');
    tokens.push_back(cur.token());
    cur.expect(']');
  }
  cur.expect(']');
  return tokens;
}

}  // namespace curled2::detail

#endif
