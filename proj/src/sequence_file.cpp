#include "csm/sequence_file.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace csm {

namespace {

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

TcSequence parse_sequence(std::string_view text, const std::string& file) {
  TcSequence seq;
  std::uint32_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // Fields with their 1-based columns.
    std::vector<std::pair<std::string_view, std::uint32_t>> fields;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      fields.emplace_back(line.substr(i, j - i), static_cast<std::uint32_t>(i + 1));
      i = j;
    }
    if (fields.empty()) continue;

    auto span_at = [&](std::uint32_t column) { return SourceSpan{file, line_no, column}; };
    auto fail = [&](std::uint32_t column, const std::string& expected, std::string_view found) -> void {
      throw ParseError(span_at(column), expected, found.empty() ? "end of line" : "'" + std::string(found) + "'");
    };
    auto number = [&](std::string_view field, std::size_t prefix, std::uint32_t column) {
      std::string_view digits = field.substr(prefix);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || value > kMaxTick ||
          !std::isdigit(static_cast<unsigned char>(digits[0]))) {
        fail(column, "a natural number at most " + std::to_string(kMaxTick), field);
      }
      return value;
    };

    TimedTelecommand tc;
    if (!is_ident(fields[0].first)) fail(fields[0].second, "telecommand name", fields[0].first);
    tc.name = std::string(fields[0].first);
    if (fields.size() < 2 || !fields[1].first.starts_with("t=")) {
      fail(fields.size() < 2 ? static_cast<std::uint32_t>(line.size() + 1) : fields[1].second, "'t=<date>'",
           fields.size() < 2 ? std::string_view{} : fields[1].first);
    }
    tc.t = number(fields[1].first, 2, fields[1].second);
    if (fields.size() >= 3) {
      if (!fields[2].first.starts_with("delta=")) fail(fields[2].second, "'delta=<duration>'", fields[2].first);
      tc.delta = number(fields[2].first, 6, fields[2].second);
    }
    if (fields.size() > 3) fail(fields[3].second, "end of line", fields[3].first);
    seq.push_back(std::move(tc));
  }
  return seq;
}

std::string to_string(const TimedTelecommand& tc) {
  std::string out = tc.name + " t=" + std::to_string(tc.t);
  if (tc.delta) out += " delta=" + std::to_string(*tc.delta);
  return out;
}

std::string print_sequence(const TcSequence& seq) {
  std::ostringstream out;
  for (const auto& tc : seq) out << to_string(tc) << '\n';
  return out.str();
}

}  // namespace csm
