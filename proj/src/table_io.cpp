#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include "twystoff/analysis.hpp"
#include "twystoff/errors.hpp"

namespace twystoff {

namespace {

Stack parse_field(std::string_view text, std::size_t line_no) {
  Stack v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("csv line " + std::to_string(line_no) + ": bad integer '" + std::string(text) + "'");
  return v;
}

const std::string& fill_for(CellClass cls, const SvgPalette& palette) {
  switch (cls) {
    case CellClass::PalindromeP:
      return palette.palindrome;
    case CellClass::NonPalindrome:
      return palette.non_palindrome;
    case CellClass::WythoffPair:
      return palette.wythoff_pair;
    case CellClass::SumPair:
      return palette.sum_pair;
  }
  return palette.non_palindrome;
}

}  // namespace

std::string to_csv(const FTable& table) {
  std::string out = "a,b,c,class\n";
  for (Stack b = 1; b <= table.b_max(); ++b)
    for (Stack a = 0; a <= table.a_max(); ++a) {
      const FCell& cell = table.at(a, b);
      out += std::to_string(a) + ',' + std::to_string(b) + ',' + std::to_string(cell.c) + ',' +
             std::string(to_string(cell.cls)) + '\n';
    }
  return out;
}

FTable parse_csv(std::string_view text, RuleSet rules) {
  struct Row {
    Stack a, b;
    FCell cell;
  };
  std::vector<Row> rows;
  Stack a_max = 0;
  Stack b_max = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != "a,b,c,class") throw ParseError("csv header must be 'a,b,c,class'");
      continue;
    }
    if (line.empty()) continue;
    std::string_view fields[4];
    std::size_t f = 0;
    std::size_t pos = 0;
    for (; f < 4; ++f) {
      const auto comma = line.find(',', pos);
      if (f < 3 && comma == std::string_view::npos) break;
      fields[f] = line.substr(pos, f < 3 ? comma - pos : std::string_view::npos);
      pos = comma + 1;
    }
    if (f != 4) throw ParseError("csv line " + std::to_string(line_no) + ": expected 4 fields");
    const auto cls = parse_cell_class(fields[3]);
    if (!cls) throw ParseError("csv line " + std::to_string(line_no) + ": unknown class '" + std::string(fields[3]) + "'");
    Row row{parse_field(fields[0], line_no), parse_field(fields[1], line_no), {parse_field(fields[2], line_no), *cls}};
    if (row.b == 0) throw ParseError("csv line " + std::to_string(line_no) + ": b must be positive");
    a_max = std::max(a_max, row.a);
    b_max = std::max(b_max, row.b);
    rows.push_back(row);
  }
  if (line_no == 0) throw ParseError("empty csv");
  if (rows.size() != (a_max + 1) * b_max) throw ParseError("csv does not cover a full grid");
  FTable table(a_max, b_max, rules);
  for (const Row& r : rows) table.at(r.a, r.b) = r.cell;
  return table;
}

std::string to_svg(const FTable& table, const SvgPalette& palette) {
  constexpr int kCell = 14;
  constexpr int kMargin = 24;
  const auto cols = static_cast<int>(table.a_max() + 1);
  const auto rows = static_cast<int>(table.b_max());
  const int width = 2 * kMargin + cols * kCell;
  const int height = 2 * kMargin + rows * kCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"monospace\" font-size=\"7\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#FFFFFF\"/>\n";
  for (int col = 0; col < cols; ++col)
    os << "<text x=\"" << kMargin + col * kCell + kCell / 2 << "\" y=\"" << kMargin - 6
       << "\" text-anchor=\"middle\">" << col << "</text>\n";
  for (int row = 0; row < rows; ++row) {
    const Stack b = static_cast<Stack>(row) + 1;
    const int y = kMargin + row * kCell;
    os << "<text x=\"" << kMargin - 4 << "\" y=\"" << y + kCell - 4 << "\" text-anchor=\"end\">" << b << "</text>\n";
    for (int col = 0; col < cols; ++col) {
      const FCell& cell = table.at(static_cast<Stack>(col), b);
      const int x = kMargin + col * kCell;
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\""
         << fill_for(cell.cls, palette) << "\" stroke=\"#888888\" stroke-width=\"0.3\"><title>f(" << col << ',' << b
         << ")=" << cell.c << ' ' << to_string(cell.cls) << "</title></rect>\n";
      os << "<text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell - 4 << "\" text-anchor=\"middle\">" << cell.c
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_text(const FTable& table) {
  std::size_t width = std::to_string(table.a_max()).size();
  for (Stack b = 1; b <= table.b_max(); ++b)
    for (Stack a = 0; a <= table.a_max(); ++a) width = std::max(width, std::to_string(table.at(a, b).c).size());
  width = std::max({width, std::to_string(table.b_max()).size(), std::size_t{2}});
  auto pad = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
  std::string out = pad("b\\a");
  for (Stack a = 0; a <= table.a_max(); ++a) out += pad(std::to_string(a));
  out += '\n';
  for (Stack b = 1; b <= table.b_max(); ++b) {
    out += pad(std::to_string(b));
    for (Stack a = 0; a <= table.a_max(); ++a) out += pad(std::to_string(table.at(a, b).c));
    out += '\n';
  }
  return out;
}

}  // namespace twystoff
