#include "semiholes/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "semiholes/errors.hpp"

namespace semiholes {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_integer(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(const Token& t, std::size_t line) {
  if (!is_integer(t.text)) throw ParseError(line, t.column, "not an integer: '" + t.text + "'");
  return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

nlohmann::json to_json(const IntVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_int64_checked(x));
  return out;
}

}  // namespace

IntMat parse_mat(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto toks = tokenize(text.substr(pos, end - pos));
    if (!toks.empty()) lines.emplace_back(number, std::move(toks));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(1, 0, "empty input, expected header \"rows cols\"");

  const auto& [hline, header] = lines.front();
  if (header.size() != 2) throw ParseError(hline, 0, "header must be \"rows cols\", found " + std::to_string(header.size()) + " tokens");
  std::size_t dims[2];
  for (int k = 0; k < 2; ++k) {
    const Integer v = to_integer(header[k], hline);
    if (v < 0 || !v.fits_ulong_p()) throw ParseError(hline, header[k].column, "dimension out of range: " + header[k].text);
    dims[k] = v.get_ui();
  }
  const std::size_t m = dims[0], n = dims[1];
  if (lines.size() - 1 != m)
    throw ParseError(lines.size() > m + 1 ? lines[m + 1].first : lines.back().first, 0,
                     "expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));

  IntMat A(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& [ln, toks] = lines[r + 1];
    if (toks.size() != n) {
      const std::size_t col = toks.size() > n ? toks[n].column : 0;
      throw ParseError(ln, col,
                       "row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) + " of " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) A(r, c) = to_integer(toks[c], ln);
  }
  return A;
}

std::string render_mat(const IntMat& A) {
  std::ostringstream os;
  os << A.rows() << ' ' << A.cols() << '\n';
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) os << (c ? " " : "") << A(r, c);
    os << '\n';
  }
  return os.str();
}

std::string render_vec(const IntVec& v) { return v.str(); }

std::string render_report(const HoleReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::json doc;
    doc["matrix_dims"] = {report.rows, report.cols};
    doc["saturated"] = report.saturated;
    doc["fundamental_holes"] = nlohmann::json::array();
    for (const IntVec& f : report.fundamental_holes.points) doc["fundamental_holes"].push_back(to_json(f));
    doc["families"] = nlohmann::json::array();
    for (const HoleFamily& fam : report.families) {
      nlohmann::json free = nlohmann::json::array();
      for (std::size_t j : fam.free_columns) free.push_back(j + 1);
      doc["families"].push_back({{"fundamental", to_json(fam.fundamental)}, {"base", to_json(fam.base)}, {"free_columns", free}});
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "Found " << report.fundamental_holes.size() << " fundamental holes.\n";
  for (const IntVec& f : report.examined) {
    os << "Standard pairs of " << f << ":\n";
    std::size_t i = 0;
    for (const HoleFamily& fam : report.families) {
      if (fam.fundamental != f) continue;
      os << "  " << ++i << ": root " << fam.root << " free {";
      for (std::size_t k = 0; k < fam.free_columns.size(); ++k) os << (k ? ", " : "") << 'x' << fam.free_columns[k] + 1;
      os << "}\n";
    }
  }
  return os.str();
}

}  // namespace semiholes
