#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>

#include "gibbsgrid/energy.hpp"

namespace gibbsgrid {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("magic spec line " + std::to_string(line_no) + ": " + what);
}

int to_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "expected an integer, got '" + tok + "'");
  return v;
}

Energy parse_target(const std::string& tok, Energy m, int line_no) {
  if (tok.empty()) fail(line_no, "missing target");
  if (tok.back() == 'm') {
    const std::string factor = tok.substr(0, tok.size() - 1);
    return (factor.empty() ? 1 : to_int(factor, line_no)) * m;
  }
  return to_int(tok, line_no);
}

int one_based(const std::string& tok, int n, int line_no) {
  const int v = to_int(tok, line_no);
  if (v < 1 || v > n) fail(line_no, "index " + tok + " outside 1.." + std::to_string(n));
  return v - 1;
}

} // namespace

MagicSpec parse_magic_spec(std::istream& in) {
  std::optional<int> n;
  std::vector<SumConstraint> constraints;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;

    if (toks[0] == "n") {
      if (n) fail(line_no, "side declared twice");
      if (toks.size() != 2) fail(line_no, "expected 'n <side>'");
      n = to_int(toks[1], line_no);
      if (*n < 1) fail(line_no, "side must be positive");
      continue;
    }
    if (!n) fail(line_no, "side 'n <side>' must come first");

    const auto eq = std::find(toks.begin(), toks.end(), "=");
    if (eq == toks.begin() || eq == toks.end() || eq + 2 != toks.end()) fail(line_no, "expected '<constraint> = <target>'");
    const Energy m = magic_constant(*n);
    const Energy target = parse_target(*(eq + 1), m, line_no);
    const std::vector<std::string> head(toks.begin(), eq);
    const std::string& kind = head[0];
    const int side = *n;

    auto lines = line_constraints(side);
    auto take_line = [&](std::size_t idx) {
      lines[idx].target = target;
      constraints.push_back(lines[idx]);
    };
    const auto ns = static_cast<std::size_t>(side);
    if ((kind == "rows" || kind == "cols" || kind == "diags") && head.size() == 1) {
      const std::size_t first = kind == "rows" ? 0 : kind == "cols" ? ns : 2 * ns;
      const std::size_t count = kind == "diags" ? 2 : ns;
      for (std::size_t k = 0; k < count; ++k) take_line(first + k);
    } else if (kind == "row" && head.size() == 2) {
      take_line(static_cast<std::size_t>(one_based(head[1], side, line_no)));
    } else if (kind == "col" && head.size() == 2) {
      take_line(ns + static_cast<std::size_t>(one_based(head[1], side, line_no)));
    } else if (kind == "diag" && head.size() == 2 && (head[1] == "main" || head[1] == "anti")) {
      take_line(2 * ns + (head[1] == "main" ? 0 : 1));
    } else if (kind == "block" && head.size() == 5) {
      const int r0 = one_based(head[1], side, line_no);
      const int c0 = one_based(head[2], side, line_no);
      const int h = to_int(head[3], line_no);
      const int w = to_int(head[4], line_no);
      if (h < 1 || w < 1 || r0 + h > side || c0 + w > side) fail(line_no, "block out of bounds");
      SumConstraint c{"block " + head[1] + " " + head[2] + " " + head[3] + " " + head[4], {}, target};
      for (int r = r0; r < r0 + h; ++r)
        for (int col = c0; col < c0 + w; ++col) c.cells.push_back(static_cast<CellIndex>(r * side + col));
      constraints.push_back(std::move(c));
    } else if (kind == "cells" && head.size() >= 2) {
      SumConstraint c{"cells", {}, target};
      for (std::size_t k = 1; k < head.size(); ++k) {
        const auto comma = head[k].find(',');
        if (comma == std::string::npos) fail(line_no, "expected 'row,col' pair, got '" + head[k] + "'");
        const int r = one_based(head[k].substr(0, comma), side, line_no);
        const int col = one_based(head[k].substr(comma + 1), side, line_no);
        c.cells.push_back(static_cast<CellIndex>(r * side + col));
        c.label += " " + head[k];
      }
      constraints.push_back(std::move(c));
    } else {
      fail(line_no, "unrecognised constraint '" + kind + "'");
    }
  }
  if (!n) throw ParseError("magic spec declares no side 'n <side>'");
  if (constraints.empty()) throw ParseError("magic spec has no constraints");
  return MagicSpec(*n, std::move(constraints));
}

MagicSpec parse_magic_spec_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_magic_spec(in);
}

} // namespace gibbsgrid
