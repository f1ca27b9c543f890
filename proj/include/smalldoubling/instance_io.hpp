#pragma once

// Plain-text instance files.
//
//   # comment
//   problem
//   kind steiner
//   n 5
//   terminals 0 4
//   edges
//   0 1 1000000000007
//   1 4 1000000000014
//   gap
//   2
//   1000000000000 7
//   1 3
//   seed
//   42
//
// A line holding a single word starts a section (problem, edges, sequence,
// gap, seed). Blank lines and text after '#' are ignored.

#include "additive.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace smalldoubling {

namespace io_detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_u64(const std::string& s, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
  return v;
}

inline BigInt parse_big(const std::string& s, std::size_t line) {
  try {
    return parse_bigint(s);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

inline bool is_word(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace io_detail

inline ProblemInstance parse_instance(std::istream& in) {
  using namespace io_detail;
  ProblemInstance inst;
  std::string section;
  std::set<std::string> seen;
  bool have_kind = false, have_n = false;
  std::vector<std::vector<std::string>> gap_lines;
  std::size_t gap_line_no = 0;
  std::vector<std::string> seed_tokens;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tok = split_ws(raw);
    if (tok.empty()) continue;

    if (tok.size() == 1 && is_word(tok[0])) {
      const std::string& name = tok[0];
      if (name != "problem" && name != "edges" && name != "sequence" && name != "gap" && name != "seed")
        throw ParseError(line_no, "unknown section '" + name + "'");
      if (!seen.insert(name).second) throw ParseError(line_no, "duplicate section '" + name + "'");
      section = name;
      if (name == "gap") gap_line_no = line_no;
      continue;
    }

    if (section.empty()) throw ParseError(line_no, "content before the first section");
    if (section == "problem") {
      const std::string& key = tok[0];
      if (key == "kind") {
        if (tok.size() != 2) throw ParseError(line_no, "kind takes one value");
        auto k = parse_kind(tok[1]);
        if (!k) throw ParseError(line_no, "unknown problem kind '" + tok[1] + "'");
        inst.kind = *k;
        have_kind = true;
      } else if (key == "n") {
        if (tok.size() != 2) throw ParseError(line_no, "n takes one value");
        inst.n = parse_u64(tok[1], line_no);
        have_n = true;
      } else if (key == "k") {
        if (tok.size() != 2) throw ParseError(line_no, "k takes one value");
        inst.k = parse_u64(tok[1], line_no);
      } else if (key == "terminals") {
        for (std::size_t i = 1; i < tok.size(); ++i) inst.terminals.push_back(parse_u64(tok[i], line_no));
      } else {
        throw ParseError(line_no, "unknown problem key '" + key + "'");
      }
    } else if (section == "edges") {
      if (tok.size() != 3) throw ParseError(line_no, "edge lines are 'u v w'");
      inst.edges.push_back({parse_u64(tok[0], line_no), parse_u64(tok[1], line_no), parse_big(tok[2], line_no)});
    } else if (section == "sequence") {
      for (const auto& t : tok) inst.sequence.push_back(parse_big(t, line_no));
    } else if (section == "gap") {
      if (gap_lines.size() == 3) throw ParseError(line_no, "gap section has three lines");
      gap_lines.push_back(tok);
    } else if (section == "seed") {
      if (!seed_tokens.empty() || tok.size() != 1) throw ParseError(line_no, "seed section holds one integer");
      seed_tokens = tok;
      inst.seed = parse_u64(tok[0], line_no);
    }
  }

  if (!seen.count("problem") || !have_kind) throw ParseError(line_no, "missing problem kind");
  if (inst.is_graph() && !have_n) throw ParseError(line_no, "missing vertex count n");
  if (seen.count("gap")) {
    if (gap_lines.size() != 3) throw ParseError(gap_line_no, "gap section needs d, generators and bounds lines");
    if (gap_lines[0].size() != 1) throw ParseError(gap_line_no + 1, "first gap line is the dimension");
    const auto d = parse_u64(gap_lines[0][0], gap_line_no + 1);
    if (gap_lines[1].size() != d || gap_lines[2].size() != d)
      throw ParseError(gap_line_no, "gap lines must hold d values each");
    std::vector<BigInt> gens;
    std::vector<std::uint64_t> bounds;
    for (const auto& t : gap_lines[1]) gens.push_back(parse_big(t, gap_line_no + 2));
    for (const auto& t : gap_lines[2]) bounds.push_back(parse_u64(t, gap_line_no + 3));
    try {
      inst.gap = Gap(std::move(gens), std::move(bounds));
    } catch (const std::invalid_argument& e) {
      throw ParseError(gap_line_no, e.what());
    }
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  return inst;
}

inline ProblemInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_instance(in);
}

/// Canonical text form; parse_instance(write_instance(x)) == x.
inline std::string write_instance(const ProblemInstance& inst) {
  std::ostringstream out;
  out << "problem\nkind " << to_string(inst.kind) << '\n';
  if (inst.is_graph()) out << "n " << inst.n << '\n';
  if (inst.kind == ProblemKind::ewclique) out << "k " << inst.k << '\n';
  if (inst.kind == ProblemKind::steiner) {
    out << "terminals";
    for (auto t : inst.terminals) out << ' ' << t;
    out << '\n';
  }
  if (inst.is_graph()) {
    out << "edges\n";
    for (const auto& e : inst.edges) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  } else {
    out << "sequence\n";
    for (std::size_t i = 0; i < inst.sequence.size(); ++i)
      out << inst.sequence[i] << ((i + 1) % 16 == 0 || i + 1 == inst.sequence.size() ? '\n' : ' ');
  }
  if (inst.gap) {
    out << "gap\n" << inst.gap->dim() << '\n';
    for (std::size_t i = 0; i < inst.gap->dim(); ++i) out << (i ? " " : "") << inst.gap->generators[i];
    out << '\n';
    for (std::size_t i = 0; i < inst.gap->dim(); ++i) out << (i ? " " : "") << inst.gap->bounds[i];
    out << '\n';
  }
  if (inst.seed) out << "seed\n" << *inst.seed << '\n';
  return out.str();
}

inline void save_instance(const ProblemInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_instance(inst);
}

}  // namespace smalldoubling
