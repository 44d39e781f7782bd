#include "randgrp/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include "randgrp/error.hpp"

namespace randgrp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

}  // namespace

Presentation parse_presentation(std::string const& text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) {
      eol = text.size();
    }
    std::string const line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    if (i == line.size() || line[i] == '#') {
      continue;
    }
    if (line.find('\r') != std::string::npos) {
      throw ParseError("carriage return; the format uses LF line endings",
                       line_no, line.find('\r') + 1);
    }
    std::size_t const key_start = i;
    while (i < line.size() && !is_space(line[i])) {
      ++i;
    }
    std::string const key = line.substr(key_start, i - key_start);
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    std::size_t const arg_start = i;
    while (i < line.size() && !is_space(line[i])) {
      ++i;
    }
    std::string const arg = line.substr(arg_start, i - arg_start);
    std::size_t trail = i;
    while (trail < line.size() && is_space(line[trail])) {
      ++trail;
    }
    if (trail < line.size() && line[trail] != '#') {
      throw ParseError("unexpected text after " + key, line_no, trail + 1);
    }

    if (key == "gens") {
      if (have_gens) {
        throw ParseError("duplicate gens line", line_no, key_start + 1);
      }
      if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("gens needs a positive integer", line_no, arg_start + 1);
      }
      int m = 0;
      try {
        m = std::stoi(arg);
      } catch (std::exception const&) {
        throw ParseError("generator count out of range", line_no, arg_start + 1);
      }
      if (m < 1) {
        throw ParseError("gens needs a positive integer", line_no, arg_start + 1);
      }
      p.generators = m;
      have_gens = true;
    } else if (key == "rel") {
      if (!have_gens) {
        throw ParseError("rel before gens", line_no, key_start + 1);
      }
      if (arg.empty()) {
        throw ParseError("rel needs a word", line_no, arg_start + 1);
      }
      Word w;
      try {
        w = Word::parse(arg);
      } catch (ParseError const& e) {
        throw ParseError("bad relator: " + std::string(e.what()), line_no,
                         arg_start + e.column());
      }
      std::string const name =
          "relator " + std::to_string(p.relators.size()) + " '" + arg + "'";
      if (w.max_generator() > p.generators) {
        throw ParseError(name + " uses a generator beyond gens " +
                             std::to_string(p.generators),
                         line_no, arg_start + 1);
      }
      if (!is_reduced(w)) {
        throw ParseError(name + " is not reduced", line_no, arg_start + 1);
      }
      if (!is_cyclically_reduced(w)) {
        throw ParseError(name + " is not cyclically reduced", line_no,
                         arg_start + 1);
      }
      p.relators.push_back(std::move(w));
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no,
                       key_start + 1);
    }
  }
  if (!have_gens) {
    throw ParseError("missing gens line", line_no == 0 ? 1 : line_no, 1);
  }
  return p;
}

Presentation read_presentation(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(Presentation const& p) {
  std::string out = "gens " + std::to_string(p.generators) + "\n";
  for (Word const& r : p.relators) {
    out += "rel " + r.to_string() + "\n";
  }
  return out;
}

void write_presentation(Presentation const& p, std::string const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path);
  }
  out << format_presentation(p);
  if (!out) {
    throw Error("write failed: " + path);
  }
}

}  // namespace randgrp
