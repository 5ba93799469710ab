#include "rloops/io.hpp"

#include <fstream>
#include <sstream>

#include "rloops/error.hpp"

namespace rloops {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::ifstream open(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return f;
}

}  // namespace

GroupSpec parse_group_spec(std::istream& in) {
  GroupSpec spec;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    std::string rest;
    std::getline(ss, rest);
    rest = strip(rest);
    if (key == "degree") {
      if (spec.degree) fail_at(lineno, "degree given twice");
      std::size_t pos = 0;
      try {
        spec.degree = std::stoul(rest, &pos);
      } catch (const std::exception&) {
        fail_at(lineno, "bad degree '" + rest + "'");
      }
      if (pos != rest.size() || spec.degree == 0) fail_at(lineno, "bad degree '" + rest + "'");
    } else if (key == "gen") {
      if (!spec.degree) fail_at(lineno, "gen before degree");
      try {
        spec.generators.push_back(parse_cycles(rest, spec.degree));
      } catch (const InputError& e) {
        fail_at(lineno, e.what());
      }
    } else {
      fail_at(lineno, "unknown keyword '" + key + "'");
    }
  }
  if (!spec.degree) throw InputError("group file has no degree line");
  return spec;
}

GroupSpec read_group_file(const std::string& path) {
  auto f = open(path);
  return parse_group_spec(f);
}

PermGroup group_from_spec(const GroupSpec& spec) { return PermGroup::generate(spec.degree, spec.generators); }

RightLoop parse_loop(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0, order = 0;
  std::vector<std::vector<Elem>> rows;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream ss(line);
    if (!order) {
      std::string key;
      ss >> key >> order;
      if (key != "order" || !ss || order == 0) fail_at(lineno, "expected 'order N'");
      continue;
    }
    std::vector<Elem> row;
    long long v;
    while (ss >> v) {
      if (v < 0) fail_at(lineno, "negative entry");
      row.push_back(static_cast<Elem>(v));
    }
    if (!ss.eof()) fail_at(lineno, "non-numeric entry");
    rows.push_back(std::move(row));
  }
  if (!order) throw InputError("loop file has no order line");
  if (rows.size() != order)
    throw LoopValidationError(LoopDefect::not_square, rows.size(),
                              "expected " + std::to_string(order) + " rows, found " + std::to_string(rows.size()));
  return RightLoop::from_table(rows);
}

RightLoop read_loop_file(const std::string& path) {
  auto f = open(path);
  return parse_loop(f);
}

std::vector<Perm> parse_element_list(std::istream& in, std::size_t degree) {
  std::vector<Perm> out;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    try {
      out.push_back(parse_cycles(line, degree));
    } catch (const InputError& e) {
      fail_at(lineno, e.what());
    }
  }
  return out;
}

std::vector<Perm> read_element_file(const std::string& path, std::size_t degree) {
  auto f = open(path);
  return parse_element_list(f, degree);
}

}  // namespace rloops
