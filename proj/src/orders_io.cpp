#include "ldimkit/orders_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ldimkit/error.hpp"

namespace ldimkit {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

RealizerFamily parse_orders(std::istream& in) {
  std::vector<PartialLinearExtension> members;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    PartialLinearExtension order;
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      ElementId id = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, id);
      if (ec != std::errc{} || ptr != line.data() + j) {
        throw Error(ErrorCategory::Parse,
                    "line " + std::to_string(line_number) + ": bad element id '" + line.substr(i, j - i) + "'");
      }
      order.elements.push_back(id);
      i = j;
    }
    if (!order.empty()) members.push_back(std::move(order));
  }
  return RealizerFamily(std::move(members));
}

RealizerFamily parse_orders(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_orders(in);
}

RealizerFamily read_orders_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::Io, "cannot open orders file '" + path + "'");
  return parse_orders(in);
}

void write_orders(std::ostream& out, const RealizerFamily& family) {
  for (const auto& member : family.members()) {
    for (std::size_t i = 0; i < member.elements.size(); ++i) {
      if (i) out << ' ';
      out << member.elements[i];
    }
    out << '\n';
  }
}

std::string format_orders(const RealizerFamily& family) {
  std::ostringstream out;
  write_orders(out, family);
  return out.str();
}

void write_orders_file(const std::string& path, const RealizerFamily& family) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCategory::Io, "cannot write orders file '" + path + "'");
  write_orders(out, family);
  if (!out) throw Error(ErrorCategory::Io, "write failed for '" + path + "'");
}

}  // namespace ldimkit
