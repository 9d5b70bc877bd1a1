#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ldimkit/realizer.hpp"

namespace ldimkit {

// Orders files: one partial linear extension per line, decimal element ids
// separated by runs of whitespace. Blank (or whitespace-only) lines are
// skipped.
RealizerFamily parse_orders(std::istream& in);
RealizerFamily parse_orders(std::string_view text);
RealizerFamily read_orders_file(const std::string& path);

// Normalized form: single spaces, one member per line, trailing newline.
void write_orders(std::ostream& out, const RealizerFamily& family);
std::string format_orders(const RealizerFamily& family);
void write_orders_file(const std::string& path, const RealizerFamily& family);

enum class PublishedTable { B4, B7 };

// The listings exactly as published, irregular whitespace included.
std::string_view published_table_text(PublishedTable table);
RealizerFamily published_table(PublishedTable table);
PublishedTable parse_table_name(std::string_view name);

}  // namespace ldimkit
