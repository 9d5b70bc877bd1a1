#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ldimkit/error.hpp"
#include "ldimkit/orders_io.hpp"

using namespace ldimkit;

TEST_CASE("irregular whitespace is accepted") {
  const auto f = parse_orders(" 3  1\t2 \n\n \n0   5\r\n");
  REQUIRE(f.size() == 2);
  CHECK(f[0].elements == std::vector<ElementId>{3, 1, 2});
  CHECK(f[1].elements == std::vector<ElementId>{0, 5});
  CHECK(format_orders(f) == "3 1 2\n0 5\n");
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_orders("1 2\n\n3 x 4\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_orders("-1 2\n"), Error);
  CHECK_THROWS_AS(parse_orders("99999999999999999999999\n"), Error);
}

TEST_CASE("published listings") {
  const std::string b4(published_table_text(PublishedTable::B4));
  CHECK(b4.rfind("0 8 1 9 2 3 11 4 6 7 12 14 13 15\n\n0 8 5", 0) == 0);
  const std::string b7(published_table_text(PublishedTable::B7));
  CHECK(b7.rfind(" 32 1 33 8 40", 0) == 0);
  CHECK(b7.find("\n \n") != std::string::npos);

  const auto f4 = published_table(PublishedTable::B4);
  REQUIRE(f4.size() == 4);
  CHECK(f4[3].elements == std::vector<ElementId>{4, 2, 6, 1, 3, 5, 7, 8, 9, 10});
  const auto f7 = published_table(PublishedTable::B7);
  REQUIRE(f7.size() == 7);
  CHECK(f7[0].elements.front() == 32);
  CHECK(f7[6].elements.back() == 127);

  CHECK(parse_table_name("b4") == PublishedTable::B4);
  CHECK(parse_table_name("orders7.in") == PublishedTable::B7);
  CHECK_THROWS_AS(parse_table_name("b5"), Error);
}

TEST_CASE("normalized output is byte stable") {
  for (const auto table : {PublishedTable::B4, PublishedTable::B7}) {
    const std::string once = format_orders(parse_orders(published_table_text(table)));
    const std::string twice = format_orders(parse_orders(once));
    CHECK(once == twice);
    CHECK(once.find("  ") == std::string::npos);
    CHECK(once.find("\n\n") == std::string::npos);
    CHECK(once.front() != ' ');
    CHECK(once.back() == '\n');
  }
  CHECK(format_orders(published_table(PublishedTable::B4)) ==
        "0 8 1 9 2 3 11 4 6 7 12 14 13 15\n"
        "0 8 5 12 13 2 10 6 14 3 7 11 15\n"
        "0 10 4 12 14 1 9 11 5 13 15\n"
        "4 2 6 1 3 5 7 8 9 10\n");
}

TEST_CASE("file round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "ldimkit_orders_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "orders7.in").string();
  {
    std::ofstream out(path, std::ios::binary);
    out << published_table_text(PublishedTable::B7);
  }
  const auto f = read_orders_file(path);
  CHECK(f == published_table(PublishedTable::B7));
  const auto normalized = (dir / "normalized.in").string();
  write_orders_file(normalized, f);
  std::ifstream in(normalized, std::ios::binary);
  std::stringstream bytes;
  bytes << in.rdbuf();
  CHECK(bytes.str() == format_orders(f));
  std::filesystem::remove_all(dir);

  try {
    read_orders_file((dir / "missing.in").string());
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::Io);
  }
}
