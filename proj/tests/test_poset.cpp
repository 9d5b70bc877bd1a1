#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "ldimkit/error.hpp"
#include "ldimkit/poset.hpp"
#include "ldimkit/realizer.hpp"

using namespace ldimkit;

namespace {

std::vector<Poset> small_posets() {
  std::vector<Poset> posets;
  for (unsigned n = 1; n <= 4; ++n) {
    posets.push_back(Poset::boolean(n));
    posets.push_back(Poset::singleton(n));
  }
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = 2; m <= 4; ++m) {
      posets.push_back(Poset::multiset(n, m));
      posets.push_back(Poset::multiset_singleton(n, m));
    }
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    posets.push_back(Poset::chain(k));
    posets.push_back(Poset::antichain(k));
  }
  posets.push_back(Poset::product(Poset::chain(3), Poset::antichain(2)));
  posets.push_back(Poset::product(Poset::singleton(3), Poset::chain(2)));
  posets.push_back(Poset::product(Poset::boolean(2), Poset::multiset(2, 3)));
  return posets;
}

}  // namespace

TEST_CASE("ground sizes") {
  CHECK(Poset::boolean(4).ground_size() == 16);
  CHECK(Poset::singleton(3).ground_size() == 7);
  CHECK(Poset::multiset(2, 3).ground_size() == 9);
  CHECK(Poset::multiset_singleton(2, 3).ground_size() == 8);
  CHECK(Poset::chain(5).ground_size() == 5);
  CHECK(Poset::antichain(3).ground_size() == 3);
  CHECK(Poset::product(Poset::boolean(2), Poset::chain(3)).ground_size() == 12);
}

TEST_CASE("parameter errors") {
  const auto category_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.category();
    }
    return ErrorCategory::Io;  // sentinel: nothing thrown
  };
  CHECK(category_of([] { Poset::boolean(0); }) == ErrorCategory::Parameter);
  CHECK(category_of([] { Poset::multiset(2, 1); }) == ErrorCategory::Parameter);
  CHECK(category_of([] { Poset::chain(0); }) == ErrorCategory::Parameter);
  CHECK(category_of([] { Poset::parse("boolean"); }) == ErrorCategory::Parse);
  CHECK(category_of([] { Poset::parse("torus:3"); }) == ErrorCategory::Parse);
  CHECK(category_of([] { Poset::parse("boolean:x"); }) == ErrorCategory::Parse);
  CHECK(category_of([] { Poset::boolean(2).leq(4, 0); }) == ErrorCategory::Range);
  CHECK(category_of([] { Poset::singleton(2).leq(0, 1); }) == ErrorCategory::Range);
}

TEST_CASE("spec strings round-trip") {
  for (const auto* text : {"boolean:4", "singleton:3", "multiset:2:3", "multiset-singleton:3:2", "chain:6",
                           "antichain:2", "product(boolean:4,product(chain:2,antichain:3))"}) {
    CHECK(Poset::parse(text).spec() == text);
  }
}

TEST_CASE("element encoding") {
  const Poset b4 = Poset::boolean(4);
  CHECK(b4.leq(5, 13));  // {1,3} within {1,3,4}
  CHECK(b4.multiplicities(13) == std::vector<unsigned>{1, 0, 1, 1});
  CHECK_FALSE(Poset::boolean(2).leq(1, 2));
  CHECK_FALSE(Poset::boolean(2).leq(2, 1));

  const Poset m23 = Poset::multiset(2, 3);
  const std::vector<unsigned> low{1, 2};
  const std::vector<unsigned> high{2, 2};
  const ElementId a = m23.encode_multiplicities(low);
  const ElementId b = m23.encode_multiplicities(high);
  CHECK(a == 1 + 3 * 2);
  CHECK(m23.leq(a, b));
  CHECK_FALSE(m23.leq(b, a));
  CHECK(m23.multiplicities(b) == high);
}

TEST_CASE("singleton poset comparabilities") {
  const Poset s3 = Poset::singleton(3);
  CHECK(s3.leq(1, 3));       // {1} < {1,2}
  CHECK_FALSE(s3.leq(3, 7)); // {1,2} vs {1,2,3}
  CHECK_FALSE(s3.leq(1, 2)); // {1} vs {2}
  CHECK_FALSE(s3.leq(1, 6)); // {1} vs {2,3}
  CHECK(s3.leq(4, 7));
  CHECK(s3.leq(6, 6));
}

TEST_CASE("multiset singleton comparabilities") {
  const Poset p = Poset::multiset_singleton(2, 3);
  const auto id = [&](unsigned x, unsigned y) {
    const std::vector<unsigned> v{x, y};
    return p.encode_multiplicities(v);
  };
  CHECK(p.leq(id(2, 0), id(2, 1)));
  CHECK(p.leq(id(1, 0), id(2, 1)));
  CHECK_FALSE(p.leq(id(1, 0), id(2, 0)));  // both single-support
  CHECK_FALSE(p.leq(id(1, 1), id(2, 2)));  // both two-support
  CHECK_FALSE(p.leq(id(0, 2), id(1, 1)));
}

TEST_CASE("order axioms hold by exhaustive triple enumeration") {
  for (const auto& p : small_posets()) {
    CAPTURE(p.spec());
    REQUIRE(p.ground_size() <= 512);
    const auto ids = p.elements();
    REQUIRE(ids.size() == p.ground_size());
    for (const auto a : ids) {
      CHECK(p.leq(a, a));
      for (const auto b : ids) {
        if (a != b && p.leq(a, b)) CHECK_FALSE(p.leq(b, a));
        for (const auto c : ids) {
          if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
        }
      }
    }
  }
}

TEST_CASE("dense indices are a bijection") {
  for (const auto& p : small_posets()) {
    CAPTURE(p.spec());
    const auto ids = p.elements();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      CHECK(p.id_at(i) == ids[i]);
      CHECK(p.index_of(ids[i]) == i);
    }
  }
}

TEST_CASE("multiset(n, 2) coincides with boolean(n)") {
  for (unsigned n = 1; n <= 5; ++n) {
    const Poset m = Poset::multiset(n, 2);
    const Poset b = Poset::boolean(n);
    for (ElementId x = 0; x < b.id_bound(); ++x) {
      for (ElementId y = 0; y < b.id_bound(); ++y) CHECK(m.leq(x, y) == b.leq(x, y));
    }
  }
}

TEST_CASE("singleton poset is a subposet of the Boolean lattice") {
  for (unsigned n = 1; n <= 5; ++n) {
    const Poset s = Poset::singleton(n);
    const Poset b = Poset::boolean(n);
    for (const auto x : s.elements()) {
      for (const auto y : s.elements()) {
        if (s.leq(x, y)) CHECK(b.leq(x, y));
      }
    }
  }
}

TEST_CASE("products") {
  SUBCASE("boolean(4) x boolean(3) is boolean(7) under bitmask concatenation") {
    const Poset prod = Poset::product(Poset::boolean(4), Poset::boolean(3));
    const Poset b7 = Poset::boolean(7);
    REQUIRE(prod.id_bound() == b7.id_bound());
    for (ElementId x = 0; x < 128; ++x) {
      for (ElementId y = 0; y < 128; ++y) CHECK(prod.leq(x, y) == b7.leq(x, y));
    }
  }
  SUBCASE("chain(2) x chain(2) is boolean(2)") {
    const Poset prod = Poset::product(Poset::chain(2), Poset::chain(2));
    const Poset b2 = Poset::boolean(2);
    for (ElementId x = 0; x < 4; ++x) {
      for (ElementId y = 0; y < 4; ++y) CHECK(prod.leq(x, y) == b2.leq(x, y));
    }
  }
  SUBCASE("associative up to the id encoding") {
    const Poset p = Poset::chain(3);
    const Poset q = Poset::antichain(2);
    const Poset r = Poset::singleton(2);
    const Poset left = Poset::product(Poset::product(p, q), r);
    const Poset right = Poset::product(p, Poset::product(q, r));
    CHECK(left.elements() == right.elements());
    for (const auto x : left.elements()) {
      for (const auto y : left.elements()) CHECK(left.leq(x, y) == right.leq(x, y));
    }
  }
}

TEST_CASE("canonical linear extension") {
  CHECK(canonical_linear_extension(Poset::boolean(2)).elements == std::vector<ElementId>{0, 1, 2, 3});
  CHECK(canonical_linear_extension(Poset::chain(3)).elements == std::vector<ElementId>{0, 1, 2});
  CHECK(canonical_linear_extension(Poset::boolean(3)).elements == std::vector<ElementId>{0, 1, 2, 4, 3, 5, 6, 7});
  for (const auto& p : small_posets()) {
    CAPTURE(p.spec());
    const auto order = canonical_linear_extension(p);
    CHECK(order.size() == p.ground_size());
    CHECK(validate_ple(p, order).accepted);
  }
}
