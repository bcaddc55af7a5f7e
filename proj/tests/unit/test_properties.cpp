#include "doctest.h"
#include "../support/properties.hpp"

namespace {

void expect(const props::Outcome& o, std::size_t cases) {
  INFO(o.summary());
  CHECK(o.cases == cases);
  CHECK(o.passed());
}

}  // namespace

TEST_CASE("factoriality") { expect(props::factoriality(props::default_seed(), 1000), 1000); }
TEST_CASE("parse-count agreement") { expect(props::parse_count_agreement(props::default_seed(), 1000), 1000); }
TEST_CASE("return conjugation") { expect(props::return_conjugation(props::default_seed(), 1000), 1000); }
TEST_CASE("saturation") { expect(props::saturation(props::default_seed(), 1000), 1000); }
TEST_CASE("fold idempotence") { expect(props::fold_idempotence(props::default_seed(), 1000), 1000); }
TEST_CASE("Nielsen-Schreier") { expect(props::nielsen_schreier(props::default_seed(), 100), 100); }
