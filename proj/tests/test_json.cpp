#include <doctest.h>

#include "glsm/json_io.hpp"

using namespace glsm;

TEST_CASE("rational strings") {
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("x"), BadArgument);
}

TEST_CASE("chamber json") {
  Json j = to_json(chamber_xya_z());
  CHECK(j["exponents"] == Json::array({3, 3, -3, 3}));
  CHECK(j["subscript"] == Json::array({"z"}));
}

TEST_CASE("series round trip is exact") {
  for (const auto& theta : canonical_chambers()) {
    for (bool givental : {false, true}) {
      ISeriesQ s = givental ? build_givental<Rational>(theta, Rational(1), Rational(2))
                            : build_i_series<Rational>(theta, Rational(1), Rational(2));
      Json j = series_to_json(s);
      ISeriesQ back = series_from_json(j);
      CHECK(back.chamber == s.chamber);
      CHECK(back.hbar == s.hbar);
      CHECK(back.cutoff == s.cutoff);
      CHECK(back.givental == s.givental);
      REQUIRE(back.terms.size() == s.terms.size());
      for (const auto& [key, lp] : s.terms) {
        REQUIRE(back.terms.count(key));
        const auto& blp = back.terms.at(key);
        REQUIRE(blp.size() == lp.size());
        for (const auto& [lmask, cls] : lp) {
          REQUIRE(blp.count(lmask));
          const auto& bcls = blp.at(lmask);
          REQUIRE(bcls.terms().size() == cls.terms().size());
          for (const auto& [sector, poly] : cls.terms()) {
            REQUIRE(bcls.terms().count(sector));
            CHECK(bcls.terms().at(sector) == poly);
          }
        }
      }
      // byte-identical re-serialization
      CHECK(series_to_json(back).dump() == j.dump());
    }
  }
}
