#include <doctest.h>

#include <string>

#include "support/brute.hpp"
#include "wordreg/error.hpp"
#include "wordreg/regularity.hpp"

using namespace wordreg;

namespace {

const Alphabet kBinary("01");
const Alphabet kTernary("012");
constexpr Relation kRelations[] = {Relation::Lt, Relation::Le, Relation::Eq,
                                   Relation::Gt, Relation::Ge, Relation::Ne};

}  // namespace

TEST_CASE("relation helpers") {
  for (Relation rel : kRelations) {
    CHECK(parse_relation(to_string(rel)) == rel);
    CHECK(negate(negate(rel)) == rel);
    CHECK(swap_sides(swap_sides(rel)) == rel);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        CHECK(holds(rel, a, b) == brute::relation(std::string(to_string(rel)), a, b));
        CHECK(holds(negate(rel), a, b) == !holds(rel, a, b));
        CHECK(holds(swap_sides(rel), b, a) == holds(rel, a, b));
      }
    }
  }
  CHECK_THROWS_AS((void)parse_relation("lte"), Error);
}

TEST_CASE("decide_regularity examples") {
  const auto binary = decide_regularity("01", "10", kBinary);
  CHECK(binary.regular);
  CHECK(binary.direction == Direction::Both);
  CHECK_FALSE(decide_regularity("01", "10", kTernary).regular);
  const auto hard = decide_regularity("0011", "1100", kBinary);
  CHECK_FALSE(hard.regular);
  REQUIRE(hard.certificate.has_value());
}

TEST_CASE("regularity criterion is symmetric and matches brute force") {
  for (const auto& x : brute::nonempty_words("01", 3)) {
    for (const auto& y : brute::nonempty_words("01", 3)) {
      const bool fwd = decide_regularity(x, y, kBinary).regular;
      REQUIRE(fwd == decide_regularity(y, x, kBinary).regular);
      const bool x_by_y = brute::bordered_avoider(y, x, "01", 14).empty();
      const bool y_by_x = brute::bordered_avoider(x, y, "01", 14).empty();
      REQUIRE(fwd == (x_by_y || y_by_x));
    }
  }
}

TEST_CASE("five-state automaton for 01=10") {
  const Dfa a = build_comparison_dfa("01", "10", kBinary, Relation::Eq);
  CHECK(a.state_count() == 5);
  CHECK(a.accepts(""));
  CHECK(a.accepts("0110"));
  CHECK_FALSE(a.accepts("01"));
  CHECK_FALSE(complement(a).accepts(""));
  const std::string json = serialize(a, DfaFormat::Json);
  CHECK(json.find("\"state_count\":5") != std::string::npos);
  for (const auto& z : brute::words("01", 12)) {
    REQUIRE(a.accepts(z) == (brute::count(z, "01") == brute::count(z, "10")));
  }
}

TEST_CASE("equal patterns give the full language") {
  for (const char* x : {"0", "01", "110"}) {
    const Dfa a = build_comparison_dfa(x, x, kBinary, Relation::Eq);
    CHECK(a.state_count() == 1);
    CHECK(a.accepts("0110101"));
  }
}

TEST_CASE("comparison automata agree with counting on every regular binary instance") {
  const auto texts = brute::words("01", 12);
  std::size_t instances = 0;
  for (const auto& x : brute::nonempty_words("01", 4)) {
    for (const auto& y : brute::nonempty_words("01", 4)) {
      if (!decide_regularity(x, y, kBinary).regular) continue;
      ++instances;
      std::vector<Dfa> dfas;
      for (Relation rel : kRelations) dfas.push_back(build_comparison_dfa(x, y, kBinary, rel));
      for (const auto& z : texts) {
        const std::size_t cx = brute::count(z, x);
        const std::size_t cy = brute::count(z, y);
        for (std::size_t r = 0; r < 6; ++r) {
          REQUIRE(dfas[r].accepts(z) == holds(kRelations[r], cx, cy));
        }
        // Complement coherence.
        REQUIRE(dfas[0].accepts(z) != dfas[4].accepts(z));
        REQUIRE(dfas[2].accepts(z) != dfas[5].accepts(z));
      }
    }
  }
  CHECK(instances > 100);
}

TEST_CASE("saturation: the difference never reaches +2 and never recovers from -2") {
  for (const auto& x : brute::nonempty_words("01", 3)) {
    for (const auto& y : brute::nonempty_words("01", 3)) {
      if (!is_interlaced_by(x, y, kBinary).holds) continue;
      for (const auto& z : brute::words("01", 12, 12)) {
        bool fell = false;
        for (std::size_t k = 0; k <= z.size(); ++k) {
          const std::string prefix = z.substr(0, k);
          const long diff = static_cast<long>(brute::count(prefix, x)) -
                            static_cast<long>(brute::count(prefix, y));
          REQUIRE(diff <= 1);
          if (fell) REQUIRE(diff < 0);
          if (diff <= -2) fell = true;
        }
      }
    }
  }
}

TEST_CASE("build_comparison_dfa rejects non-regular input with a certificate") {
  try {
    (void)build_comparison_dfa("01", "10", kTernary, Relation::Eq);
    FAIL("expected NotRegularError");
  } catch (const NotRegularError& e) {
    CHECK(e.code() == Errc::NotRegularInput);
    CHECK(e.certificate().s == Word("01201"));
    CHECK(check_certificate(e.certificate()).empty());
  }
}

TEST_CASE("straddle_count") {
  CHECK(straddle_count("00", "11", "01") == 1);
  CHECK(straddle_count("ab", "cd", "zz") == 0);
  CHECK(straddle_count("0", "0", "00") == 1);
  CHECK_THROWS_AS((void)straddle_count("0", "0", ""), Error);
}

TEST_CASE("straddle_count counts occurrences that cross the junction") {
  for (const auto& l : brute::nonempty_words("01", 5)) {
    for (const auto& r : brute::nonempty_words("01", 5)) {
      for (const auto& p : brute::nonempty_words("01", 3)) {
        REQUIRE(brute::count(l + r, p) ==
                brute::count(l, p) + brute::count(r, p) + straddle_count(l, r, p));
      }
    }
  }
}

TEST_CASE("certificate examples") {
  const auto cert = non_regularity_certificate("0011", "1100", kBinary);
  CHECK(cert.r == Word("1100101100"));
  CHECK(cert.dec_r == BorderDecomposition{"1100", "10", 0});
  CHECK(cert.s == Word("0011010011"));
  CHECK(cert.m == 0);
  CHECK(cert.n == 0);
  CHECK(certificate_to_json(cert) ==
        R"({"x":"0011","y":"1100","r":"1100101100","s":"0011010011",)"
        R"("dec_r":{"u":"1100","v":"10","e":0},"dec_s":{"u":"0011","v":"01","e":0},)"
        R"("c":1,"d":1,"c_prime":1,"d_prime":1,"m":0,"n":0})");

  const auto tern = non_regularity_certificate("01", "10", kTernary);
  CHECK(tern.s == Word("01201"));
  CHECK(tern.r == Word("10210"));

  try {
    (void)non_regularity_certificate("01", "10", kBinary);
    FAIL("expected CriterionHolds");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CriterionHolds);
  }
}

TEST_CASE("every non-regular certificate verifies by direct counting") {
  const auto verify = [](const std::string& x, const std::string& y, const Alphabet& sigma) {
    const auto cert = non_regularity_certificate(x, y, sigma);
    REQUIRE(check_certificate(cert, 5).empty());
    const std::string uv = cert.dec_r.u.str() + cert.dec_r.v.str();
    const std::string pq = cert.dec_s.u.str() + cert.dec_s.v.str();
    const std::size_t e = cert.dec_r.e;
    const std::size_t f = cert.dec_s.e;
    for (std::size_t i = e + 1; i <= e + 4; ++i) {
      REQUIRE(brute::count(brute::power(uv, i) + cert.dec_r.u.str(), x) == 0);
    }
    for (std::size_t j = f + 1; j <= f + 4; ++j) {
      REQUIRE(brute::count(brute::power(pq, j) + cert.dec_s.u.str(), y) == 0);
    }
    for (std::size_t i = e + 1; i <= e + 3; ++i) {
      for (std::size_t j = f + 1; j <= f + 3; ++j) {
        const std::string z = brute::power(uv, i) + brute::power(pq, j);
        REQUIRE(brute::count(z, x) == (j - f) * cert.d_prime + cert.c_prime - cert.d_prime + cert.m);
        REQUIRE(brute::count(z, y) == (i - e) * cert.d + cert.c - cert.d + cert.n);
      }
    }
  };
  for (const auto& x : brute::nonempty_words("01", 4)) {
    for (const auto& y : brute::nonempty_words("01", 4)) {
      if (!decide_regularity(x, y, kBinary).regular) verify(x, y, kBinary);
    }
  }
  for (const auto& x : brute::nonempty_words("012", 3)) {
    for (const auto& y : brute::nonempty_words("012", 3)) {
      if (!decide_regularity(x, y, kTernary).regular) verify(x, y, kTernary);
    }
  }
}

TEST_CASE("check_certificate catches tampering") {
  auto cert = non_regularity_certificate("0011", "1100", kBinary);
  auto bad = cert;
  bad.m += 1;
  CHECK_FALSE(check_certificate(bad).empty());
  bad = cert;
  bad.r = "110011";
  CHECK_FALSE(check_certificate(bad).empty());
  bad = cert;
  bad.c += 1;
  CHECK_FALSE(check_certificate(bad).empty());
}
