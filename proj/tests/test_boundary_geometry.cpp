#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "paramod/boundary_geometry.hpp"

using namespace paramod;
using L = DivisorLabel;

namespace {

AffineForm nform(const Rational& c) {
  return AffineForm{Rational(0), c, Rational(0)};
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream f(path);
  f << body;
  return path;
}

}  // namespace

TEST_CASE("shipped tables cover the five surfaces with coherent pairings") {
  GeometrySet set = shipped_geometry();
  REQUIRE(set.tables.size() == 5);
  for (L surface : {L::E1P, L::E1PP, L::H1, L::H2, L::E2}) {
    const GeometryTable& t = set.table_for(surface);
    CHECK(t.surface == surface);
    CHECK(t.sigma_sigma == Rational(-1));
    CHECK(t.sigma_fib == Rational(1));
    // Every table restricts the lambda expression's labels and itself.
    for (L needed : {L::LAMBDA, L::DELTA1, L::H0, L::H0HAT, surface})
      CHECK(t.restrictions.count(needed) == 1);
  }
  // The first two tables are reconstructed from displayed computations, the
  // other three stand in for external geometry.
  CHECK(set.table_for(L::E1P).restrictions.at(L::E1P).provenance ==
        Provenance::PaperDerived);
  CHECK(set.table_for(L::H1).restrictions.at(L::H1).provenance ==
        Provenance::ExternalOG);
  CHECK_THROWS_AS(GeometrySet{}.table_for(L::H1), std::runtime_error);
}

TEST_CASE("exact restriction is linear and uses only exact entries") {
  GeometrySet set = shipped_geometry();
  const GeometryTable& table = set.table_for(L::E1P);

  DivisorClass lambda_only = DivisorClass::single(L::LAMBDA, AffineForm(12));
  RestrictionResult r =
      restrict_to_surface(lambda_only, table, RestrictMode::Exact);
  CHECK(r.cls.coeff(SurfaceClass::kFib) == AffineForm(1));
  CHECK(r.cls.coeff(SurfaceClass::kSigma).is_zero());
  CHECK(r.discards.empty());

  DivisorClass self = DivisorClass::single(L::E1P, AffineForm(1));
  RestrictionResult rs = restrict_to_surface(self, table, RestrictMode::Exact);
  CHECK(rs.cls.coeff(SurfaceClass::kSigma) == AffineForm(-3));
  CHECK(rs.cls.coeff(SurfaceClass::kFib) == AffineForm(-4));
  CHECK(rs.cls.coeff(SurfaceClass::kG) == AffineForm(3));

  // Linearity over random exact combinations.
  std::mt19937 rng(17);
  std::uniform_int_distribution<long long> coeff(-8, 8);
  for (int k = 0; k < 50; ++k) {
    Rational a(coeff(rng)), b(coeff(rng));
    DivisorClass combo = DivisorClass::single(L::LAMBDA, AffineForm(a)) +
                         DivisorClass::single(L::E1P, AffineForm(b));
    SurfaceClass direct =
        restrict_to_surface(combo, table, RestrictMode::Exact).cls;
    SurfaceClass split = r.cls.scaled(AffineForm(a / Rational(12)));
    split += rs.cls.scaled(AffineForm(b));
    CHECK(direct == split);
  }

  // Markers are not exact classes.
  DivisorClass delta = DivisorClass::single(L::DELTA1, AffineForm(-1));
  try {
    restrict_to_surface(delta, table, RestrictMode::Exact);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("DELTA1") != std::string::npos);
  }
}

TEST_CASE("missing entries are reported by name") {
  GeometrySet set = shipped_geometry();
  const GeometryTable& table = set.table_for(L::E1P);
  DivisorClass with_k = DivisorClass::single(L::K, AffineForm(1));
  try {
    restrict_to_surface(with_k, table, RestrictMode::UpperBound);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("'K'") != std::string::npos);
    CHECK(msg.find("E1P") != std::string::npos);
  }
}

TEST_CASE("upper bound mode discards only provably nonpositive terms") {
  GeometrySet set = shipped_geometry();
  const GeometryTable& table = set.table_for(L::E1P);

  DivisorClass cls = DivisorClass::single(L::DELTA1, nform(Rational(-1, 5)));
  cls += DivisorClass::single(L::H0, nform(Rational(-4, 5)));
  RestrictionResult r =
      restrict_to_surface(cls, table, RestrictMode::UpperBound);
  // The drop is logged, the fibre multiple lands on FIB with kappa = 1.
  REQUIRE(r.discards.size() == 2);
  CHECK(r.cls.coeff(SurfaceClass::kFib) == nform(Rational(-4, 5)));
  bool saw_drop = false, saw_fibre = false;
  for (const DiscardRecord& d : r.discards) {
    if (d.term == "DELTA1") {
      saw_drop = d.action.find("discarded") != std::string::npos;
      CHECK(d.coefficient == nform(Rational(-1, 5)));
    }
    if (d.term == "H0") saw_fibre = d.action.find("kappa = 1") != std::string::npos;
  }
  CHECK(saw_drop);
  CHECK(saw_fibre);

  // A positive coefficient on a droppable entry would not be an upper
  // bound; it must be refused.
  DivisorClass added = DivisorClass::single(L::DELTA1, nform(Rational(1, 5)));
  CHECK_THROWS_AS(restrict_to_surface(added, table, RestrictMode::UpperBound),
                  std::runtime_error);
  DivisorClass added_fibre = DivisorClass::single(L::H0, AffineForm(1));
  CHECK_THROWS_AS(
      restrict_to_surface(added_fibre, table, RestrictMode::UpperBound),
      std::runtime_error);
}

TEST_CASE("subtracted effective surface classes drop from upper bounds") {
  GeometrySet set = shipped_geometry();
  const GeometryTable& table = set.table_for(L::E1P);
  // -i * (self restriction) leaves +3i on SIGMA/FIB ledger and -3i on G.
  DivisorClass cls = DivisorClass::single(L::E1P, -AffineForm::var_i());
  RestrictionResult r =
      restrict_to_surface(cls, table, RestrictMode::UpperBound);
  CHECK(r.cls.coeff(SurfaceClass::kG).is_zero());
  CHECK(r.cls.coeff(SurfaceClass::kSigma) ==
        AffineForm{Rational(0), Rational(0), Rational(3)});
  REQUIRE(r.discards.size() == 1);
  CHECK(r.discards[0].term == "G");
  CHECK(r.discards[0].coefficient ==
        AffineForm{Rational(0), Rational(0), Rational(-3)});

  // In exact mode G survives; pairing with the section is then undeclared.
  RestrictionResult exact = restrict_to_surface(cls, table, RestrictMode::Exact);
  CHECK(exact.cls.coeff(SurfaceClass::kG) ==
        AffineForm{Rational(0), Rational(0), Rational(-3)});
  try {
    sigma_pair(exact.cls, table);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("'G'") != std::string::npos);
  }

  // +i * self adds an effective class; that cannot be dropped.
  DivisorClass plus = DivisorClass::single(L::E1P, AffineForm::var_i());
  CHECK_THROWS_AS(restrict_to_surface(plus, table, RestrictMode::UpperBound),
                  std::runtime_error);
}

TEST_CASE("sigma pairing uses the declared intersection numbers") {
  GeometrySet set = shipped_geometry();
  const GeometryTable& table = set.table_for(L::E1P);
  SurfaceClass sc;
  sc.set_coeff(SurfaceClass::kSigma,
               AffineForm{Rational(0), Rational(0), Rational(3)});
  sc.set_coeff(SurfaceClass::kFib,
               AffineForm{Rational(0), Rational(-29, 44), Rational(4)});
  AffineForm pairing = sigma_pair(sc, table);
  // 3i * (-1) + ((1/11 - 3/4)n + 4i) * 1 = (1/11 - 3/4)n + i.
  CHECK(pairing == AffineForm{Rational(0), Rational(-29, 44), Rational(1)});
  CHECK(sigma_pair(SurfaceClass(), table).is_zero());
}

TEST_CASE("geometry JSON round-trip preserves every table") {
  GeometrySet set = shipped_geometry();
  Json j = geometry_set_to_json(set);
  CHECK(j.is_array());
  CHECK(j.size() == 5);
  std::string path = write_temp("geometry_roundtrip.json", j.dump(2) + "\n");
  GeometrySet back = load_geometry_file(path);
  CHECK(back == set);
  std::remove(path.c_str());
}

TEST_CASE("the shipped data file matches the built-in tables") {
  GeometrySet from_file =
      load_geometry_file(std::string(PARAMOD_DATA_DIR) +
                         "/default_geometry.json");
  CHECK(from_file == shipped_geometry());
}

TEST_CASE("malformed geometry files are rejected with context") {
  std::string bad_rational = write_temp("geometry_bad_rat.json", R"({
    "surface": "E1P",
    "sigma_sigma": "-1",
    "sigma_fib": "1",
    "restrictions": {
      "LAMBDA": {"class": {"FIB": "1/x"}, "provenance": "paper-derived"}
    }
  })");
  try {
    load_geometry_file(bad_rational);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("LAMBDA") != std::string::npos);
    CHECK(msg.find("1/x") != std::string::npos);
  }
  std::remove(bad_rational.c_str());

  std::string two_kinds = write_temp("geometry_two_kinds.json", R"({
    "surface": "H1",
    "sigma_sigma": "-1",
    "sigma_fib": "1",
    "restrictions": {
      "LAMBDA": {"class": {"FIB": "1/12"}, "effective_drop": true}
    }
  })");
  CHECK_THROWS_AS(load_geometry_file(two_kinds), std::runtime_error);
  std::remove(two_kinds.c_str());

  std::string bad_surface = write_temp("geometry_bad_surface.json", R"({
    "surface": "X9",
    "sigma_sigma": "-1",
    "sigma_fib": "1",
    "restrictions": {}
  })");
  CHECK_THROWS_AS(load_geometry_file(bad_surface), std::runtime_error);
  std::remove(bad_surface.c_str());

  std::string not_json = write_temp("geometry_not_json.json", "{{{{");
  CHECK_THROWS_AS(load_geometry_file(not_json), std::runtime_error);
  std::remove(not_json.c_str());

  CHECK_THROWS_AS(load_geometry_file("/nonexistent/geometry.json"),
                  std::runtime_error);

  std::string bad_kappa = write_temp("geometry_bad_kappa.json", R"({
    "surface": "H2",
    "sigma_sigma": "-1",
    "sigma_fib": "1",
    "restrictions": {
      "H0": {"fibre_multiple": {"min_kappa": 0}}
    }
  })");
  CHECK_THROWS_AS(load_geometry_file(bad_kappa), std::runtime_error);
  std::remove(bad_kappa.c_str());
}

TEST_CASE("provenance strings") {
  CHECK(std::string(to_string(Provenance::PaperDerived)) == "paper-derived");
  CHECK(std::string(to_string(Provenance::ExternalOG)) == "external [O'G]");
  CHECK(provenance_from_string("paper-derived") == Provenance::PaperDerived);
  CHECK(provenance_from_string("external [O'G]") == Provenance::ExternalOG);
  CHECK_THROWS_AS(provenance_from_string("guesswork"), std::runtime_error);
}
