#include <doctest.h>

#include "../support.hpp"
#include "ctn/cantor.hpp"
#include "ctn/families.hpp"
#include "ctn/lo_reduction.hpp"
#include "ctn/tnorm.hpp"

using namespace ctn;
using test::finite_tnorm;

namespace {

Rational r(const char* s) { return Rational::parse(s); }
UnitRational u(const char* s) { return UnitRational::parse(s); }

Piece P(const char* lo, const char* hi) { return {r(lo), r(hi), PieceKind::Product}; }
Piece L(const char* lo, const char* hi) { return {r(lo), r(hi), PieceKind::Lukasiewicz}; }

}  // namespace

TEST_SUITE("tnorm") {
  TEST_CASE("evaluation inside and across pieces") {
    CHECK(eval(finite_tnorm({P("1/3", "2/3")}), u("1/2"), u("1/2")).str() == "5/12");
    CHECK(eval(finite_tnorm({L("0", "1")}), u("1/2"), u("1/2")).str() == "0");
    const TNorm two = finite_tnorm({P("1/4", "1/2"), L("1/2", "3/4")});
    CHECK(eval(two, u("1/8"), u("5/8")).str() == "1/8");
    CHECK(eval(two, u("5/8"), u("5/8")).str() == "1/2");
    CHECK(eval(two, u("3/8"), u("3/8")).str() == "5/16");
    CHECK(eval(two, u("3/8"), u("5/8")).str() == "3/8");
    for (const auto& y : unit_grid(9)) CHECK(eval(two, u("1"), y) == y);
  }

  TEST_CASE("presentations reject bad pieces") {
    CHECK_THROWS_AS(finite_tnorm({P("1/2", "1/2")}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tnorm({P("1/2", "3/2")}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tnorm({P("0", "1/2"), L("1/3", "1")}), std::invalid_argument);
    CHECK_NOTHROW(finite_tnorm({P("0", "1/2"), L("1/2", "1")}));
  }

  TEST_CASE("pieces are sorted on construction") {
    const TNorm t = finite_tnorm({L("1/2", "3/4"), P("1/4", "1/2")});
    REQUIRE(t.finite().pieces().size() == 2);
    CHECK(t.finite().pieces()[0].lo == r("1/4"));
  }

  TEST_CASE("lazy evaluation carries the tail bound") {
    const TNorm omega = build_tnorm(LinearOrder::named(NamedOrder::Omega));
    const Approximation a = eval_approx(omega, u("1/2"), u("1/2"), 1);
    CHECK(a.value.str() == "5/12");
    CHECK(a.error_bound == r("1/3"));
    CHECK(eval_approx(omega, u("0"), u("3/4"), 4).value.str() == "0");
    CHECK(eval_approx(omega, u("1/2"), u("1"), 4).value.str() == "1/2");
    CHECK_THROWS_WITH_AS(eval_approx(omega, u("1/2"), u("1/2"), 0), "empty truncation", std::invalid_argument);
    CHECK_THROWS_AS(eval(omega, u("1/2"), u("1/2")), std::logic_error);
    const TNorm product = finite_tnorm({P("0", "1")});
    CHECK(eval_approx(product, u("1/2"), u("1/2"), 3).error_bound == Rational(0));
  }

  TEST_CASE("eval_approx stays within its bound under deepening") {
    std::vector<TNorm> lazy = {build_tnorm(LinearOrder::named(NamedOrder::Omega)),
                               build_tnorm(LinearOrder::named(NamedOrder::Zeta)),
                               build_tnorm(LinearOrder::named(NamedOrder::Eta)),
                               build_tnorm_A(CantorRule::MiddleThird),
                               build_tnorm_A(CantorRule::SVC),
                               build_tnorm_A(CantorRule::NonE),
                               limit_left_tnorm(),
                               limit_right_tnorm()};
    const auto grid = unit_grid(9);
    for (const auto& t : lazy)
      for (std::uint64_t n : {1, 3, 6}) {
        const Rational bound = Rational(2) * t.generator().tail_length_bound(n);
        for (const auto& x : grid)
          for (const auto& y : grid) {
            const Rational a = eval_approx(t, x, y, n).value;
            const Rational b = eval_approx(t, x, y, n + 8).value;
            REQUIRE(abs(a - b) <= bound);
          }
      }
  }

  TEST_CASE("tail bounds dominate the remaining piece lengths") {
    std::vector<TNorm> lazy = {build_tnorm(LinearOrder::named(NamedOrder::OmegaStar)), build_tnorm_A(CantorRule::SVC),
                               build_tnorm_A(CantorRule::NonEInterior), limit_left_tnorm()};
    for (const auto& t : lazy) {
      const auto& g = t.generator();
      for (std::uint64_t n = 0; n < 6; ++n) {
        Rational visible(0);
        for (std::uint64_t k = n; k < 60; ++k) visible = visible + (g.piece_at(k).hi - g.piece_at(k).lo);
        CHECK(visible <= g.tail_length_bound(n));
      }
    }
  }

  TEST_CASE("powers") {
    const TNorm luk = finite_tnorm({L("0", "1")});
    CHECK(power(luk, u("1/2"), 2).str() == "0");
    CHECK(power(luk, u("3/7"), 1).str() == "3/7");
    CHECK(power(finite_tnorm({P("1/3", "2/3")}), u("1/2"), 2).str() == "5/12");
    CHECK_THROWS_AS(power(luk, u("1/2"), 0), std::invalid_argument);
  }

  TEST_CASE("idempotency") {
    CHECK(is_idempotent(finite_tnorm({}), u("1/2")) == Tri::True);
    CHECK(is_idempotent(finite_tnorm({L("0", "1")}), u("1/2")) == Tri::False);
    for (const auto& c : test::finite_corpus()) {
      CHECK(is_idempotent(c.t, u("0")) == Tri::True);
      CHECK(is_idempotent(c.t, u("1")) == Tri::True);
    }
    const TNorm mt = build_tnorm_A(CantorRule::MiddleThird).with_locate_depth(8);
    CHECK(is_idempotent(mt, u("1/3")) == Tri::True);
    CHECK(is_idempotent(mt, u("1/2")) == Tri::False);
    CHECK(is_idempotent(mt, u("1/4")) == Tri::Unknown);
  }

  TEST_CASE("eventual idempotency of powers") {
    using V = PowerIdempotency::Verdict;
    const TNorm luk = finite_tnorm({L("0", "1")});
    CHECK(is_eventually_idempotent_power(luk, u("1/2"), 8) == PowerIdempotency{V::Yes, 2});
    CHECK(is_eventually_idempotent_power(luk, u("9/10"), 8) == PowerIdempotency{V::Yes, 10});
    CHECK(is_eventually_idempotent_power(finite_tnorm({P("1/3", "2/3")}), u("1/2"), 64).verdict == V::No);
    CHECK(is_eventually_idempotent_power(luk, u("1"), 8) == PowerIdempotency{V::Yes, 1});
    const TNorm mt = build_tnorm_A(CantorRule::MiddleThird).with_locate_depth(8);
    CHECK(is_eventually_idempotent_power(mt, u("1/4"), 8).verdict == V::Unknown);
  }

  TEST_CASE("nilpotency closed form against iteration") {
    // Every interior q of denominator ≤ 64 in a few Łukasiewicz pieces.
    for (const Piece& p : {L("0", "1"), L("1/2", "3/4"), L("1/5", "2/7"), L("1/3", "1")}) {
      const TNorm t = finite_tnorm({p});
      for (long long d = 1; d <= 64; ++d)
        for (long long k = 0; k <= d; ++k) {
          const Rational q(k, d);
          if (!(p.lo < q && q < p.hi)) continue;
          std::uint64_t l = 1;
          for (Rational x = q; x != p.lo; x = apply_piece(p, x, q)) ++l;
          REQUIRE(lukasiewicz_nilpotency_index(p, q) == l);
          REQUIRE(power(t, UnitRational(q), l) == UnitRational(p.lo));
        }
    }
  }

  TEST_CASE("axiom check on the corpus and a corrupted operation") {
    const auto grid = unit_grid(21);
    for (const auto& c : test::finite_corpus()) {
      CAPTURE(c.name);
      const AxiomReport rep = check_axioms(c.t, grid);
      CHECK(rep.ok());
      CHECK(rep.checks > 0);
    }
    // max instead of min across pieces
    const FinitePresentation two({P("1/4", "1/2"), L("1/2", "3/4")});
    const BinaryOperation broken = [&](const Rational& x, const Rational& y) {
      const Rational v = eval(two, x, y).value();
      return v == min(x, y) ? max(x, y) : v;
    };
    const AxiomReport bad = check_axioms(broken, grid);
    CHECK_FALSE(bad.ok());
    bool neutrality = false;
    for (const auto& v : bad.violations) neutrality = neutrality || v.axiom == "neutrality";
    CHECK(neutrality);
  }

  TEST_CASE("axioms hold for random presentations") {
    test::Rng rng(7);
    const auto grid = unit_grid(13);
    for (int i = 0; i < 40; ++i) {
      const TNorm t(test::random_presentation(rng, 4, 12));
      REQUIRE(check_axioms(t, grid).ok());
    }
  }

  TEST_CASE("empirical classification matches declared kinds") {
    CHECK(classify_piece_empirically(finite_tnorm({L("1/2", "3/4")}), u("1/2"), u("3/4"), 10) == PieceKind::Lukasiewicz);
    CHECK(classify_piece_empirically(finite_tnorm({P("1/3", "2/3")}), u("1/3"), u("2/3"), 10) == PieceKind::Product);
    CHECK(classify_piece_empirically(finite_tnorm({L("0", "1")}), u("0"), u("1"), 1) == PieceKind::Lukasiewicz);
    for (const auto& c : test::finite_corpus())
      for (const auto& p : test::pieces_of(c.t))
        CHECK(classify_piece_empirically(c.t, UnitRational(p.lo), UnitRational(p.hi), 6) == p.kind);
  }

  TEST_CASE("limit families") {
    const TNorm left = limit_left_tnorm();
    const TNorm right = limit_right_tnorm();
    CHECK(left.generator().piece_at(0) == P("0", "1/2"));
    CHECK(left.generator().piece_at(2) == P("2/3", "3/4"));
    CHECK(right.generator().piece_at(0) == P("1/2", "1"));
    CHECK(right.generator().piece_at(2) == P("1/4", "1/3"));
    const Location l = left.locate(r("7/10"));
    REQUIRE(l.kind == Location::Kind::InPiece);
    CHECK(l.index == 2);
    CHECK(left.locate(r("3/4")).kind == Location::Kind::Idempotent);
    CHECK(right.locate(r("1/5")).kind == Location::Kind::Idempotent);
    CHECK(right.locate(r("2/7")).index == 2);
    // locate agrees with piece_at
    for (long long d = 2; d < 40; ++d)
      for (long long k = 1; k < d; ++k)
        for (const TNorm* t : {&left, &right}) {
          const Location loc = t->locate(Rational(k, d));
          if (loc.kind == Location::Kind::InPiece) REQUIRE(*loc.piece == t->generator().piece_at(loc.index));
        }
  }
}
