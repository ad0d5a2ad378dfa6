#include <doctest.h>

#include "../support.hpp"
#include "ctn/families.hpp"
#include "ctn/signature.hpp"

using namespace ctn;
using test::finite_tnorm;

namespace {

Rational r(const char* s) { return Rational::parse(s); }
SignatureEntry E(Label l, const char* lo, const char* hi) { return {r(lo), r(hi), l}; }
Piece P(const char* lo, const char* hi) { return {r(lo), r(hi), PieceKind::Product}; }
Piece L(const char* lo, const char* hi) { return {r(lo), r(hi), PieceKind::Lukasiewicz}; }

}  // namespace

TEST_SUITE("signature") {
  TEST_CASE("finite signatures include boundary gaps") {
    const Label M = Label::M;
    CHECK(compute_signature(finite_tnorm({P("1/2", "1")})).entries ==
          std::vector{E(M, "0", "1/2"), E(Label::P, "1/2", "1")});
    CHECK(compute_signature(finite_tnorm({P("1/4", "1/2"), L("1/2", "3/4")})).entries ==
          std::vector{E(M, "0", "1/4"), E(Label::P, "1/4", "1/2"), E(Label::L, "1/2", "3/4"), E(M, "3/4", "1")});
    const Signature min_sig = compute_signature(finite_tnorm({}));
    CHECK(min_sig.entries == std::vector{E(M, "0", "1")});
    CHECK(min_sig.complete);
    CHECK_FALSE(min_sig.truncation_depth.has_value());
  }

  TEST_CASE("lazy signatures are flagged incomplete") {
    const Signature s = compute_signature(limit_left_tnorm(), 3);
    CHECK_FALSE(s.complete);
    CHECK(s.truncation_depth == 3u);
    CHECK(s.entries ==
          std::vector{E(Label::P, "0", "1/2"), E(Label::P, "1/2", "2/3"), E(Label::P, "2/3", "3/4")});
  }

  TEST_CASE("limit-left keeps its least entry, limit-right keeps losing it") {
    for (std::size_t d = 1; d <= 12; ++d)
      CHECK(compute_signature(limit_left_tnorm(), d).entries.front() == E(Label::P, "0", "1/2"));
    for (std::size_t d = 2; d <= 12; ++d) {
      const Signature s = compute_signature(limit_right_tnorm(), d);
      const SignatureEntry expected{Rational(1, static_cast<long long>(d + 1)), Rational(1, static_cast<long long>(d)),
                                    Label::P};
      CHECK(s.entries.front() == expected);
      const Signature shorter = compute_signature(limit_right_tnorm(), d - 1);
      for (const auto& e : shorter.entries) CHECK(prec(expected, e));
    }
  }

  TEST_CASE("interval order") {
    CHECK(prec(E(Label::P, "0", "1/2"), E(Label::P, "1/2", "2/3")));
    CHECK_FALSE(prec(E(Label::P, "1/2", "2/3"), E(Label::P, "0", "1/2")));
    CHECK(prec(E(Label::M, "0", "1/3"), E(Label::M, "2/3", "1")));
    CHECK_THROWS_AS(prec(E(Label::P, "0", "1/2"), E(Label::P, "1/3", "2/3")), std::invalid_argument);
  }

  TEST_CASE("membership in the space of signatures") {
    using enum Label;
    CHECK(validate_in_S(std::vector{E(M, "0", "1/4"), E(P, "1/4", "1/2"), E(L, "1/2", "3/4"), E(M, "3/4", "1")}));
    CHECK_FALSE(validate_in_S(std::vector{E(P, "1/4", "1/2")}));
    CHECK(validate_in_S(std::vector{E(M, "0", "1")}));
    CHECK_FALSE(validate_in_S(std::vector<SignatureEntry>{}));
    CHECK_FALSE(validate_in_S(std::vector{E(M, "0", "1/2"), E(P, "1/3", "1")}));
  }

  TEST_CASE("corpus signatures satisfy the invariants") {
    for (const auto& c : test::finite_corpus()) {
      CAPTURE(c.name);
      const Signature s = compute_signature(c.t);
      CHECK(validate_in_S(s.entries));
      CHECK(signature_invariant_violation(s).empty());
      // P and L entries are exactly the declared pieces
      std::vector<Piece> from_sig;
      for (const auto& e : s.entries)
        if (e.label != Label::M) from_sig.push_back({e.lo, e.hi, e.label == Label::P ? PieceKind::Product : PieceKind::Lukasiewicz});
      CHECK(from_sig == test::pieces_of(c.t));
      CHECK(dump_signature(s) == dump_signature(compute_signature(c.t)));
    }
  }

  TEST_CASE("random presentations give valid signatures") {
    test::Rng rng(99);
    for (int i = 0; i < 200; ++i) {
      const Signature s = compute_signature(TNorm(test::random_presentation(rng, 5, 16)));
      REQUIRE(validate_in_S(s.entries));
      REQUIRE(signature_invariant_violation(s).empty());
    }
  }

  TEST_CASE("invariant checker catches adjacent M entries") {
    Signature s;
    s.entries = {E(Label::M, "0", "1/2"), E(Label::M, "1/2", "1")};
    CHECK_FALSE(signature_invariant_violation(s).empty());
  }

  TEST_CASE("dump format") {
    CHECK(dump_signature(compute_signature(finite_tnorm({P("1/2", "1")}))) ==
          "signature v1 complete=true depth=-\nM 0 1/2\nP 1/2 1\n");
    CHECK(dump_signature(compute_signature(limit_left_tnorm(), 2)) ==
          "signature v1 complete=false depth=2\nP 0 1/2\nP 1/2 2/3\n");
  }

  TEST_CASE("shapes of finite signatures") {
    const SignatureShape s = shape_of(compute_signature(finite_tnorm({P("1/4", "1/2"), L("1/2", "3/4")})));
    CHECK(s.has_min == Tri::True);
    CHECK(*s.min_entry == E(Label::M, "0", "1/4"));
    CHECK(s.has_max == Tri::True);
    CHECK(s.dense_no_endpoints == Tri::False);
  }
}
