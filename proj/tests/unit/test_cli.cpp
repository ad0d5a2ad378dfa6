#include <doctest.h>

#include <sstream>

#include "../support.hpp"
#include "ctn/cli.hpp"

using namespace ctn;
using test::data_path;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eval") {
    CHECK(run({"eval", data_path("lukasiewicz.tn"), "1/2", "1/2"}).out == "0\n");
    CHECK(run({"eval", data_path("product_middle.tn"), "1/2", "1/2"}).out == "5/12\n");
    CHECK(run({"eval", data_path("mplm_a.tn"), "1/8", "5/8"}).out == "1/8\n");
    CHECK(run({"eval", data_path("theta_omega.tn"), "1/2", "1/2", "1"}).out == "5/12 error_bound=1/3\n");
    CHECK(run({"eval", data_path("limit_left.tn"), "1/3", "1/3", "4"}).out == "2/9 error_bound=2/5\n");
  }

  TEST_CASE("iso") {
    const Result limit = run({"iso", data_path("limit_left.tn"), data_path("limit_right.tn")});
    CHECK(limit.code == cli::kOk);
    CHECK(limit.out.starts_with("NOT_ISO MinimumExistsMismatch(P)\n"));
    const Result same = run({"iso", data_path("mplm_a.tn"), data_path("mplm_b.tn")});
    CHECK(same.out ==
          "ISO\n"
          "  M (0, 1/4) -> M (0, 1/10)\n"
          "  P (1/4, 1/2) -> P (1/10, 1/5)\n"
          "  L (1/2, 3/4) -> L (1/5, 9/10)\n"
          "  M (3/4, 1) -> M (9/10, 1)\n"
          "  phi [0, 1/4] -> [0, 1/10]\n"
          "  phi [1/4, 1/2] -> [1/10, 1/5]\n"
          "  phi [1/2, 3/4] -> [1/5, 9/10]\n"
          "  phi [3/4, 1] -> [9/10, 1]\n");
    CHECK(run({"iso", data_path("mplm_a.tn"), data_path("mlpm.tn")}).out ==
          "NOT_ISO FiniteLabelSequenceMismatch(1)\n  first differing position 1\n");
    CHECK(run({"iso", data_path("cantor_middle_third.tn"), data_path("cantor_svc.tn")}).out.starts_with("ISO\n"));
    const Result unknown = run({"iso", data_path("theta_zeta.tn"), data_path("cantor_non_e_interior.tn"), "5"});
    CHECK(unknown.code == cli::kUnknown);
    CHECK(unknown.out == "UNKNOWN depth=5\n");
  }

  TEST_CASE("from-lo") {
    CHECK(run({"from-lo", "omega", "3"}).out == "(1/3, 2/3)\n(7/9, 8/9)\n(25/27, 26/27)\n");
    CHECK(run({"from-lo", "omega_star", "2"}).out == "(1/3, 2/3)\n(1/9, 2/9)\n");
    CHECK(run({"from-lo", "finite:1,0", "2"}).out == "(1/3, 2/3)\n(1/9, 2/9)\n");
  }

  TEST_CASE("signature, theta, cantor") {
    CHECK(run({"signature", data_path("product_upper.tn")}).out == "signature v1 complete=true depth=-\nM 0 1/2\nP 1/2 1\n");
    CHECK(run({"signature", data_path("limit_left.tn"), "2"}).out ==
          "signature v1 complete=false depth=2\nP 0 1/2\nP 1/2 2/3\n");
    CHECK(run({"theta", data_path("product_upper.tn"), "6"}).out == "l1 v1 n=6 qualified=false\nrp: 4\nrl:\nrm: 0\nless: 0 4\n");
    CHECK(run({"theta", data_path("minimum.tn"), "4"}).out == "l1 v1 n=4 qualified=false\nrp:\nrl:\nrm: 0\n");
    const std::string ne = run({"cantor", "cantor:non-e", "1"}).out;
    CHECK(ne.starts_with("gaps depth=1 count=2\n( 0 , 1/4 )\n( 1/2 , 3/4 )\nproperty_E: false\n"));
    CHECK(ne.find("has_min: true ( 0 , 1/4 )") != std::string::npos);
  }

  TEST_CASE("roundtrip ends with PASS for every named order") {
    for (const char* o : {"omega", "omega_star", "zeta", "eta", "omega_plus_omega_star"}) {
      const Result r = run({"roundtrip", o, "8"});
      CHECK(r.code == cli::kOk);
      CHECK(r.out.ends_with("PASS\n"));
    }
  }

  TEST_CASE("axioms and surface") {
    const Result ax = run({"axioms", data_path("mplm_a.tn")});
    CHECK(ax.out.ends_with("violations=0\nOK\n"));
    CHECK(run({"axioms", data_path("limit_left.tn")}).code == cli::kPrecondition);
    CHECK(run({"surface", data_path("lukasiewicz.tn"), "3"}).out == "x\\y,0,1/2,1\n0,0,0,0\n1/2,0,0,1/2\n1,0,1/2,1\n");
    const std::string lazy = run({"surface", data_path("theta_eta.tn"), "5"}).out;
    CHECK(std::count(lazy.begin(), lazy.end(), '\n') == 6);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"eval", data_path("product.tn")}).code == cli::kUsage);
    CHECK(run({"eval", data_path("bad_directive.tn"), "1/2", "1/2"}).code == cli::kParseError);
    CHECK(run({"eval", data_path("bad_piece.tn"), "1/2", "1/2"}).code == cli::kParseError);
    CHECK(run({"eval", data_path("product.tn"), "x", "1/2"}).code == cli::kParseError);
    CHECK(run({"eval", data_path("product.tn"), "3/2", "1/2"}).code == cli::kPrecondition);
    CHECK(run({"eval", data_path("missing.tn"), "1/2", "1/2"}).code == cli::kPrecondition);
    CHECK(run({"from-lo", "omega_two", "3"}).code == cli::kParseError);
    CHECK(run({"from-lo", "finite:0,1", "3"}).code == cli::kPrecondition);
    CHECK(run({"cantor", "middle-third", "17"}).code == cli::kPrecondition);
    CHECK(run({"--help"}).code == cli::kOk);
  }

  TEST_CASE("outputs are byte-identical across runs") {
    const std::vector<std::vector<std::string>> cmds = {
        {"iso", data_path("cantor_middle_third.tn"), data_path("cantor_svc.tn")},
        {"theta", data_path("mplm_b.tn"), "32"},
        {"cantor", "non-e-interior", "4"},
        {"surface", data_path("theta_zeta.tn"), "9"},
        {"roundtrip", "eta", "12"},
    };
    for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
  }
}
