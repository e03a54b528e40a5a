#include <doctest.h>

#include <sstream>

#include "trefoil/cli.hpp"
#include "trefoil/report.hpp"

using namespace trefoil;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exact scalar encoding") {
  CHECK(scalar_json(rat(-3, 4)).dump() == R"({"rat":[-3,4]})");
  CHECK(scalar_json(Surd<3>(rat(1, 2), rat(-1, 6))).dump() == R"({"rat":[1,2],"surd":{"c":[-1,6],"d":3}})");
  CHECK(scalar_from_json<Surd<3>>(scalar_json(Surd<3>(rat(1, 2), rat(-1, 6)))) == Surd<3>(rat(1, 2), rat(-1, 6)));
  BigInt huge = BigInt(1) << 100;
  CHECK(rational_from_pair(rational_pair(Rational(huge, 3))) == Rational(huge, 3));
}

TEST_CASE("quaternion and isometry round trip") {
  auto d = p61_data();
  json j = to_json(d.gen_b);
  CHECK(affine_from_json<Surd<3>>(j) == d.gen_b);
  auto m = affine_matrix4(d.gen_b);
  CHECK(matrix_from_json<Surd<3>, 4, 4>(to_json(m)) == m);
}

TEST_CASE("exact reports round trip byte for byte") {
  for (std::vector<std::string> args : {std::vector<std::string>{"rep", "--x", "1", "--affine", "--json"},
                                        {"rep", "--x", "-1", "--affine", "--json"},
                                        {"crystal", "verify", "P61", "--json"},
                                        {"crystal", "classify", "--matrix", R"([[0,-1,0,"1/2"],[1,0,0,0],[0,0,1,"1/4"]])", "--json"}}) {
    Run r = cli(args);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["backend"] == "exact");
    CHECK(dump(j) + "\n" == r.out);
  }
}

TEST_CASE("parse_x") {
  CHECK(parse_x("0.5").value == 0.5);
  CHECK_FALSE(parse_x("0.5").exact);
  CHECK(*parse_x("1/2").exact == rat(1, 2));
  CHECK(*parse_x("-1").exact == -1);
  CHECK(parse_x("sqrt(3)/2").value == doctest::Approx(std::sqrt(3.0) / 2));
  CHECK(*parse_x("sqrt(4)").exact == 2);
  CHECK(parse_x("cos(pi/7)").value == doctest::Approx(std::cos(std::acos(-1.0) / 7)));
  CHECK_THROWS_AS(parse_x("banana"), ParseError);
  CHECK_THROWS_AS(parse_x("1/0"), ParseError);
}

TEST_CASE("command results") {
  Run c = cli({"classify", "--x", "0.5", "--json"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["results"]["case"] == "Case1_spherical");
  Run p = cli({"properness", "--x", "1", "--json"});
  CHECK(json::parse(p.out)["results"]["verdict"] == "not_proper");
  Run m = cli({"margulis", "--x", "2", "--json"});
  CHECK(json::parse(m.out)["results"]["alpha"].get<double>() == doctest::Approx(13 * std::sqrt(3.0) / 4));
  Run f = cli({"fox", "--word", "ab", "--json"});
  CHECK(json::parse(f.out)["results"]["d/db"] == "a");
  Run i = cli({"invariants", "--x", "0.5"});
  CHECK(i.code == 0);
  CHECK(i.out.find("cone_trig") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({"classify", "--x", "0.5"}).code == 0);
  CHECK(cli({"relation-check", "--x", "0.7"}).code == 0);
  CHECK(cli({"relation-check", "--x", "0.7", "--word", "ab"}).code == 1);
  CHECK(cli({"crystal", "verify", "I213"}).code == 0);
  CHECK(cli({"rep", "--x", "0", "--affine"}).code == 1);
  CHECK(cli({}).code == 2);
  CHECK(cli({"classify"}).code == 2);
  CHECK(cli({"classify", "--x", "0.5", "--bogus"}).code == 2);
  CHECK(cli({"classify", "--x", "zzz"}).code == 2);
  CHECK(cli({"crystal", "verify", "P1"}).code == 2);
  CHECK(cli({"fox", "--word", "abc"}).code == 2);
  Run h = cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("^n") != std::string::npos);
}
