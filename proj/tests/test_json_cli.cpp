#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "gfharm/cli.hpp"
#include "gfharm/fixtures.hpp"
#include "gfharm/json_io.hpp"
#include "gfharm/verify.hpp"
#include "support.hpp"

using namespace gfharm;

namespace {

struct Run {
    int code;
    Json json;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    Json j;
    if (!out.str().empty() && out.str().front() == '{') j = Json::parse(out.str());
    return {code, j, err.str()};
}

const std::vector<std::string> kGf9{"--p", "3", "--ell", "2", "--modulus", "2,1,1"};

std::vector<std::string> with_gf9(std::vector<std::string> head) {
    head.insert(head.end(), kGf9.begin(), kGf9.end());
    return head;
}

}  // namespace

TEST_CASE("scalar JSON round trip") {
    auto ring = CycloRing::for_field(3, 2);
    const auto x = CycloScalar::inverse_sqrt_prime_power(ring, 3) * CycloScalar::root(ring, 5);
    const Json j = to_json(x);
    CHECK(j["scale_exp"] == 0);
    CHECK(j["N"] == 12);
    CHECK(scalar_from_json(ring, j) == x);
    Json half = Json::object({{"coeffs", {1, 0, 0, 0}}, {"scale_exp", 2}, {"denom", 1}, {"N", 12}});
    CHECK(scalar_from_json(ring, half) == CycloScalar::rational(ring, 1, 3));
    CHECK_THROWS_AS(scalar_from_json(ring, Json::object({{"coeffs", {1, 0}}})), Error);
}

TEST_CASE("matrix and state JSON round trip") {
    auto f = make_field(3, 2);
    const OperatorMatrix fm = fourier_matrix(*f);
    const Json j = to_json(fm, true);
    CHECK(j["dim"] == 9);
    CHECK(j["backend"] == "exact");
    CHECK(j["entries"].size() == 81);
    CHECK(j["float"].size() == 81);
    const OperatorMatrix back = matrix_from_json(Json::parse(j.dump()));
    CHECK(back.equals(fm));

    const OperatorMatrix ff = fm.to_float();
    const OperatorMatrix fback = matrix_from_json(Json::parse(to_json(ff).dump()));
    CHECK_FALSE(fback.exact());
    CHECK(fback.equals(ff, 1e-15));

    const StateVector phi = phi_basis(*f, Element{4});
    CHECK(state_from_json(Json::parse(to_json(phi).dump())) == phi);

    Json plain = Json::object({{"dim", 2}, {"entries", {1, 0, 0, 1}}});
    CHECK_THROWS_AS(matrix_from_json(plain), Error);
    const OperatorMatrix two = matrix_from_json(plain, CycloRing::for_field(3, 1));
    CHECK_FALSE(two.exact());
    CHECK_THROWS_AS(matrix_from_json(Json::object({{"dim", 2}, {"entries", {1, 0, 0}}}), CycloRing::for_field(3, 1)), Error);
}

TEST_CASE("field report") {
    const Json r = field_report(*gf9_field());
    CHECK(r["dual_basis"][0] == "0,2");
    CHECK(r["elements"].size() == 9);
    CHECK(r["subfields"].size() == 2);
    CHECK(r["subfields"][0]["elements"].size() == 3);
}

TEST_CASE("cli field") {
    auto r = cli(with_gf9({"field"}));
    CHECK(r.code == kExitPass);
    CHECK(r.json["dual_basis"][0] == "0,2");
    CHECK(cli({"field", "--p", "3", "--ell", "1"}).code == kExitPass);
    CHECK(cli({"field", "--p", "4", "--ell", "1"}).code == kExitUsage);
    CHECK(cli({"field", "--p", "3", "--ell", "2", "--modulus", "1,2,1"}).code == kExitUsage);
    CHECK(cli({"field", "--p", "3", "--ell", "2", "--modulus", "x"}).code == kExitUsage);
    CHECK(cli({"field", "--p", "7", "--ell", "3"}).code == kExitPass);
    CHECK(cli({"field", "--p", "7", "--ell", "4"}).code == kExitUsage);
    CHECK(cli({"field", "--p", "7", "--ell", "4", "--max-order", "2401"}).code == kExitPass);
    CHECK(cli({"field"}).code == kExitUsage);
    CHECK(cli({"nonsense"}).code == kExitUsage);
}

TEST_CASE("cli op") {
    auto z = cli(with_gf9({"op", "zpow", "--alpha", "1,0"}));
    REQUIRE(z.code == kExitPass);
    const OperatorMatrix zm = matrix_from_json(z.json);
    CHECK(zm.equals(z_power(*gf9_field(), Element{1}).dense()));

    auto id = cli(with_gf9({"op", "displace", "--alpha", "0,0", "--beta", "0,0"}));
    REQUIRE(id.code == kExitPass);
    CHECK(matrix_from_json(id.json).equals(OperatorMatrix::identity(harmonic_ring(*gf9_field()), 9)));

    auto s = cli(with_gf9({"op", "symplectic", "--r", "1,0", "--s", "1,1", "--t", "0,1", "--float"}));
    REQUIRE(s.code == kExitPass);
    CHECK(s.json["params"]["u"] == "2,0");
    CHECK(s.json.contains("float"));
    CHECK(matrix_from_json(s.json).is_unitary());

    CHECK(cli(with_gf9({"op", "fourier", "--d", "1"})).json["dim"] == 3);
    CHECK(cli(with_gf9({"op", "fourier", "--backend", "float"})).json["backend"] == "float");
    CHECK(cli(with_gf9({"op", "projector", "--d", "1"})).code == kExitPass);
    CHECK(cli(with_gf9({"op", "frobenius", "--k", "2"})).code == kExitPass);
    CHECK(cli(with_gf9({"op", "xpow", "--beta", "9"})).code == kExitUsage);
    CHECK(cli(with_gf9({"op", "symplectic", "--r", "0", "--s", "1", "--t", "1"})).code == kExitDomain);
    CHECK(cli({"op", "displace", "--p", "2", "--ell", "2"}).code == kExitDomain);
    CHECK(cli(with_gf9({"op", "warp"})).code == kExitUsage);
}

TEST_CASE("cli spectrum and weyl") {
    auto s = cli(with_gf9({"spectrum", "frobenius"}));
    REQUIRE(s.code == kExitPass);
    CHECK(s.json["ranks"] == Json::array({6, 3}));
    CHECK(cli(with_gf9({"spectrum", "fourier"})).json["ranks"] == Json::array({3, 2, 2, 2}));

    const std::string path = "weyl_theta_test.json";
    {
        std::ofstream out(path);
        out << to_json(point_projector(*gf9_field(), Element{2})).dump();
    }
    auto w = cli(with_gf9({"weyl", "--theta", path}));
    REQUIRE(w.code == kExitPass);
    CHECK(w.json["nonzero"].size() == 9);
    CHECK(w.json["round_trip"] == true);
    CHECK(cli(with_gf9({"weyl", "--theta", "missing.json"})).code == kExitUsage);
    std::remove(path.c_str());
}

TEST_CASE("cli verify") {
    auto v = cli(with_gf9({"verify", "all"}));
    CHECK(v.code == kExitPass);
    CHECK(v.json["ok"] == true);
    CHECK(cli(with_gf9({"verify", "heisenberg", "--half-phase-offset", "1"})).code == kExitVerificationFailure);

    auto even = cli({"verify", "all", "--p", "2", "--ell", "2"});
    CHECK(even.code == kExitPass);
    int skipped = 0;
    for (const auto& c : even.json["fields"][0]["checks"]) {
        if (c["status"] == "skipped") {
            ++skipped;
            CHECK(c["detail"].get<std::string>().find("EvenCharacteristic") != std::string::npos);
        }
    }
    CHECK(skipped == 2);

    auto sweep = cli({"verify", "symplectic", "--p", "3", "--ell", "1", "--exhaustive"});
    CHECK(sweep.code == kExitPass);
    bool saw = false;
    for (const auto& c : sweep.json["fields"][0]["checks"]) {
        if (c["identity"] == "symplectic.action") {
            saw = true;
            CHECK(c["detail"].get<std::string>().find("24 elements") == 0);
        }
    }
    CHECK(saw);
    CHECK(cli({"verify", "bogus", "--p", "3"}).code == kExitUsage);
}

TEST_CASE("cli fixtures reports the entry-level diff") {
    auto r = cli({"fixtures"});
    std::set<std::string> failing;
    for (const auto& d : r.json["diff"]) failing.insert(d["name"].get<std::string>());
    CHECK(r.code == (failing.empty() ? kExitPass : kExitVerificationFailure));
    CHECK(r.json["items"].size() == run_fixtures().items.size());
    for (const auto& item : r.json["items"]) {
        CHECK((item["status"] == "fail") == (failing.count(item["name"].get<std::string>()) == 1));
    }
}
