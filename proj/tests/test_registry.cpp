#include <doctest.h>

#include "hbforge/errors.hpp"
#include "hbforge/io.hpp"
#include "hbforge/points.hpp"
#include "hbforge/registry.hpp"
#include "hbforge/resolutions.hpp"
#include "support.hpp"

using namespace testing_support;

TEST_CASE("deg4 entry passes every fact") {
    EntryReport rep = run_example("deg4");
    CHECK(rep.status == EntryStatus::pass);
    CHECK(rep.facts.size() >= 6);
    for (const auto& f : rep.facts) {
        CHECK(f.pass);
        CHECK(!f.provenance.empty());
    }
    CHECK(rep.to_text().find("=> PASS") != std::string::npos);
    CHECK(rep.to_json()["status"] == "PASS");
}

TEST_CASE("tight-betti-3-0 reproduces 0 -> R(-4)^3 -> R(-3)^4") {
    EntryReport rep = run_example("tight-betti-3-0");
    REQUIRE(rep.status == EntryStatus::pass);
    CHECK(rep.seed == 1);
    CHECK(rep.facts.front().computed == "0 -> R(-4)^3 -> R(-3)^4");
}

TEST_CASE("unknown ids are rejected") { CHECK_THROWS_AS(run_example("nonexistent"), Error); }

TEST_CASE("failed facts and precondition failures are told apart") {
    RegistryEntry fails{"f", "failing fact", std::nullopt, [](FactSink& s, std::uint64_t) {
                            s.check("one", 1LL, 2LL, "elementary");
                        }};
    EntryReport a = run_entry(fails);
    CHECK(a.status == EntryStatus::fail);
    CHECK(a.facts.size() == 1);
    RegistryEntry bug{"b", "pinned seed", 5, [](FactSink& s, std::uint64_t seed) {
                          s.registry_bug("seed " + std::to_string(seed) + " is not tight");
                      }};
    EntryReport b = run_entry(bug, 9);
    CHECK(b.status == EntryStatus::error);
    CHECK(b.seed == 9);
    CHECK(b.error == "registry bug: seed 9 is not tight");
    CHECK(status_name(b.status) == "ERROR");
}

TEST_CASE("run_all keeps registry order and matches single runs") {
    auto reports = run_all(3);
    REQUIRE(reports.size() == registry().size());
    for (std::size_t k = 0; k < reports.size(); ++k) {
        CHECK(reports[k].id == registry()[k].id);
        CHECK(reports[k].status == EntryStatus::pass);
    }
    CHECK(run_example(reports[2].id).to_text() == reports[2].to_text());
}

TEST_CASE("point sets round-trip through JSON") {
    PointSet ps = random_points(5, CoeffField(), 4);
    Json j = to_json(ps);
    CHECK(j["field"] == "GF(32003)");
    PointSet back = point_set_from_json(Json::parse(j.dump()));
    REQUIRE(back.size() == ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k)
        for (std::size_t c = 0; c < 3; ++c) CHECK(ps.field.equal(back.points[k][c], ps.points[k][c]));
    CHECK(back.seed == 4);
}

TEST_CASE("matrix text and Betti JSON") {
    RingPtr r = ring_xyz();
    PolyMatrix m = parse_matrix_text(r, "x, y; y, z; z, x");
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    CHECK(m.at(2, 0) == P("z", r));
    CHECK_THROWS_AS(parse_matrix_text(r, "x, y; z"), Error);
    BettiTable b = minimal_resolution(Ideal(r, Ps({"x", "y"}, r))).betti();
    Json j = to_json(b);
    REQUIRE(j.size() == 3);
    CHECK(j[1] == Json{{"i", 1}, {"j", 1}, {"beta", 2}});
    CHECK(CoeffField::parse("GF(101)") == CoeffField::prime_field(101));
}
