#include <apfree/io.hpp>
#include <apfree/cache.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace apfree;

namespace {

std::filesystem::path temp_file(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("rationals serialize as exact strings") {
    Rat r(-21, 10);
    CHECK(rat_to_json(r) == Json("-21/10"));
    CHECK(rat_from_json(rat_to_json(r)) == r);
    CHECK(rat_from_json(Json(5)) == Rat(5));
    CHECK(rat_from_json(Json("1/3")) == Rat(1, 3));
}

TEST_CASE("point sets survive a JSON round trip") {
    auto q = PointSet::from_points(2, {{Rat(1, 3), Rat(-2)}, {Rat(0), Rat(7, 2)}});
    Json j = to_json(q);
    CHECK(j.at("kind") == "point_set");
    CHECK(j.at("schema") == 1);
    auto back = point_set_from_json(j);
    CHECK(back.dim() == 2);
    REQUIRE(back.size() == 2);
    CHECK(back.contains({Rat(1, 3), Rat(-2)}));
}

TEST_CASE("grid sets survive a JSON round trip") {
    auto g = GridSet::from_points(2, 5, {{0, 4}, {3, 1}});
    auto back = grid_set_from_json(to_json(g));
    CHECK(back.side() == 5);
    CHECK(back.contains({0, 4}));
    CHECK(back.contains({3, 1}));
    CHECK(back.size() == 2);
}

TEST_CASE("orientations and patches survive a JSON round trip") {
    auto o = Orientation::from_columns(2, {{Rat(3, 5), Rat(4, 5)}});
    auto o2 = orientation_from_json(to_json(o));
    CHECK(o2.ambient_dim() == 2);
    CHECK(o2.patch_dim() == 1);
    CHECK(o2.is_exact());

    Patch p = Patch::make({Rat(1, 2), Rat(0)}, Rat(2, 3), o, 3);
    Patch p2 = patch_from_json(to_json(p));
    CHECK(p2.delta == Rat(2, 3));
    CHECK(p2.t[0] == Rat(1, 2));
    CHECK(p2.k == 3);
}

TEST_CASE("detection results serialize their certificates") {
    auto q = PointSet::from_points(1, {{Rat(0)}, {Rat(1, 2)}, {Rat(1)}});
    auto det = contains_kev_ap(q, PatchSpec::make(3, Rat(0), make_axis_orientation(1, 1)));
    Json j = to_json(det);
    CHECK(j.at("contains") == true);
    CHECK(j.at("exact") == true);
    CHECK(j.at("norm") == "euclidean");
    CHECK_FALSE(j.at("witness").is_null());
}

TEST_CASE("solver records round trip, including bounded ones") {
    RkRecord rec = solve_exact(3, 1, 9);
    Json j = to_json(rec);
    RkRecord back = record_from_json(j);
    CHECK(back.k == 3);
    CHECK(back.N == 9);
    CHECK(back.status == RkRecord::Status::exact);
    CHECK(back.value == rec.value);
    CHECK(back.witness == rec.witness);

    RkRecord bounded;
    bounded.k = 4;
    bounded.m = 1;
    bounded.d = 1;
    bounded.N = 40;
    bounded.status = RkRecord::Status::bounded;
    bounded.lower = 10;
    bounded.upper = 20;
    RkRecord b2 = record_from_json(to_json(bounded));
    CHECK(b2.status == RkRecord::Status::bounded);
    CHECK(b2.lower == 10);
    CHECK(b2.upper == 20);
}

TEST_CASE("bound reports serialize with their corrections") {
    auto rep = r_upper_loglog(3, 1000000);
    Json j = to_json(rep);
    CHECK(j.at("name") == "r_upper_loglog");
    CHECK(j.at("correction").at("pow2_exponent") == "4096");
    CHECK(j.contains("log_value"));
}

TEST_CASE("file loading reports failures as parameter errors") {
    CHECK_THROWS_AS(load_json_file("/nonexistent/apfree.json"), ParameterError);
    auto p = temp_file("apfree_bad.json");
    std::ofstream(p) << "{not json";
    CHECK_THROWS_AS(load_json_file(p.string()), ParameterError);
    std::filesystem::remove(p);
}

TEST_CASE("csv writer echoes parameters in a comment") {
    std::ostringstream os;
    write_csv(os, "run k=3", {"N", "r"}, {{"1", "1"}, {"2", "2"}});
    CHECK(os.str() == "# run k=3\nN,r\n1,1\n2,2\n");
}

TEST_CASE("cache stores, reloads, and short-circuits") {
    auto path = temp_file("apfree_cache_roundtrip.json");
    {
        RkCache cache(path);
        auto rec = cache.solve(3, 1, 9);
        CHECK(rec.value == 5);
        cache.solve(3, 1, 5);
        cache.save();
    }
    REQUIRE(std::filesystem::exists(path));
    {
        RkCache cache(path);
        CHECK(cache.size() == 2);
        const RkRecord* hit = cache.find(3, 1, 9);
        REQUIRE(hit);
        CHECK(hit->value == 5);
        // warm hit: served from memory even under a zero-node budget
        SolveBudget none;
        none.node_limit = 1;
        CHECK(cache.solve(3, 1, 9, none).status == RkRecord::Status::exact);
    }
    std::filesystem::remove(path);
}

TEST_CASE("cache upgrades never lose information") {
    RkCache cache;  // in-memory
    RkRecord bounded;
    bounded.k = 3;
    bounded.m = 1;
    bounded.d = 1;
    bounded.N = 30;
    bounded.status = RkRecord::Status::bounded;
    bounded.lower = 9;
    bounded.upper = 30;
    cache.upgrade(bounded);
    RkRecord better = bounded;
    better.lower = 10;
    better.upper = 15;
    cache.upgrade(better);
    const RkRecord* cur = cache.find(3, 1, 30);
    REQUIRE(cur);
    CHECK(cur->lower == 10);
    CHECK(cur->upper == 15);
    // a weaker report cannot regress the stored interval
    cache.upgrade(bounded);
    cur = cache.find(3, 1, 30);
    CHECK(cur->lower == 10);
    CHECK(cur->upper == 15);
    // an exact value replaces the interval
    RkRecord exact = bounded;
    exact.status = RkRecord::Status::exact;
    exact.value = 11;
    exact.lower = exact.upper = 11;
    cache.upgrade(exact);
    CHECK(cache.find(3, 1, 30)->status == RkRecord::Status::exact);
    // conflicting exact values are a hard error
    RkRecord conflict = exact;
    conflict.value = 12;
    conflict.lower = conflict.upper = 12;
    CHECK_THROWS_AS(cache.upgrade(conflict), ConstructionError);
}

TEST_CASE("cache files are a bare JSON array of records") {
    auto path = temp_file("apfree_cache_format.json");
    {
        RkCache cache(path);
        cache.solve(3, 1, 4);
        cache.save();
    }
    Json j = load_json_file(path.string());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("schema") == 1);
    CHECK(j[0].at("k") == 3);
    CHECK(j[0].at("N") == 4);
    CHECK(j[0].at("value") == 3);
    std::filesystem::remove(path);
}

TEST_CASE("corrupt cache files are rejected") {
    auto path = temp_file("apfree_cache_corrupt.json");
    std::ofstream(path) << "{\"not\": \"an array\"}";
    CHECK_THROWS_AS(RkCache(path), ParameterError);
    std::filesystem::remove(path);
}
