#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "ltc/catalog.hpp"
#include "ltc/io.hpp"

using namespace ltc;
using testing::vec;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::TheoremViolation;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "ltc_catalog_io_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::filesystem::path write(const std::string& name, const std::string& text) {
    auto p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("catalog names") {
    CHECK(catalog_entry("upper_triangular(3)").algebra.dim() == 6);
    CHECK(catalog_entry("upper_triangular(3,2)").gma->block_dims() == std::array<std::size_t, 4>{3, 2, 0, 1});
    CHECK(catalog_entry("full_matrix(3, 2)").gma->block_dims() == std::array<std::size_t, 4>{4, 2, 2, 1});
    CHECK(catalog_entry("full_matrix(1)").algebra.dim() == 1);
    CHECK_FALSE(catalog_entry("upper_triangular(1)").gma);
    CHECK(catalog_entry("dual_tri").algebra.dim() == 6);
    CHECK(catalog_entry("dual_over_q").algebra.dim() == 5);
    CatalogEntry q = catalog_entry("q_plus_t2");
    CHECK(q.algebra.dim() == 4);
    CHECK_FALSE(q.gma);
    CatalogEntry ex = catalog_entry("example_1_2");
    CHECK(ex.algebra.dim() == 12);
    CHECK(ex.probe == example_1_2().a0);
    CHECK_FALSE(find_unit(ex.algebra));
}

TEST_CASE("upper triangular labels and products") {
    StructureConstants t3 = upper_triangular(3).algebra();
    // A = {e11}, M = {e12, e13}, B = {e22, e23, e33}
    CHECK(t3.labels() == std::vector<std::string>{"e11", "e12", "e13", "e22", "e23", "e33"});
    CHECK(t3.multiply(t3.basis(1), t3.basis(4)) == t3.basis(2));  // e12 e23 = e13
    CHECK(is_zero(t3.multiply(t3.basis(4), t3.basis(1))));
    CHECK(upper_triangular(10).algebra().label(1) == "e(1,2)");
}

TEST_CASE("bad catalog names") {
    for (const char* bad : {"upper_triangular(0)", "upper_triangular(3,3)", "full_matrix(3,0)", "full_matrix(x)",
                            "dual_tri(2)", "nonsense", "m2()", "tri(a.json)", "/nonexistent/algebra.json", ""}) {
        std::string name = bad;
        CAPTURE(name);
        CHECK(kind_of([&] { catalog_entry(bad); }) == ErrorKind::InvalidDocument);
    }
}

TEST_CASE("builtin catalog is stable") {
    auto a = builtin_catalog(), b = builtin_catalog();
    REQUIRE(a.size() == b.size());
    CHECK(a.size() >= 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].algebra.content_hash() == b[i].algebra.content_hash());
    }
}

TEST_CASE("rationals as strings") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("-0/5") == Rational(0));
    for (const char* bad : {"", "1/0", "1.5", "1/-2", "a", " 1", "1//2", "--1"}) {
        std::string text = bad;
        CAPTURE(text);
        CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::InvalidDocument);
    }
    CHECK(rational_to_json(Rational(1, 2)) == Json("1/2"));
    CHECK(rational_to_json(Rational(5)) == Json("5"));
    CHECK(rational_from_json(Json(4), "x") == Rational(4));
    CHECK(kind_of([&] { rational_from_json(Json(0.5), "x"); }) == ErrorKind::InvalidDocument);
}

TEST_CASE("property: rational and vector round trips") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        Rational q(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
        q.canonicalize();
        CHECK(parse_rational(to_string(q)) == q);
        CHECK(rational_from_json(rational_to_json(q), "q") == q);
    }
    Vector v = {Rational(1, 3), Rational(-2), Rational(0)};
    CHECK(vector_from_json(vector_to_json(v), "v") == v);
}

TEST_CASE("structure constants documents") {
    for (const auto& entry : builtin_catalog()) {
        Json j = to_json(entry.algebra);
        CHECK(j["dim"] == entry.algebra.dim());
        StructureConstants back = structure_constants_from_json(Json::parse(j.dump()));
        CHECK(back == entry.algebra);
        CHECK(back.labels() == entry.algebra.labels());
        CHECK(back.content_hash() == entry.algebra.content_hash());
    }
}

TEST_CASE("invalid documents") {
    Json good = to_json(upper_triangular(2).algebra());
    auto broken = [&](auto edit) {
        Json j = good;
        edit(j);
        return kind_of([&] { structure_constants_from_json(j); });
    };
    CHECK(broken([](Json& j) { j.erase("table"); }) == ErrorKind::InvalidDocument);
    CHECK(broken([](Json& j) { j["dim"] = 2; }) == ErrorKind::InvalidDocument);
    CHECK(broken([](Json& j) { j["table"][0][0][0] = "x"; }) == ErrorKind::InvalidDocument);
    CHECK(broken([](Json& j) { j["labels"] = Json::array({"a"}); }) == ErrorKind::InvalidDocument);
    // a well-formed but non-associative table
    CHECK(broken([](Json& j) { j["table"][1][1][1] = "1"; }) == ErrorKind::NotAssociative);

    CHECK(kind_of([&] { read_json_file(write("broken.json", "{ not json")); }) == ErrorKind::InvalidDocument);
    CHECK(kind_of([&] { read_json_file(scratch("missing.json")); }) == ErrorKind::InvalidDocument);
    CHECK(kind_of([&] { catalog_entry(write("other.json", "{\"x\": 1}").string()); }) == ErrorKind::InvalidDocument);
}

TEST_CASE("Morita context documents") {
    std::mt19937_64 rng(72);
    for (int i = 0; i < 10; ++i) {
        Gma g = random_morita_context(rng);
        MoritaContext ctx = g.to_context();
        MoritaContext back = morita_context_from_json(Json::parse(to_json(ctx).dump()));
        CHECK(assemble(back).algebra() == g.algebra());
    }
    Json j = to_json(full_matrix(2).to_context());
    j["M"]["dim"] = 2;
    CHECK(kind_of([&] { morita_context_from_json(j); }) == ErrorKind::InvalidDocument);
}

TEST_CASE("documents through the catalog") {
    auto alg_path = write("dual.json", to_json(dual_numbers()).dump());
    CatalogEntry a = catalog_entry(alg_path.string());
    CHECK(a.algebra == dual_numbers());
    CHECK_FALSE(a.gma);

    CatalogEntry m = catalog_entry("m2(" + alg_path.string() + ")");
    REQUIRE(m.gma);
    CHECK(m.algebra == m2_of(dual_numbers()).algebra());

    auto ctx_path = write("ctx.json", to_json(full_matrix(3, 2).to_context()).dump());
    CatalogEntry c = catalog_entry(ctx_path.string());
    REQUIRE(c.gma);
    CHECK(c.algebra == full_matrix(3, 2).algebra());

    auto mod_path = write("mod.json", to_json(regular_bimodule(dual_numbers())).dump());
    CatalogEntry t = catalog_entry("tri(" + alg_path.string() + "," + mod_path.string() + "," + alg_path.string() + ")");
    CHECK(t.algebra == catalog_entry("dual_tri").algebra);
}

TEST_CASE("operator documents") {
    StructureConstants t2 = upper_triangular(2).algebra();
    LinearOperator op(3, 3);
    op(0, 0) = Rational(1, 2);
    op(1, 1) = -3;
    op(0, 2) = 1;
    Json j = operator_to_json(t2, op);
    CHECK(j["algebra_hash"] == t2.content_hash());
    // list of columns: column 2 is the image of e22
    CHECK(j["matrix"][2] == Json::array({"1", "0", "0"}));
    CHECK(operator_from_json(t2, Json::parse(j.dump())) == op);

    CHECK(kind_of([&] { operator_from_json(full_matrix(2).algebra(), j); }) == ErrorKind::HashMismatch);
    Json short_j = j;
    short_j["matrix"].erase(0);
    CHECK(kind_of([&] { operator_from_json(t2, short_j); }) == ErrorKind::InvalidDocument);
}

TEST_CASE("random Morita contexts") {
    std::mt19937_64 rng(73);
    for (int i = 0; i < 25; ++i) {
        Gma g = random_morita_context(rng);
        CHECK(g.is_unital());
        for (Block b : {Block::A, Block::M, Block::N, Block::B}) CHECK(g.block_dim(b) <= 2);
        CHECK(g.block_dim(Block::M) + g.block_dim(Block::N) >= 1);
        CHECK(g.algebra().multiply(g.unit(), g.unit()) == g.unit());
    }
    std::mt19937_64 a(5), b(5);
    CHECK(random_morita_context(a).algebra() == random_morita_context(b).algebra());
}

TEST_CASE("basis changes") {
    StructureConstants m2 = full_matrix(2).algebra();
    CHECK(change_basis(m2, Matrix::identity(4)) == m2);
    Matrix p = Matrix::identity(4);
    p(0, 1) = 1;
    StructureConstants moved = change_basis(m2, p);
    Vector one = inverse(p) * *find_unit(m2);
    CHECK(find_unit(moved) == one);
    CHECK(kind_of([&] { change_basis(m2, Matrix::identity(3)); }) == ErrorKind::DimensionMismatch);
}
