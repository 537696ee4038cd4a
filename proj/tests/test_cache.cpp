#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "haarwell/errors.hpp"
#include "haarwell/weingarten.hpp"

using namespace haarwell;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() / "haarwell-cache-test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cache filenames are filesystem-safe and mode-tagged") {
  CHECK(table_cache_filename(GroupKind::Unitary, 3, TableMode::symbolic()) ==
        "unitary-k3-symbolic.wg");
  CHECK(table_cache_filename(GroupKind::FreeOrthogonal, 4, TableMode::at(BigRational(3))) ==
        "free-orthogonal-k4-n3.wg");
  CHECK(table_cache_filename(GroupKind::Unitary, 2, TableMode::at(BigRational(5, 2))) ==
        "unitary-k2-n5_2.wg");
}

TEST_CASE("symbolic tables survive a save-load round trip") {
  TempDir tmp;
  for (int k = 1; k <= 4; ++k) {
    const auto t = wg_unitary_gram(k, TableMode::symbolic());
    const auto p = tmp.path(table_cache_filename(t.group(), k, t.mode()));
    save_table(t, p);
    const auto back = load_table(p);
    CHECK(back.group() == t.group());
    CHECK(back.degree() == k);
    CHECK(back.mode() == t.mode());
    CHECK(back.class_values() == t.class_values());
  }
  const auto o = wg_orthogonal(6, TableMode::symbolic());
  const auto po = tmp.path("o6.wg");
  save_table(o, po);
  CHECK(load_table(po).class_values() == o.class_values());

  const auto f = wg_free(6, TableMode::symbolic());
  const auto pf = tmp.path("f6.wg");
  save_table(f, pf);
  const auto fb = load_table(pf);
  CHECK(fb.pairing_basis() == f.pairing_basis());
  CHECK(fb.pairing_values() == f.pairing_values());
}

TEST_CASE("numeric tables round trip, including pseudo-inverse points") {
  TempDir tmp;
  // regular point
  const auto t = wg_unitary_gram(3, TableMode::at(BigRational(9)));
  const auto p = tmp.path("u3n9.wg");
  save_table(t, p);
  CHECK(load_table(p).class_values() == t.class_values());

  // singular point: the load-time check must use the weaker G W G = G form
  const auto ps = wg_unitary_gram(3, TableMode::at(BigRational(2)));
  const auto pp = tmp.path("u3n2.wg");
  save_table(ps, pp);
  CHECK(load_table(pp).class_values() == ps.class_values());

  const auto fr = wg_free(4, TableMode::at(BigRational(5, 2)));
  const auto pr = tmp.path("f4.wg");
  save_table(fr, pr);
  CHECK(load_table(pr).pairing_values() == fr.pairing_values());
}

TEST_CASE("saving twice yields identical bytes") {
  TempDir tmp;
  const auto t = wg_unitary_gram(4, TableMode::symbolic());
  save_table(t, tmp.path("a.wg"));
  save_table(load_table(tmp.path("a.wg")), tmp.path("b.wg"));
  CHECK(slurp(tmp.path("a.wg")) == slurp(tmp.path("b.wg")));
}

TEST_CASE("tampered tables are rejected") {
  TempDir tmp;
  const auto t = wg_unitary_gram(3, TableMode::symbolic());
  const auto p = tmp.path("t.wg");
  save_table(t, p);
  const std::string good = slurp(p);

  SUBCASE("flipped value") {
    std::string bad = good;
    const auto pos = bad.find("2*n^0");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 5, "3*n^0");
    spit(p, bad);
    CHECK_THROWS_AS(load_table(p), CacheError);
  }
  SUBCASE("truncated file") {
    spit(p, good.substr(0, good.size() / 2));
    CHECK_THROWS_AS(load_table(p), CacheError);
  }
  SUBCASE("wrong magic") {
    spit(p, "haarwell-table 9\n" + good.substr(good.find('\n') + 1));
    CHECK_THROWS_AS(load_table(p), CacheError);
  }
  SUBCASE("degree beyond the engine caps") {
    std::string bad = good;
    const auto pos = bad.find("k 3");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 3, "k 99");
    spit(p, bad);
    CHECK_THROWS_AS(load_table(p), CacheError);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_table(tmp.path("nope.wg")), CacheError); }
}
