#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "cohall/cache.hpp"

using namespace cohall;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("cohall-cache-" + std::to_string(::getpid()))) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("cache round trip") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    std::string key = ResultCache::key_of("stab|h+|quiver{...}|...");
    CHECK_FALSE(cache.get(key).has_value());
    cache.put(key, "s(1,1) - a(1,2) + h");
    auto hit = cache.get(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == "s(1,1) - a(1,2) + h");
    // Idempotent rewrite.
    cache.put(key, "s(1,1) - a(1,2) + h");
    CHECK(cache.get(key).has_value());
}

TEST_CASE("keys are content addressed") {
    std::string k1 = ResultCache::key_of("stab|h+|x");
    std::string k2 = ResultCache::key_of("stab|h-|x");
    CHECK(k1 != k2);
    CHECK(k1.size() == 32);
    CHECK(k1 == ResultCache::key_of("stab|h+|x"));
}

TEST_CASE("corrupted entries are treated as misses") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    std::string key = ResultCache::key_of("request");
    cache.put(key, "2*h");

    // Flip payload bytes behind the checksum's back.
    fs::path entry = tmp.path / (key + ".txt");
    {
        std::ofstream out(entry, std::ios::binary | std::ios::app);
        out << " corrupted";
    }
    CHECK_FALSE(cache.get(key).has_value());
}

TEST_CASE("no temporary files survive a put") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    cache.put(ResultCache::key_of("a"), "1");
    cache.put(ResultCache::key_of("b"), "2");
    for (const auto& e : fs::directory_iterator(tmp.path))
        CHECK(e.path().extension() == ".txt");
}
