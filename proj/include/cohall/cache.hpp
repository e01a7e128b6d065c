#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cohall/errors.hpp"
#include "cohall/hash.hpp"

namespace cohall {

// Content-addressed result cache.  Entries are plain text files named by a
// stable hash of the canonical request; each carries a checksum of its
// payload.  Writes go through a temporary file and an atomic rename, so
// concurrent invocations are safe (identical keys write identical bytes).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    static std::string key_of(const std::string& canonical_request) {
        return stable_hash(canonical_request);
    }

    std::optional<std::string> get(const std::string& key) const {
        std::filesystem::path p = entry_path(key);
        std::ifstream in(p, std::ios::binary);
        if (!in) return std::nullopt;
        std::string header;
        std::getline(in, header);
        std::stringstream rest;
        rest << in.rdbuf();
        std::string payload = rest.str();
        if (header != "cohall-cache 1 " + hex64(fnv1a64(payload))) {
            std::cerr << "cohall: corrupted cache entry " << p.string() << ", recomputing\n";
            return std::nullopt;
        }
        return payload;
    }

    void put(const std::string& key, const std::string& payload) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::filesystem::path tmp =
            dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." +
                    std::to_string(counter_++));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw input_error("cache directory is not writable: " + dir_.string());
            out << "cohall-cache 1 " << hex64(fnv1a64(payload)) << "\n" << payload;
        }
        std::filesystem::rename(tmp, entry_path(key), ec);
        if (ec) {
            std::filesystem::remove(tmp);
            throw input_error("cache write failed: " + ec.message());
        }
    }

private:
    std::filesystem::path entry_path(const std::string& key) const { return dir_ / (key + ".txt"); }

    std::filesystem::path dir_;
    mutable unsigned long counter_ = 0;
};

} // namespace cohall
