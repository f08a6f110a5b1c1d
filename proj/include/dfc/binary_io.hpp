#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "dfc/error.hpp"

namespace dfc {

static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; big-endian hosts need byte swaps");

/// Little-endian binary writer over a std::ofstream.
class BinaryWriter {
public:
    explicit BinaryWriter(const std::filesystem::path& path)
        : path_(path.string()), out_(path, std::ios::binary) {
        if (!out_) throw DataError("cannot open for writing: " + path_);
    }

    void magic(const char (&m)[5]) { out_.write(m, 4); }
    void u8(std::uint8_t v) { raw(&v, 1); }
    void u32(std::uint32_t v) { raw(&v, sizeof v); }
    void u64(std::uint64_t v) { raw(&v, sizeof v); }
    void f32(float v) { raw(&v, sizeof v); }
    void f64(double v) { raw(&v, sizeof v); }

    template <typename T>
    void array(std::span<const T> values) {
        raw(values.data(), values.size() * sizeof(T));
    }

    void close() {
        out_.close();
        if (!out_) throw DataError("write failed: " + path_);
    }

private:
    void raw(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        if (!out_) throw DataError("write failed: " + path_);
    }

    std::string path_;
    std::ofstream out_;
};

class BinaryReader {
public:
    explicit BinaryReader(const std::filesystem::path& path)
        : path_(path.string()), in_(path, std::ios::binary) {
        if (!in_) throw DataError("cannot open: " + path_);
    }

    /// Reads 4 bytes and checks them against the expected magic.
    void expect_magic(const char (&m)[5]) {
        char got[4];
        raw(got, 4);
        if (std::string(got, 4) != std::string(m, 4))
            throw DataError(path_ + ": bad magic, expected " + m);
    }

    std::uint8_t u8() { std::uint8_t v; raw(&v, 1); return v; }
    std::uint32_t u32() { std::uint32_t v; raw(&v, sizeof v); return v; }
    std::uint64_t u64() { std::uint64_t v; raw(&v, sizeof v); return v; }
    float f32() { float v; raw(&v, sizeof v); return v; }
    double f64() { double v; raw(&v, sizeof v); return v; }

    template <typename T>
    void array(std::span<T> values) {
        raw(values.data(), values.size() * sizeof(T));
    }

private:
    void raw(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (in_.gcount() != static_cast<std::streamsize>(n))
            throw DataError(path_ + ": truncated file");
    }

    std::string path_;
    std::ifstream in_;
};

} // namespace dfc
