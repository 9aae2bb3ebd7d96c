// prime_cache.cpp
// On-disk prime list: magic "CPSMPRM1", u64 count, u64 primes, all little-endian.

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <system_error>

#include "sierpinski/errors.hpp"
#include "sierpinski/primes.hpp"

namespace sierpinski {

namespace {

void put_u64(std::ostream& out, u64 v) {
    std::array<char, 8> bytes{};
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes.data(), bytes.size());
}

bool get_u64(std::istream& in, u64& v) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
    v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
    return true;
}

}  // namespace

void write_prime_cache(const std::filesystem::path& file, std::span<const u64> primes) {
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write prime cache " + tmp.string());
        out.write(kPrimeCacheMagic, sizeof kPrimeCacheMagic);
        put_u64(out, primes.size());
        for (u64 p : primes) put_u64(out, p);
        if (!out) throw Error("short write on prime cache " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<std::vector<u64>> read_prime_cache(const std::filesystem::path& file) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(file, ec);
    if (ec || size < 16) return std::nullopt;

    std::ifstream in(file, std::ios::binary);
    char magic[8];
    if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + 8, kPrimeCacheMagic))
        return std::nullopt;
    u64 count = 0;
    if (!get_u64(in, count) || count < 2 || size != 16 + 8 * count) return std::nullopt;

    std::vector<u64> primes(count);
    for (auto& p : primes) {
        if (!get_u64(in, p)) return std::nullopt;
    }
    if (primes[0] != 2 || primes[1] != 3) return std::nullopt;
    for (std::size_t i = 1; i < primes.size(); ++i)
        if (primes[i] <= primes[i - 1]) return std::nullopt;
    // Spot-check the tail so a corrupted payload is regenerated rather than trusted.
    if (!is_prime(primes.back()) || !is_prime(primes[primes.size() / 2])) return std::nullopt;
    return primes;
}

PrimeTable load_or_build_table(const std::filesystem::path& dir, std::size_t min_count,
                               std::size_t hard_limit) {
    const auto file = dir / "primes.bin";
    if (auto cached = read_prime_cache(file); cached && cached->size() >= min_count)
        return PrimeTable::from_primes(std::move(*cached), hard_limit);

    PrimeTable table(hard_limit);
    table.reserve_count(min_count);
    std::filesystem::create_directories(dir);
    write_prime_cache(file, table.values());
    return table;
}

}  // namespace sierpinski
