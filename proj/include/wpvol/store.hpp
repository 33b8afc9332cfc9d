#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "wpvol/coeff_table.hpp"

namespace wpvol {

struct cache_error : std::runtime_error {
  cache_error(std::string msg, size_t line_no = 0)
      : std::runtime_error(line_no ? std::move(msg) + " (line " +
                                         std::to_string(line_no) + ")"
                                   : std::move(msg)),
        line(line_no) {}
  size_t line;
};

/// Writes the canonical text format: header "WPVOL-CACHE 1 convention=...",
/// one line `g n | a1 .. an | d1:p1/q1[,..]` per entry sorted by
/// (|chi|, g, n, alpha), and a trailing "#sha256 <hex>" over all preceding
/// bytes. The write is atomic (temp file + rename).
void save_cache(const CoeffTable& table, const std::filesystem::path& dest);

/// Parses and re-verifies everything: checksum, version, convention,
/// signature validity, degree bounds, homogeneity and positivity of every
/// value. save(load(f)) is byte-identical to f for any f produced by save.
CoeffTable load_cache(const std::filesystem::path& src,
                      std::optional<Convention> expected = std::nullopt);

/// In-memory serialization used by save_cache; exposed for determinism
/// tests.
std::string serialize_cache(const CoeffTable& table);

}  // namespace wpvol
