#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tourvote/core.hpp"

namespace tourvote {

struct OracleResult {
  std::size_t min_voters = 0;
  Profile witness;  ///< canonically least optimal profile (voters non-decreasing)
  std::vector<std::size_t> sizes_searched;  ///< odd sizes 1, 3, ..., min_voters
  std::uint64_t work = 0;  ///< margin-update steps spent
};

struct OracleOptions {
  std::size_t n_cap = 4;
  std::uint64_t budget = 100'000'000;  ///< margin-update steps
};

/// Above this the oracle refuses whatever cap the caller asks for.
inline constexpr std::size_t kOracleHardCap = 5;

/// Smallest voter count generating t, by iterative deepening over odd sizes.
/// Each size enumerates multisets of rankings as non-decreasing sequences of
/// lexicographic permutation indices and prunes a prefix as soon as some pair
/// can no longer reach a positive margin with the voters still to come.
/// Even sizes are never tried: a strong pattern generated by an even profile
/// has every margin >= 2, so dropping any voter still generates it.
OracleResult min_voters_exact(const Tournament& t, const OracleOptions& opts = {});

struct MaxVResult {
  std::size_t v = 0;
  Tournament worst;
};

/// max over all 2^C(n,2) labeled tournaments of min_voters_exact; the first
/// maximizer in enumeration order is returned. n must be in 1..4.
MaxVResult max_v_exact(std::size_t n, const OracleOptions& opts = {});

/// Labeled tournament number `code` on n vertices: bit p of `code` orients
/// the p-th pair (i < j, row-major) as i -> j when set.
Tournament tournament_from_code(std::size_t n, std::uint64_t code);

}  // namespace tourvote
