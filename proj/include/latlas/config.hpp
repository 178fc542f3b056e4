#pragma once

#include <cstdint>

namespace latlas {

/// Tunable limits shared across the library.  The defaults are sized so that
/// every catalog group completes on a laptop; raising them trades time and
/// memory for reach.
struct Config {
  /// Largest group whose elements may be listed explicitly.
  std::uint64_t enumeration_cap = 1'000'000;

  /// Largest coset index for which a coset action is constructed.
  std::uint64_t coset_index_cap = 100'000;

  /// Largest group order accepted by the bottom-up subgroup enumeration.
  std::uint64_t oracle_cap = 20'000;

  /// Largest orders accepted by the isomorphism backtrack.
  std::uint64_t small_group_cap = 5'000;

  /// Below this order, subgroup-conjugacy falls back to a plain scan of the
  /// ambient group when asked to double-check a negative answer.
  std::uint64_t conjugacy_scan_cap = 2'000;

  /// Frontier expansions run concurrently when > 1.  Results are merged in a
  /// fixed order, so the output does not depend on this value.
  unsigned threads = 1;

  /// Reserved for randomized strategies; the default pipeline is
  /// deterministic and ignores it.
  std::uint64_t seed = 0;
};

}  // namespace latlas
