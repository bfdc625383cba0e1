#pragma once

namespace stg {

// Explicit graph constructions refuse to materialize more vertices than this
// unless the caller raises the cap.
inline constexpr long long kDefaultVertexCap = 1'000'000;

// Exhaustive resolving-set search is exponential; refuse larger graphs unless
// the caller raises the cap.
inline constexpr int kDefaultDimSearchCap = 20;

} // namespace stg
