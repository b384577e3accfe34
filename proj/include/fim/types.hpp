#pragma once

#include <cstdint>
#include <vector>

namespace fim {

/// Item identifier. Ids carry no meaning beyond identity.
using Item = std::uint32_t;

/// Transaction identifier, 1-based position of the transaction in its database.
using Tid = std::uint32_t;

/// Itemset in canonical form: item ids sorted ascending, no duplicates.
using Itemset = std::vector<Item>;

}  // namespace fim
