#include "fim/diffset.hpp"

#include <sstream>
#include <stdexcept>

namespace fim {

DiffOutcome difference(const std::vector<Tid>& u, const std::vector<Tid>& v) {
  DiffOutcome out;
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < v.size()) {
    ++out.comparisons;
    if (u[i] == v[j]) {
      ++i;
      ++j;
    } else if (u[i] < v[j]) {
      out.result.push_back(u[i]);
      ++i;
    } else {
      ++j;
    }
  }
  out.result.insert(out.result.end(), u.begin() + static_cast<std::ptrdiff_t>(i), u.end());
  i = u.size();
  out.end_i = i + 1;
  out.end_j = j + 1;
  return out;
}

DiffOutcome difference_es(const std::vector<Tid>& u, const std::vector<Tid>& v,
                          std::uint64_t parent_support, std::uint64_t min_sup) {
  DiffOutcome out;
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < v.size()) {
    ++out.comparisons;
    if (u[i] == v[j]) {
      ++i;
      ++j;
    } else if (u[i] < v[j]) {
      out.result.push_back(u[i]);
      ++i;
      if (parent_support < min_sup + out.result.size()) {
        out.early_stopped = true;
        out.end_i = i + 1;
        out.end_j = j + 1;
        return out;
      }
    } else {
      ++j;
    }
  }
  out.result.insert(out.result.end(), u.begin() + static_cast<std::ptrdiff_t>(i), u.end());
  out.end_i = u.size() + 1;
  out.end_j = j + 1;
  return out;
}

std::uint64_t support_from_diffset(std::uint64_t parent_support, std::uint64_t diff_size) {
  if (diff_size > parent_support) {
    std::ostringstream msg;
    msg << "diffset size " << diff_size << " exceeds parent support " << parent_support;
    throw std::logic_error(msg.str());
  }
  return parent_support - diff_size;
}

DiffList first_level_diffset(const TidList& tx, const TidList& ty) {
  DiffOutcome diff = difference(tx, ty);
  DiffList out;
  out.tids = std::move(diff.result);
  out.owner_support = support_from_diffset(tx.size(), out.tids.size());
  return out;
}

}  // namespace fim
