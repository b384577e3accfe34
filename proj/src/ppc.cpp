#include "fim/ppc.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fim {

void PPCTree::insert(const Transaction& tx) {
  std::uint32_t current = kRoot;
  for (Item item : tx) {
    std::uint32_t child = 0;
    bool found = false;
    for (std::uint32_t c : nodes_[current].children) {
      if (nodes_[c].name == item) {
        child = c;
        found = true;
        break;
      }
    }
    if (!found) {
      child = static_cast<std::uint32_t>(nodes_.size());
      PPCNode node;
      node.name = item;
      nodes_.push_back(node);
      nodes_[current].children.push_back(child);
    }
    ++nodes_[child].frequency;
    current = child;
  }
}

void PPCTree::dump(std::ostream& out) const {
  struct Frame {
    std::uint32_t node;
    std::uint32_t depth;
  };
  std::vector<Frame> stack;
  const auto& root_children = nodes_[kRoot].children;
  for (auto it = root_children.rbegin(); it != root_children.rend(); ++it)
    stack.push_back({*it, 0});
  while (!stack.empty()) {
    Frame frame = stack.back();
    stack.pop_back();
    const PPCNode& n = nodes_[frame.node];
    for (std::uint32_t d = 0; d < frame.depth; ++d) out << "  ";
    out << n.name << " freq=" << n.frequency;
    if (n.pre != PPCNode::kUnranked) out << " pre=" << n.pre << " post=" << n.post;
    out << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      stack.push_back({*it, frame.depth + 1});
  }
}

std::string PPCTree::dump() const {
  std::ostringstream out;
  dump(out);
  return out.str();
}

void assign_pre_post(PPCTree& tree) {
  auto& nodes = tree.nodes();
  std::uint32_t pre_counter = 0;
  std::uint32_t post_counter = 0;
  // Iterative DFS; a node is ranked pre on first visit and post after its
  // subtree is done.
  struct Frame {
    std::uint32_t node;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  stack.push_back({PPCTree::kRoot, 0});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    PPCNode& n = nodes[frame.node];
    if (frame.next_child == 0 && frame.node != PPCTree::kRoot) n.pre = pre_counter++;
    if (frame.next_child < n.children.size()) {
      std::uint32_t child = n.children[frame.next_child++];
      stack.push_back({child, 0});
    } else {
      if (frame.node != PPCTree::kRoot) n.post = post_counter++;
      stack.pop_back();
    }
  }
}

std::map<Item, NList> extract_nlists(const PPCTree& tree, const ItemOrder& order) {
  std::map<Item, NList> nlists;
  for (Item item : order.sequence()) nlists[item];
  // Pre-order walk appends codes in ascending pre order per item.
  std::vector<std::uint32_t> stack;
  const auto& root_children = tree.root().children;
  for (auto it = root_children.rbegin(); it != root_children.rend(); ++it)
    stack.push_back(*it);
  while (!stack.empty()) {
    std::uint32_t index = stack.back();
    stack.pop_back();
    const PPCNode& n = tree.node(index);
    auto entry = nlists.find(n.name);
    if (entry != nlists.end())
      entry->second.push_back({n.pre, n.post, n.frequency});
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return nlists;
}

namespace {

// Adjacent duplicate (pre, post) codes are merged by summing frequencies.
// The walk emits codes in non-decreasing pre order, so one linear pass
// suffices and leaves pre strictly increasing.
void merge_adjacent(NList& codes) {
  if (codes.empty()) return;
  std::size_t write = 0;
  for (std::size_t read = 1; read < codes.size(); ++read) {
    if (codes[read].pre == codes[write].pre && codes[read].post == codes[write].post) {
      codes[write].freq += codes[read].freq;
    } else {
      codes[++write] = codes[read];
    }
  }
  codes.resize(write + 1);
}

}  // namespace

NLOutcome nl_intersect(const NList& u, const NList& v) {
  NLOutcome out;
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < v.size()) {
    ++out.comparisons;
    if (u[i].pre > v[j].pre) {
      if (u[i].post < v[j].post) {
        out.result.push_back({v[j].pre, v[j].post, u[i].freq});
        ++i;
      } else {
        ++j;
      }
    } else {
      ++i;
    }
  }
  merge_adjacent(out.result);
  return out;
}

NLOutcome nl_intersect_es(const NList& u, const NList& v, std::uint64_t rho_v,
                          std::uint64_t min_sup) {
  NLOutcome out;
  std::size_t i = 0, j = 0;
  std::uint64_t matched = 0;
  while (i < u.size() && j < v.size()) {
    ++out.comparisons;
    if (u[i].pre > v[j].pre) {
      if (u[i].post < v[j].post) {
        out.result.push_back({v[j].pre, v[j].post, u[i].freq});
        matched += u[i].freq;
        ++i;
      } else {
        out.skip += v[j].freq;
        // The candidate's support is at most the matched frequency plus the
        // frequency of the v codes not yet skipped. A skipped v code can
        // contribute nothing further: u posts ascend, so later u codes
        // cannot nest inside it. Note the matched term: a v code may match
        // before being skipped, so rho_v - skip alone would under-count.
        if (rho_v + matched < min_sup + out.skip) {
          out.result.clear();
          out.early_stopped = true;
          return out;
        }
        ++j;
      }
    } else {
      ++i;
    }
  }
  merge_adjacent(out.result);
  return out;
}

std::uint64_t nl_support(const NList& nl) {
  std::uint64_t total = 0;
  for (const PPCode& code : nl) total += code.freq;
  return total;
}

}  // namespace fim
