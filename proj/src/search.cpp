#include "fim/search.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "fim/diffset.hpp"
#include "fim/ppc.hpp"
#include "fim/tidlist.hpp"

namespace fim {

std::string algo_name(Algo algo) {
  switch (algo) {
    case Algo::Eclat: return "eclat";
    case Algo::DEclat: return "declat";
    case Algo::PrePostPlus: return "prepost";
  }
  return "?";
}

std::string scheme_name(const Scheme& scheme) {
  std::string base;
  switch (scheme.algo) {
    case Algo::Eclat: base = "Eclat"; break;
    case Algo::DEclat: base = "dEclat"; break;
    case Algo::PrePostPlus: base = "PrePost+"; break;
  }
  if (scheme.early_stopping) base += scheme.algo == Algo::PrePostPlus ? "ES" : "-ES";
  return base;
}

namespace {

Itemset itemset_union(const Itemset& a, const Itemset& b) {
  Itemset out;
  out.reserve(a.size() + 1);
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Depth-first traversal shared by all schemes. A class holds the frequent
// extensions of one prefix, ordered by the ascending-frequency item order;
// member i is emitted, then paired with every later sibling j to propose a
// candidate, and the surviving children form the next class. This visit
// order reproduces the search-tree pre-order (b, bc, d, da, dac, ...).
template <typename Policy>
class Driver {
 public:
  Driver(std::uint64_t min_sup, bool es, Policy policy, MiningResult& out)
      : min_sup_(min_sup), es_(es), policy_(std::move(policy)), out_(out) {}

  void run(std::vector<typename Policy::Node>& level1) { traverse(level1); }

 private:
  void traverse(std::vector<typename Policy::Node>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      out_.frequent.emplace_back(members[i].itemset, members[i].support);
      ++out_.metrics.num_frequent;
      std::vector<typename Policy::Node> children;
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        out_.metrics.count_candidate();
        auto child = policy_.combine(members[i], members[j], es_, min_sup_, out_.metrics);
        if (child) {
          out_.metrics.count_expansion();
          children.push_back(std::move(*child));
        }
      }
      if (!children.empty()) traverse(children);
    }
  }

  std::uint64_t min_sup_;
  bool es_;
  Policy policy_;
  MiningResult& out_;
};

struct EclatPolicy {
  struct Node {
    Itemset itemset;
    std::uint64_t support;
    TidList tids;
  };

  std::optional<Node> combine(const Node& a, const Node& b, bool es, std::uint64_t min_sup,
                              RunMetrics& metrics) const {
    IntersectOutcome outcome =
        es ? intersect_es(a.tids, b.tids, min_sup) : intersect(a.tids, b.tids);
    metrics.add_comparisons(outcome.comparisons);
    if (outcome.result.size() < min_sup) return std::nullopt;
    return Node{itemset_union(a.itemset, b.itemset), outcome.result.size(),
                std::move(outcome.result)};
  }
};

struct DEclatPolicy {
  struct Node {
    Itemset itemset;
    std::uint64_t support;
    std::vector<Tid> tids;  // TID-list at level 1, diffset below
    bool tidlist;
  };

  // Level-1 members store TID-lists, so D(xy) = T(x) - T(y); deeper levels
  // store diffsets and D(Pxy) = D(Py) - D(Px). Either way the candidate's
  // support is the first member's support minus the result size.
  std::optional<Node> combine(const Node& a, const Node& b, bool es, std::uint64_t min_sup,
                              RunMetrics& metrics) const {
    const std::vector<Tid>& u = a.tidlist ? a.tids : b.tids;
    const std::vector<Tid>& v = a.tidlist ? b.tids : a.tids;
    DiffOutcome outcome =
        es ? difference_es(u, v, a.support, min_sup) : difference(u, v);
    metrics.add_comparisons(outcome.comparisons);
    if (outcome.early_stopped) return std::nullopt;
    std::uint64_t support = support_from_diffset(a.support, outcome.result.size());
    if (support < min_sup) return std::nullopt;
    return Node{itemset_union(a.itemset, b.itemset), support, std::move(outcome.result),
                false};
  }
};

struct PrePostPolicy {
  struct Node {
    Itemset itemset;
    std::uint64_t support;
    NList nlist;
  };

  // The first member's distinguishing item lies deeper in the PPC-tree (the
  // tree is built on the reverse of the search order), so its codes are the
  // descendant side of the ancestor rule.
  std::optional<Node> combine(const Node& a, const Node& b, bool es, std::uint64_t min_sup,
                              RunMetrics& metrics) const {
    NLOutcome outcome = es ? nl_intersect_es(a.nlist, b.nlist, b.support, min_sup)
                           : nl_intersect(a.nlist, b.nlist);
    metrics.add_comparisons(outcome.comparisons);
    std::uint64_t support = nl_support(outcome.result);
    if (support < min_sup) return std::nullopt;
    return Node{itemset_union(a.itemset, b.itemset), support, std::move(outcome.result)};
  }
};

void run_eclat(const TransactionDB& db, std::uint64_t min_sup, bool es, MiningResult& out) {
  auto lists = build_tidlists(db, min_sup);
  std::vector<EclatPolicy::Node> level1;
  level1.reserve(lists.size());
  for (auto& [item, tids] : lists)
    level1.push_back({Itemset{item}, tids.size(), std::move(tids)});
  Driver<EclatPolicy> driver(min_sup, es, EclatPolicy{}, out);
  driver.run(level1);
}

void run_declat(const TransactionDB& db, std::uint64_t min_sup, bool es, MiningResult& out) {
  auto lists = build_tidlists(db, min_sup);
  std::vector<DEclatPolicy::Node> level1;
  level1.reserve(lists.size());
  for (auto& [item, tids] : lists)
    level1.push_back({Itemset{item}, tids.size(), std::move(tids), true});
  Driver<DEclatPolicy> driver(min_sup, es, DEclatPolicy{}, out);
  driver.run(level1);
}

void run_prepost(const TransactionDB& db, std::uint64_t min_sup, bool es, MiningResult& out) {
  ItemOrder search_order = compute_order(db, min_sup, OrderDirection::AscendingFrequency);
  // The tree must be ordered by the exact reverse of the search order:
  // every candidate then pairs N-lists at distinct code granularities, which
  // the ancestor rule requires.
  ItemOrder tree_order = search_order.reversed();
  TransactionDB reordered = reorder_and_prune(db, tree_order);
  PPCTree tree = build_ppc_tree(reordered);
  assign_pre_post(tree);
  std::map<Item, NList> nlists = extract_nlists(tree, tree_order);
  std::vector<PrePostPolicy::Node> level1;
  level1.reserve(search_order.size());
  for (Item item : search_order.sequence()) {
    NList& nl = nlists[item];
    level1.push_back({Itemset{item}, nl_support(nl), std::move(nl)});
  }
  Driver<PrePostPolicy> driver(min_sup, es, PrePostPolicy{}, out);
  driver.run(level1);
}

}  // namespace

MiningResult mine(const TransactionDB& db, std::uint64_t min_sup, Scheme scheme) {
  if (min_sup < 1) throw std::invalid_argument("minSup must be >= 1");
  MiningResult out;
  auto start = std::chrono::steady_clock::now();
  switch (scheme.algo) {
    case Algo::Eclat: run_eclat(db, min_sup, scheme.early_stopping, out); break;
    case Algo::DEclat: run_declat(db, min_sup, scheme.early_stopping, out); break;
    case Algo::PrePostPlus: run_prepost(db, min_sup, scheme.early_stopping, out); break;
  }
  out.metrics.runtime = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace fim
