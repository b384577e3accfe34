#include "fim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fim {

void TransactionDB::rebuild_universe() {
  item_universe.clear();
  for (const auto& t : transactions)
    item_universe.insert(item_universe.end(), t.begin(), t.end());
  std::sort(item_universe.begin(), item_universe.end());
  item_universe.erase(std::unique(item_universe.begin(), item_universe.end()),
                      item_universe.end());
}

ItemOrder::ItemOrder(std::vector<Item> sequence, OrderDirection direction)
    : sequence_(std::move(sequence)), direction_(direction) {
  rank_.reserve(sequence_.size());
  for (std::uint32_t i = 0; i < sequence_.size(); ++i) rank_.emplace(sequence_[i], i);
}

std::optional<std::uint32_t> ItemOrder::rank_of(Item item) const {
  auto it = rank_.find(item);
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

ItemOrder ItemOrder::reversed() const {
  std::vector<Item> rev(sequence_.rbegin(), sequence_.rend());
  OrderDirection dir = direction_ == OrderDirection::AscendingFrequency
                           ? OrderDirection::DescendingFrequency
                           : OrderDirection::AscendingFrequency;
  return ItemOrder(std::move(rev), dir);
}

SupportThreshold SupportThreshold::absolute(std::uint64_t count) {
  if (count < 1) throw std::invalid_argument("absolute minSup must be >= 1");
  SupportThreshold t;
  t.absolute_ = count;
  return t;
}

SupportThreshold SupportThreshold::relative(double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw std::invalid_argument("relative minSup must lie in (0,1]");
  SupportThreshold t;
  t.relative_ = fraction;
  return t;
}

std::uint64_t SupportThreshold::resolve(std::uint64_t n) const {
  if (!relative_) return absolute_;
  if (n == 0) throw std::invalid_argument("relative minSup on empty database");
  auto count = static_cast<std::uint64_t>(std::ceil(*relative_ * static_cast<double>(n)));
  return std::max<std::uint64_t>(count, 1);
}

std::uint64_t resolve_minsup(const SupportThreshold& spec, std::uint64_t n) {
  return spec.resolve(n);
}

namespace {

Item parse_item_token(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '-') {
    std::ostringstream msg;
    msg << "line " << line_no << ": negative item id '" << token << "'";
    throw ParseError(msg.str());
  }
  Item value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    std::ostringstream msg;
    msg << "line " << line_no << ": invalid item token '" << token << "'";
    throw ParseError(msg.str());
  }
  return value;
}

}  // namespace

TransactionDB parse_fimi(std::istream& in) {
  TransactionDB db;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    Transaction tx;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
        ++pos;
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
        ++pos;
      if (pos > start)
        tx.push_back(parse_item_token({line.data() + start, pos - start}, line_no));
    }
    if (tx.empty()) continue;  // blank line
    std::sort(tx.begin(), tx.end());
    tx.erase(std::unique(tx.begin(), tx.end()), tx.end());
    db.transactions.push_back(std::move(tx));
  }
  db.rebuild_universe();
  return db;
}

TransactionDB parse_fimi(const std::string& text) {
  std::istringstream in(text);
  return parse_fimi(in);
}

TransactionDB load_fimi(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  return parse_fimi(in);
}

void write_fimi(const TransactionDB& db, std::ostream& out) {
  for (const auto& tx : db.transactions) {
    Transaction sorted = tx;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i) out << ' ';
      out << sorted[i];
    }
    out << '\n';
  }
}

std::string write_fimi(const TransactionDB& db) {
  std::ostringstream out;
  write_fimi(db, out);
  return out.str();
}

std::unordered_map<Item, std::uint64_t> item_frequencies(const TransactionDB& db) {
  std::unordered_map<Item, std::uint64_t> freq;
  for (const auto& tx : db.transactions)
    for (Item item : tx) ++freq[item];
  return freq;
}

ItemOrder compute_order(const TransactionDB& db, std::uint64_t min_sup,
                        OrderDirection direction) {
  auto freq = item_frequencies(db);
  std::vector<std::pair<Item, std::uint64_t>> kept;
  kept.reserve(freq.size());
  for (const auto& [item, count] : freq)
    if (count >= min_sup) kept.emplace_back(item, count);
  const bool ascending = direction == OrderDirection::AscendingFrequency;
  std::sort(kept.begin(), kept.end(), [ascending](const auto& a, const auto& b) {
    if (a.second != b.second) return ascending ? a.second < b.second : a.second > b.second;
    return a.first < b.first;  // ties by ascending item id in both directions
  });
  std::vector<Item> sequence;
  sequence.reserve(kept.size());
  for (const auto& [item, count] : kept) sequence.push_back(item);
  return ItemOrder(std::move(sequence), direction);
}

TransactionDB reorder_and_prune(const TransactionDB& db, const ItemOrder& order) {
  TransactionDB out;
  out.transactions.reserve(db.transactions.size());
  for (const auto& tx : db.transactions) {
    std::vector<std::pair<std::uint32_t, Item>> ranked;
    for (Item item : tx)
      if (auto rank = order.rank_of(item)) ranked.emplace_back(*rank, item);
    std::sort(ranked.begin(), ranked.end());
    Transaction rewritten;
    rewritten.reserve(ranked.size());
    for (const auto& [rank, item] : ranked) rewritten.push_back(item);
    out.transactions.push_back(std::move(rewritten));
  }
  out.rebuild_universe();
  return out;
}

namespace {

// Deterministic generator helpers. The engine sequence is pinned by the
// standard; the derived draws below avoid std::*_distribution, whose exact
// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double next_unit() {  // uniform in [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Knuth's product method; fine for the small means used here.
  std::uint64_t next_poisson(double mean) {
    double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= next_unit();
    } while (p > limit);
    return k - 1;
  }

 private:
  std::uint64_t state_;
};

}  // namespace

TransactionDB generate_synthetic(std::uint64_t n_trans, std::uint32_t n_items,
                                 double mean_len, std::uint64_t seed) {
  if (!(mean_len >= 0.0) || mean_len > static_cast<double>(n_items))
    throw std::invalid_argument("mean_len must lie in [0, n_items]");
  if (mean_len > 1e4) throw std::invalid_argument("mean_len too large");

  std::vector<double> weight(n_items);
  for (std::uint32_t i = 0; i < n_items; ++i)
    weight[i] = 1.0 / std::pow(static_cast<double>(i + 1), 0.8);

  Rng rng(seed);
  TransactionDB db;
  db.transactions.reserve(n_trans);
  std::vector<std::pair<double, Item>> keys(n_items);
  for (std::uint64_t t = 0; t < n_trans; ++t) {
    std::uint64_t len = 0;
    if (mean_len > 0.0)
      len = std::min<std::uint64_t>(std::max<std::uint64_t>(rng.next_poisson(mean_len), 1),
                                    n_items);
    Transaction tx;
    if (len > 0) {
      // Weighted sample without replacement: top `len` items by u^(1/w).
      for (std::uint32_t i = 0; i < n_items; ++i)
        keys[i] = {std::pow(rng.next_unit(), 1.0 / weight[i]), i};
      std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(len),
                        keys.end(), [](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first > b.first;
                          return a.second < b.second;
                        });
      tx.reserve(len);
      for (std::uint64_t i = 0; i < len; ++i) tx.push_back(keys[i].second);
      std::sort(tx.begin(), tx.end());
    }
    db.transactions.push_back(std::move(tx));
  }
  db.rebuild_universe();
  return db;
}

}  // namespace fim
