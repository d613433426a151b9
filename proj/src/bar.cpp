#include "bitmetric/bar.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace bitmetric {

PrefixSet::PrefixSet(const PrefixSet& other) {
  for (const Prefix& m : other.members()) insert(m);
}

PrefixSet& PrefixSet::operator=(const PrefixSet& other) {
  if (this != &other) *this = PrefixSet(other);
  return *this;
}

void PrefixSet::insert(const Prefix& p) {
  Node* cur = &root_;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    auto& slot = cur->child[p.bit(i)];
    if (!slot) slot = std::make_unique<Node>();
    cur = slot.get();
  }
  if (!cur->member) {
    cur->member = true;
    ++count_;
    max_len_ = std::max(max_len_, p.length());
  }
}

bool PrefixSet::contains(const Prefix& p) const {
  const Node* cur = &root_;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    cur = cur->child[p.bit(i)].get();
    if (!cur) return false;
  }
  return cur->member;
}

bool PrefixSet::contains_prefix_of(const Prefix& p) const {
  const Node* cur = &root_;
  if (cur->member) return true;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    cur = cur->child[p.bit(i)].get();
    if (!cur) return false;
    if (cur->member) return true;
  }
  return false;
}

std::vector<Prefix> PrefixSet::members() const {
  std::vector<Prefix> out;
  out.reserve(count_);
  std::vector<std::pair<const Node*, std::string>> stack;
  stack.emplace_back(&root_, std::string{});
  while (!stack.empty()) {
    auto [node, bits] = std::move(stack.back());
    stack.pop_back();
    if (node->member) out.emplace_back(Prefix(bits));
    if (node->child[1]) stack.emplace_back(node->child[1].get(), bits + '1');
    if (node->child[0]) stack.emplace_back(node->child[0].get(), bits + '0');
  }
  return out;
}

bool operator==(const PrefixSet& a, const PrefixSet& b) {
  return a.members() == b.members();
}

// A node is "barred" iff every infinite path through it meets a marked node.
// For a finite trie: marked, or both children stored and barred (an absent
// child has no marks below, so it cannot be barred). Computed iteratively
// to keep deep user inputs off the call stack.
template <typename NodeT>
static std::unordered_map<const NodeT*, bool> compute_barred(const NodeT* root) {
  std::unordered_map<const NodeT*, bool> barred;
  std::vector<std::pair<const NodeT*, bool>> stack;  // (node, children_done)
  stack.emplace_back(root, false);
  while (!stack.empty()) {
    const NodeT* node = stack.back().first;
    const NodeT* c0 = node->child[0].get();
    const NodeT* c1 = node->child[1].get();
    if (node->member) {
      barred[node] = true;
      stack.pop_back();
      continue;
    }
    if (!stack.back().second) {
      stack.back().second = true;
      // c0/c1 were read above: emplace_back may reallocate the stack
      if (c0) stack.emplace_back(c0, false);
      if (c1) stack.emplace_back(c1, false);
    } else {
      barred[node] = c0 && c1 && barred[c0] && barred[c1];
      stack.pop_back();
    }
  }
  return barred;
}

bool is_bar(const PrefixSet& set) {
  const auto barred = compute_barred(&set.root_);
  return barred.at(&set.root_);
}

PrefixSet minimal_antichain(const PrefixSet& set) {
  PrefixSet out;
  std::vector<std::pair<const PrefixSet::Node*, std::string>> stack;
  stack.emplace_back(&set.root_, std::string{});
  while (!stack.empty()) {
    auto [node, bits] = std::move(stack.back());
    stack.pop_back();
    if (node->member) {
      out.insert(Prefix(bits));  // marked descendants are shadowed
      continue;
    }
    if (node->child[1]) stack.emplace_back(node->child[1].get(), bits + '1');
    if (node->child[0]) stack.emplace_back(node->child[0].get(), bits + '0');
  }
  return out;
}

std::optional<EscapeWitness> find_escape(const PrefixSet& set) {
  const auto barred = compute_barred(&set.root_);
  if (barred.at(&set.root_)) return std::nullopt;
  const std::size_t depth = set.max_length();
  std::string bits;
  bits.reserve(depth);
  // Leftmost descent through unbarred subtrees. Leaving the stored trie means
  // nothing below is marked, so the remaining bits pad with 0s.
  const PrefixSet::Node* cur = &set.root_;
  while (cur && bits.size() < depth) {
    const PrefixSet::Node* c0 = cur->child[0].get();
    if (!c0 || !barred.at(c0)) {
      bits.push_back('0');
      cur = c0;
    } else {
      const PrefixSet::Node* c1 = cur->child[1].get();
      assert(!c1 || !barred.at(c1));
      bits.push_back('1');
      cur = c1;
    }
  }
  bits.resize(depth, '0');
  return EscapeWitness{Epb(Prefix(bits), Prefix("0")), depth};
}

ExtractResult extract_finite_subbar(const PrefixOracle& oracle, std::size_t fuel) {
  PrefixSet collected;
  std::deque<Prefix> queue;
  queue.emplace_back();
  while (!queue.empty()) {
    const Prefix p = std::move(queue.front());
    queue.pop_front();
    if (oracle(p)) {
      collected.insert(p);
      continue;
    }
    if (p.length() >= fuel) return ExtractResult{std::nullopt, p};
    queue.push_back(p.extended(0));
    queue.push_back(p.extended(1));
  }
  return ExtractResult{std::move(collected), Prefix{}};
}

SubcoverResult subcover_cantor(const std::vector<Ball>& balls,
                               std::optional<std::size_t> fuel) {
  if (balls.empty()) throw std::invalid_argument("subcover_cantor: empty ball list");
  std::vector<Prefix> stems;
  stems.reserve(balls.size());
  PrefixSet stem_set;
  std::size_t max_stem = 0;
  for (const Ball& b : balls) {
    stems.push_back(ball_to_cylinder(b).stem);
    stem_set.insert(stems.back());
    max_stem = std::max(max_stem, stems.back().length());
  }
  // Beyond the longest stem no prefix newly gains a stem as initial segment,
  // so the default fuel is exact: exhaustion certifies non-coverage.
  const std::size_t depth = fuel.value_or(max_stem);

  SubcoverResult result;
  result.fuel_used = depth;
  auto extraction = extract_finite_subbar(
      [&stem_set](const Prefix& p) { return stem_set.contains_prefix_of(p); }, depth);
  if (extraction.fuel_exceeded()) {
    result.unresolved = extraction.unresolved;
    result.certified_noncover = depth >= max_stem;
    return result;
  }
  std::set<std::size_t> used;
  for (const Prefix& p : extraction.bar->members()) {
    for (std::size_t i = 0; i < stems.size(); ++i) {
      if (stems[i].is_prefix_of(p)) {
        used.insert(i);
        break;
      }
    }
  }
  result.indices = std::vector<std::size_t>(used.begin(), used.end());
  return result;
}

}  // namespace bitmetric
