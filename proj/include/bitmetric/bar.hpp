#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bitmetric/balls.hpp"
#include "bitmetric/bitstring.hpp"

namespace bitmetric {

/// Finite set of prefixes stored as a marked binary trie. The node set is
/// prefix-closed by construction; marked nodes are the members. Duplicates
/// are ignored and insertion order does not affect the structure.
class PrefixSet {
 public:
  PrefixSet() = default;
  PrefixSet(PrefixSet&&) = default;
  PrefixSet& operator=(PrefixSet&&) = default;
  PrefixSet(const PrefixSet& other);
  PrefixSet& operator=(const PrefixSet& other);

  void insert(const Prefix& p);
  bool contains(const Prefix& p) const;

  /// True iff some member is an initial segment of p (p itself included).
  bool contains_prefix_of(const Prefix& p) const;

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  /// Length of the longest member; 0 for the empty set.
  std::size_t max_length() const { return max_len_; }

  /// Members in trie preorder (a member precedes its extensions; 0-side
  /// subtree before 1-side).
  std::vector<Prefix> members() const;

  friend bool operator==(const PrefixSet& a, const PrefixSet& b);

 private:
  struct Node {
    std::array<std::unique_ptr<Node>, 2> child;
    bool member = false;
  };
  Node root_;
  std::size_t count_ = 0;
  std::size_t max_len_ = 0;

  friend bool is_bar(const PrefixSet&);
  friend PrefixSet minimal_antichain(const PrefixSet&);
  friend std::optional<struct EscapeWitness> find_escape(const PrefixSet&);
};

/// A certified escaping point: no prefix of `witness` of length <= checked_depth
/// is a member of the tested set.
struct EscapeWitness {
  Epb witness;
  std::size_t checked_depth = 0;
};

/// True iff every infinite bitstring has a marked initial segment.
/// The empty prefix bars everything; the empty set bars nothing.
bool is_bar(const PrefixSet& set);

/// The prefix-minimal members (those with no proper marked ancestor).
PrefixSet minimal_antichain(const PrefixSet& set);

/// An escaping point when the set is not a bar, found by leftmost (0-before-1)
/// descent through the pruned trie and padded with 0s to the max member
/// length; nullopt iff the set is a bar.
std::optional<EscapeWitness> find_escape(const PrefixSet& set);

using PrefixOracle = std::function<bool(const Prefix&)>;

struct ExtractResult {
  std::optional<PrefixSet> bar;  // engaged on success
  Prefix unresolved;             // first oracle-false prefix met at the fuel depth
  bool fuel_exceeded() const { return !bar.has_value(); }
};

/// Breadth-first search from the empty prefix, 0-child before 1-child. A
/// prefix satisfying the oracle is collected and not expanded; an unresolved
/// prefix at the fuel depth aborts the search. On success the collected set
/// is an antichain, every member satisfies the oracle, and the set is a bar.
/// Fuel exhaustion means "not certified within this depth" and does not
/// assert that the oracle's set is not a bar.
ExtractResult extract_finite_subbar(const PrefixOracle& oracle, std::size_t fuel);

struct SubcoverResult {
  std::optional<std::vector<std::size_t>> indices;  // engaged on success, sorted and deduplicated
  Prefix unresolved;                                // cylinder not certified covered
  std::size_t fuel_used = 0;
  // With fuel >= max stem length (the default) a failure is a definite
  // non-coverage certificate: `unresolved` is disjoint from every input ball.
  bool certified_noncover = false;
};

/// Reduces a ball cover of Cantor space to a finite subcover: takes the
/// cylinder stems, extracts a finite sub-bar, and maps each collected prefix
/// to the lowest input index whose stem is an initial segment of it.
SubcoverResult subcover_cantor(const std::vector<Ball>& balls,
                               std::optional<std::size_t> fuel = std::nullopt);

}  // namespace bitmetric
