#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kings {

using VertexId = std::uint32_t;

/// Number of unordered vertex pairs on n vertices.
constexpr std::uint64_t pair_count(std::uint32_t n) {
  return n < 2 ? 0 : std::uint64_t(n) * (n - 1) / 2;
}

/// Lexicographic rank of the pair (i, j), i < j:
/// (0,1)=0, (0,2)=1, ..., (0,n-1)=n-2, (1,2)=n-1, ...
constexpr std::uint64_t pair_rank(std::uint32_t n, VertexId i, VertexId j) {
  return std::uint64_t(i) * (2ull * n - i - 1) / 2 + (j - i - 1);
}

/// Calls fn(v) for every set bit of a packed row, in ascending order.
template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t v = words[w]; v != 0; v &= v - 1) {
      fn(static_cast<VertexId>(w * 64 + static_cast<unsigned>(std::countr_zero(v))));
    }
  }
}

/// Set of vertices over a fixed universe [0, n), bitset-backed.
/// Bits at positions >= n are kept zero at all times.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static VertexSet full(std::uint32_t universe) {
    VertexSet s(universe);
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.clear_tail();
    return s;
  }

  std::uint32_t universe_size() const { return n_; }

  bool contains(VertexId v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void insert(VertexId v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w != 0) return false;
    return true;
  }

  bool is_full() const {
    if (n_ == 0) return true;
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
      if (w_[i] != ~std::uint64_t{0}) return false;
    return w_.back() == tail_mask();
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((w_[i] & ~o.w_[i]) != 0) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const = default;

  /// Members in ascending order.
  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each_bit(words(), [&](VertexId v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return w_; }
  std::span<std::uint64_t> words() { return w_; }

private:
  std::uint64_t tail_mask() const {
    unsigned used = n_ & 63;
    return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
  }
  void clear_tail() {
    if (!w_.empty()) w_.back() &= tail_mask();
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Enumeration coordinate for tournaments on n labeled vertices.
/// Bit k of `code` (LSB = pair 0) orients the pair of rank k:
/// 1 means low index -> high index, 0 the reverse.
struct InstanceIndex {
  std::uint32_t n = 0;
  std::uint64_t code = 0;
};

/// Largest n whose pair bits fit in the 64-bit enumeration code.
inline constexpr std::uint32_t kMaxIndexedVertices = 11;

/// Complete oriented graph on n labeled vertices.
/// Rows are packed bitsets; immutable once constructed.
class Tournament {
public:
  /// Validates a full orientation matrix (adj[i][j] == true iff edge i->j)
  /// and builds the tournament. Throws std::invalid_argument naming the
  /// offending vertex or pair on self-loops, double or missing orientations.
  static Tournament build(std::uint32_t n, const std::vector<std::vector<bool>>& adj);

  static Tournament from_index(const InstanceIndex& idx);
  static Tournament transitive(std::uint32_t n);
  /// Odd n only: vertex i beats i+1, ..., i+(n-1)/2 (mod n).
  static Tournament rotational(std::uint32_t n);
  /// Each pair oriented by the low bit of one std::mt19937_64 output,
  /// consumed in pair-rank order. Deterministic given seed.
  static Tournament uniform_random(std::uint32_t n, std::uint64_t seed);

  std::uint32_t n() const { return n_; }
  std::uint32_t words_per_row() const { return wpr_; }

  /// Unchecked orientation test; i, j must be in range.
  bool has_edge(VertexId i, VertexId j) const {
    return (bits_[std::size_t(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  std::span<const std::uint64_t> row(VertexId v) const {
    return {bits_.data() + std::size_t(v) * wpr_, wpr_};
  }

  std::uint32_t out_degree(VertexId v) const;
  std::uint32_t in_degree(VertexId v) const { return n_ - 1 - out_degree(v); }
  VertexSet out_neighbors(VertexId v) const;

  /// Tournament with every edge flipped. Involution.
  Tournament reversed() const;

  /// Induced sub-tournament on `keep`, re-indexed compactly, plus the map
  /// from new indices back to the original vertex ids (ascending).
  std::pair<Tournament, std::vector<VertexId>> restricted(const VertexSet& keep) const;

  /// Inverse of from_index; requires n <= kMaxIndexedVertices.
  InstanceIndex to_index() const;

  bool operator==(const Tournament& o) const = default;

private:
  explicit Tournament(std::uint32_t n);
  void set_edge(VertexId i, VertexId j) {
    bits_[std::size_t(i) * wpr_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }

  std::uint32_t n_ = 0;
  std::uint32_t wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Matrix text form: first line n, then n rows of '0'/'1' characters.
std::string serialize(const Tournament& t);

/// Compact form: first line n, then "hex:" + ceil(pairs/4) hex digits giving
/// the pair bits, most significant digit first, zero-padded.
std::string serialize_hex(const Tournament& t);

/// Reads one tournament (either text form) from the stream, consuming
/// exactly the lines that belong to it. Throws std::runtime_error on
/// malformed input.
Tournament parse_tournament(std::istream& in);
Tournament parse_tournament(std::string_view text);

}  // namespace kings
