#include "kings/reach.hpp"

#include <stdexcept>
#include <string>

namespace kings {

namespace {

void require_same_size(const Tournament& a, const Tournament& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("size mismatch (" + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + ")");
}

void require_vertex(const Tournament& t, VertexId v) {
  if (v >= t.n())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(t.n()));
}

[[noreturn]] void kingless_instance(const Tournament& t1, const Tournament& t2) {
  throw std::logic_error("internal error: instance has no two-round king\nT1:\n" + serialize(t1) +
                         "T2:\n" + serialize(t2));
}

// Smallest k with k in row1(i) and (k, j) an edge of t2, or none.
std::optional<VertexId> smallest_two_step(const Tournament& t1, const Tournament& t2,
                                          VertexId i, VertexId j) {
  std::optional<VertexId> hit;
  auto r = t1.row(i);
  for (std::size_t w = 0; w < r.size() && !hit; ++w) {
    for (std::uint64_t v = r[w]; v != 0; v &= v - 1) {
      auto k = static_cast<VertexId>(w * 64 + static_cast<unsigned>(std::countr_zero(v)));
      if (t2.has_edge(k, j)) {
        hit = k;
        break;
      }
    }
  }
  return hit;
}

// OR of {i}, row1(i), row2(i), and row2(k) for every k in row1(i).
void accumulate_reach_row(const Tournament& t1, const Tournament& t2, VertexId i,
                          std::span<std::uint64_t> acc) {
  auto r1 = t1.row(i);
  auto r2 = t2.row(i);
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] = r1[w] | r2[w];
  acc[i >> 6] |= std::uint64_t{1} << (i & 63);
  for_each_bit(r1, [&](VertexId k) {
    auto rk = t2.row(k);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= rk[w];
  });
}

void accumulate_rainbow_row(const Tournament& red, const Tournament& blue, VertexId i,
                            std::span<std::uint64_t> acc) {
  auto rr = red.row(i);
  auto rb = blue.row(i);
  for (std::size_t w = 0; w < acc.size(); ++w) acc[w] = rr[w] | rb[w];
  acc[i >> 6] |= std::uint64_t{1} << (i & 63);
  for_each_bit(rr, [&](VertexId k) {
    auto rk = blue.row(k);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= rk[w];
  });
  for_each_bit(rb, [&](VertexId k) {
    auto rk = red.row(k);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= rk[w];
  });
}

bool row_is_full(std::span<const std::uint64_t> acc, std::uint32_t n) {
  for (std::size_t w = 0; w + 1 < acc.size(); ++w)
    if (acc[w] != ~std::uint64_t{0}) return false;
  unsigned used = n & 63;
  std::uint64_t tail = used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
  return acc.back() == tail;
}

}  // namespace

std::optional<ReachWitness> reaches(const Tournament& t1, const Tournament& t2,
                                    VertexId i, VertexId j) {
  require_same_size(t1, t2);
  require_vertex(t1, i);
  require_vertex(t1, j);
  if (i == j) return ReachWitness{ReachWitness::Kind::Same, 0};
  if (t1.has_edge(i, j)) return ReachWitness{ReachWitness::Kind::Edge1, 0};
  if (t2.has_edge(i, j)) return ReachWitness{ReachWitness::Kind::Edge2, 0};
  if (auto k = smallest_two_step(t1, t2, i, j)) return ReachWitness{ReachWitness::Kind::TwoStep, *k};
  return std::nullopt;
}

bool blocked(const Tournament& t1, const Tournament& t2, VertexId i, VertexId j) {
  require_same_size(t1, t2);
  require_vertex(t1, i);
  require_vertex(t1, j);
  if (i == j) return false;
  if (!t1.has_edge(j, i) || !t2.has_edge(j, i)) return false;
  auto a = t1.row(i);  // round-1 out-neighborhood of i
  auto b = t2.row(j);  // round-2 out-neighborhood of j
  bool equal = true;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
    equal = equal && a[w] == b[w];
  }
  return !equal;
}

VertexSet reach_set(const Tournament& t1, const Tournament& t2, VertexId i) {
  require_same_size(t1, t2);
  require_vertex(t1, i);
  VertexSet out(t1.n());
  accumulate_reach_row(t1, t2, i, out.words());
  return out;
}

VertexSet forward_kings(const Tournament& t1, const Tournament& t2) {
  require_same_size(t1, t2);
  const std::uint32_t n = t1.n();
  VertexSet kings(n);
  std::vector<std::uint64_t> acc(t1.words_per_row());
  for (VertexId i = 0; i < n; ++i) {
    accumulate_reach_row(t1, t2, i, acc);
    if (row_is_full(acc, n)) kings.insert(i);
  }
  return kings;
}

VertexSet co_kings(const Tournament& t1, const Tournament& t2) {
  require_same_size(t1, t2);
  const std::uint32_t n = t1.n();
  VertexSet co = VertexSet::full(n);
  std::vector<std::uint64_t> acc(t1.words_per_row());
  auto words = co.words();
  for (VertexId i = 0; i < n; ++i) {
    accumulate_reach_row(t1, t2, i, acc);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] &= acc[w];
  }
  return co;
}

KingCertificate find_king_brute(const Tournament& t1, const Tournament& t2) {
  VertexSet kings = forward_kings(t1, t2);
  if (kings.empty()) kingless_instance(t1, t2);
  VertexId king = kings.to_vector().front();
  KingCertificate cert{king, std::vector<ReachWitness>(t1.n())};
  for (VertexId j = 0; j < t1.n(); ++j) {
    if (j == king) continue;
    auto w = reaches(t1, t2, king, j);
    if (!w) kingless_instance(t1, t2);  // contradicts the king set just computed
    cert.witnesses[j] = *w;
  }
  return cert;
}

bool check_reach_witness(const Tournament& t1, const Tournament& t2,
                         VertexId i, VertexId j, const ReachWitness& w) {
  if (i >= t1.n() || j >= t1.n()) return false;
  switch (w.kind) {
    case ReachWitness::Kind::Same:
      return i == j;
    case ReachWitness::Kind::Edge1:
      return t1.has_edge(i, j);
    case ReachWitness::Kind::Edge2:
      return t2.has_edge(i, j);
    case ReachWitness::Kind::TwoStep:
      return w.via < t1.n() && t1.has_edge(i, w.via) && t2.has_edge(w.via, j);
  }
  return false;
}

bool validate_king_certificate(const Tournament& t1, const Tournament& t2,
                               const KingCertificate& cert) {
  if (t1.n() != t2.n()) return false;
  if (cert.king >= t1.n() || cert.witnesses.size() != t1.n()) return false;
  for (VertexId j = 0; j < t1.n(); ++j) {
    if (j == cert.king) continue;
    if (!check_reach_witness(t1, t2, cert.king, j, cert.witnesses[j])) return false;
  }
  return true;
}

bool validate_co_king_certificate(const Tournament& t1, const Tournament& t2,
                                  const KingCertificate& cert) {
  if (t1.n() != t2.n()) return false;
  if (cert.king >= t1.n() || cert.witnesses.size() != t1.n()) return false;
  for (VertexId i = 0; i < t1.n(); ++i) {
    if (i == cert.king) continue;
    if (!check_reach_witness(t1, t2, i, cert.king, cert.witnesses[i])) return false;
  }
  return true;
}

std::optional<RainbowWitness> rainbow_reaches(const Tournament& red, const Tournament& blue,
                                              VertexId i, VertexId j) {
  require_same_size(red, blue);
  require_vertex(red, i);
  require_vertex(red, j);
  if (i == j) return RainbowWitness{RainbowWitness::Kind::Same, 0};
  if (red.has_edge(i, j)) return RainbowWitness{RainbowWitness::Kind::RedEdge, 0};
  if (blue.has_edge(i, j)) return RainbowWitness{RainbowWitness::Kind::BlueEdge, 0};
  if (auto k = smallest_two_step(red, blue, i, j))
    return RainbowWitness{RainbowWitness::Kind::RedBlue, *k};
  if (auto k = smallest_two_step(blue, red, i, j))
    return RainbowWitness{RainbowWitness::Kind::BlueRed, *k};
  return std::nullopt;
}

bool check_rainbow_witness(const Tournament& red, const Tournament& blue,
                           VertexId i, VertexId j, const RainbowWitness& w) {
  if (i >= red.n() || j >= red.n()) return false;
  switch (w.kind) {
    case RainbowWitness::Kind::Same:
      return i == j;
    case RainbowWitness::Kind::RedEdge:
      return red.has_edge(i, j);
    case RainbowWitness::Kind::BlueEdge:
      return blue.has_edge(i, j);
    case RainbowWitness::Kind::RedBlue:
      return w.via < red.n() && red.has_edge(i, w.via) && blue.has_edge(w.via, j);
    case RainbowWitness::Kind::BlueRed:
      return w.via < red.n() && blue.has_edge(i, w.via) && red.has_edge(w.via, j);
  }
  return false;
}

VertexSet rainbow_reach_set(const Tournament& red, const Tournament& blue, VertexId i) {
  require_same_size(red, blue);
  require_vertex(red, i);
  VertexSet out(red.n());
  accumulate_rainbow_row(red, blue, i, out.words());
  return out;
}

VertexSet rainbow_kings(const Tournament& red, const Tournament& blue) {
  require_same_size(red, blue);
  const std::uint32_t n = red.n();
  VertexSet kings(n);
  std::vector<std::uint64_t> acc(red.words_per_row());
  for (VertexId i = 0; i < n; ++i) {
    accumulate_rainbow_row(red, blue, i, acc);
    if (row_is_full(acc, n)) kings.insert(i);
  }
  return kings;
}

}  // namespace kings
