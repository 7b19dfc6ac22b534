#include "kings/tournament.hpp"

#include <charconv>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kings {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::string pair_str(VertexId i, VertexId j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_positive(std::uint32_t n) {
  if (n == 0) bad("vertex count must be at least 1");
}

// Copies `in` with bit p deleted: bits above p shift down one position.
void remove_bit(std::span<const std::uint64_t> in, std::span<std::uint64_t> out, VertexId p) {
  const std::size_t wp = p >> 6;
  const unsigned pb = p & 63;
  std::uint64_t carry = 0;
  for (std::size_t w = in.size(); w-- > 0;) {
    std::uint64_t v = in[w];
    if (w > wp) {
      out[w] = (v >> 1) | (carry << 63);
      carry = v & 1;
    } else if (w == wp) {
      std::uint64_t lo = v & ((std::uint64_t{1} << pb) - 1);
      std::uint64_t hi = pb == 63 ? 0 : v >> (pb + 1);
      out[w] = lo | (hi << pb) | (carry << 63);
    } else {
      out[w] = v;
    }
  }
}

}  // namespace

Tournament::Tournament(std::uint32_t n)
    : n_(n), wpr_((n + 63) / 64), bits_(std::size_t(n) * wpr_, 0) {
  require_positive(n);
}

Tournament Tournament::build(std::uint32_t n, const std::vector<std::vector<bool>>& adj) {
  require_positive(n);
  const bool empty_singleton = n == 1 && adj.empty();
  if (!empty_singleton) {
    if (adj.size() != n) bad("matrix has " + std::to_string(adj.size()) + " rows, expected " + std::to_string(n));
    for (std::uint32_t i = 0; i < n; ++i)
      if (adj[i].size() != n)
        bad("matrix row " + std::to_string(i) + " has " + std::to_string(adj[i].size()) +
            " entries, expected " + std::to_string(n));
    for (std::uint32_t i = 0; i < n; ++i)
      if (adj[i][i]) bad("self-loop (" + std::to_string(i) + ")");
  }
  Tournament t(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (adj[i][j] && adj[j][i]) bad("double orientation " + pair_str(i, j));
      if (!adj[i][j] && !adj[j][i]) bad("missing orientation " + pair_str(i, j));
      if (adj[i][j])
        t.set_edge(i, j);
      else
        t.set_edge(j, i);
    }
  }
  return t;
}

Tournament Tournament::from_index(const InstanceIndex& idx) {
  require_positive(idx.n);
  if (idx.n > kMaxIndexedVertices)
    bad("n=" + std::to_string(idx.n) + " exceeds the indexed-enumeration limit of " +
        std::to_string(kMaxIndexedVertices));
  const std::uint64_t bits = pair_count(idx.n);
  if (bits < 64 && idx.code >= (std::uint64_t{1} << bits))
    bad("code " + std::to_string(idx.code) + " out of range for n=" + std::to_string(idx.n));
  Tournament t(idx.n);
  std::uint64_t k = 0;
  for (VertexId i = 0; i < idx.n; ++i) {
    for (VertexId j = i + 1; j < idx.n; ++j, ++k) {
      if ((idx.code >> k) & 1u)
        t.set_edge(i, j);
      else
        t.set_edge(j, i);
    }
  }
  return t;
}

Tournament Tournament::transitive(std::uint32_t n) {
  Tournament t(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) t.set_edge(i, j);
  return t;
}

Tournament Tournament::rotational(std::uint32_t n) {
  require_positive(n);
  if (n % 2 == 0) bad("rotational model requires odd n, got " + std::to_string(n));
  Tournament t(n);
  for (VertexId i = 0; i < n; ++i)
    for (std::uint32_t d = 1; d <= (n - 1) / 2; ++d) t.set_edge(i, (i + d) % n);
  return t;
}

Tournament Tournament::uniform_random(std::uint32_t n, std::uint64_t seed) {
  Tournament t(n);
  std::mt19937_64 rng(seed);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (rng() & 1u)
        t.set_edge(i, j);
      else
        t.set_edge(j, i);
    }
  }
  return t;
}

std::uint32_t Tournament::out_degree(VertexId v) const {
  if (v >= n_) bad("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  std::uint32_t c = 0;
  for (auto w : row(v)) c += static_cast<std::uint32_t>(std::popcount(w));
  return c;
}

VertexSet Tournament::out_neighbors(VertexId v) const {
  if (v >= n_) bad("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  VertexSet s(n_);
  auto r = row(v);
  auto w = s.words();
  for (std::size_t k = 0; k < r.size(); ++k) w[k] = r[k];
  return s;
}

Tournament Tournament::reversed() const {
  Tournament t(n_);
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = i + 1; j < n_; ++j) {
      if (has_edge(i, j))
        t.set_edge(j, i);
      else
        t.set_edge(i, j);
    }
  return t;
}

std::pair<Tournament, std::vector<VertexId>> Tournament::restricted(const VertexSet& keep) const {
  if (keep.universe_size() != n_)
    bad("keep set universe " + std::to_string(keep.universe_size()) + " does not match n=" +
        std::to_string(n_));
  std::vector<VertexId> label = keep.to_vector();
  if (label.empty()) bad("empty keep set");
  const auto m = static_cast<std::uint32_t>(label.size());
  Tournament t(m);

  if (m == n_) {
    t.bits_ = bits_;
    return {std::move(t), std::move(label)};
  }

  // Single-vertex deletion is the finders' hot path; handle it word-parallel.
  if (m == n_ - 1) {
    VertexId p = 0;
    while (keep.contains(p)) ++p;
    for (std::uint32_t a = 0; a < m; ++a) {
      VertexId old = label[a];
      remove_bit(row(old), {t.bits_.data() + std::size_t(a) * t.wpr_, t.wpr_}, p);
      // drop bits past the shrunken universe
      unsigned used = t.n_ & 63;
      if (used != 0) t.bits_[std::size_t(a) * t.wpr_ + (t.wpr_ - 1)] &= (std::uint64_t{1} << used) - 1;
    }
    return {std::move(t), std::move(label)};
  }

  std::vector<std::uint32_t> inv(n_, 0);
  for (std::uint32_t a = 0; a < m; ++a) inv[label[a]] = a;
  for (std::uint32_t a = 0; a < m; ++a) {
    VertexSet r = out_neighbors(label[a]);
    r &= keep;
    for_each_bit(r.words(), [&](VertexId old) { t.set_edge(a, inv[old]); });
  }
  return {std::move(t), std::move(label)};
}

InstanceIndex Tournament::to_index() const {
  if (n_ > kMaxIndexedVertices)
    bad("n=" + std::to_string(n_) + " exceeds the indexed-enumeration limit of " +
        std::to_string(kMaxIndexedVertices));
  std::uint64_t code = 0;
  std::uint64_t k = 0;
  for (VertexId i = 0; i < n_; ++i)
    for (VertexId j = i + 1; j < n_; ++j, ++k)
      if (has_edge(i, j)) code |= std::uint64_t{1} << k;
  return {n_, code};
}

std::string serialize(const Tournament& t) {
  std::string out = std::to_string(t.n()) + "\n";
  for (VertexId i = 0; i < t.n(); ++i) {
    for (VertexId j = 0; j < t.n(); ++j) out += t.has_edge(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string serialize_hex(const Tournament& t) {
  const std::uint64_t bits = pair_count(t.n());
  const std::size_t digits = static_cast<std::size_t>((bits + 3) / 4);
  std::string payload(digits, '0');
  std::uint64_t k = 0;
  std::vector<unsigned> nibble(digits, 0);
  for (VertexId i = 0; i < t.n(); ++i)
    for (VertexId j = i + 1; j < t.n(); ++j, ++k)
      if (t.has_edge(i, j)) nibble[k / 4] |= 1u << (k % 4);
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned v = nibble[digits - 1 - d];
    payload[d] = static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
  }
  return std::to_string(t.n()) + "\nhex:" + payload + "\n";
}

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) parse_fail(std::string("unexpected end of input, expected ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Tournament parse_tournament(std::istream& in) {
  std::string header = next_line(in, "vertex count");
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
  if (ec != std::errc{} || ptr != header.data() + header.size() || n == 0)
    parse_fail("malformed header '" + header + "'");

  std::string first = next_line(in, "adjacency row or hex line");
  if (first.rfind("hex:", 0) == 0) {
    const std::string payload = first.substr(4);
    const std::uint64_t bits = pair_count(n);
    const std::size_t digits = static_cast<std::size_t>((bits + 3) / 4);
    if (payload.size() != digits)
      parse_fail("bad hex length: " + std::to_string(payload.size()) + " digits, expected " +
                 std::to_string(digits));
    std::vector<unsigned> nibble(digits, 0);
    for (std::size_t d = 0; d < digits; ++d) {
      int v = hex_value(payload[d]);
      if (v < 0) parse_fail(std::string("bad hex digit '") + payload[d] + "'");
      nibble[digits - 1 - d] = static_cast<unsigned>(v);
    }
    for (std::uint64_t k = bits; k < 4 * digits; ++k)
      if ((nibble[k / 4] >> (k % 4)) & 1u) parse_fail("hex payload sets bits past the pair count");
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::uint64_t k = 0;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j, ++k) {
        bool forward = (nibble[k / 4] >> (k % 4)) & 1u;
        adj[forward ? i : j][forward ? j : i] = true;
      }
    return Tournament::build(n, adj);
  }

  std::vector<std::vector<bool>> adj;
  adj.reserve(n);
  std::string line = first;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i > 0) line = next_line(in, "adjacency row");
    if (line.size() != n)
      parse_fail("adjacency row " + std::to_string(i) + " has " + std::to_string(line.size()) +
                 " characters, expected " + std::to_string(n));
    std::vector<bool> r(n, false);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (line[j] == '1')
        r[j] = true;
      else if (line[j] != '0')
        parse_fail("adjacency row " + std::to_string(i) + " has a character other than 0/1");
    }
    adj.push_back(std::move(r));
  }
  try {
    return Tournament::build(n, adj);
  } catch (const std::invalid_argument& e) {
    parse_fail(e.what());
  }
}

Tournament parse_tournament(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tournament(in);
}

}  // namespace kings
