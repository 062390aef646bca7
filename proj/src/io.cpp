#include "lhc/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace lhc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class SixBitReader {
 public:
  explicit SixBitReader(std::string_view data) : data_(data) {}

  int next_byte() {
    if (pos_ >= data_.size()) throw FormatError("truncated graph6/sparse6 data");
    int c = static_cast<unsigned char>(data_[pos_++]);
    if (c < 63 || c > 126) throw FormatError("invalid character in graph6/sparse6 data");
    return c - 63;
  }

  int read_size() {
    int first = next_byte();
    if (first < 63) return first;
    if (pos_ < data_.size() && data_[pos_] == '~') throw FormatError("vertex counts above 258047 are not supported");
    int n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next_byte();
    return n;
  }

  bool has_bits() const { return bit_left_ > 0 || pos_ < data_.size(); }
  size_t bits_remaining() const { return bit_left_ + 6 * (data_.size() - pos_); }

  int bit() {
    if (bit_left_ == 0) {
      cur_ = next_byte();
      bit_left_ = 6;
    }
    --bit_left_;
    return (cur_ >> bit_left_) & 1;
  }

  int bits(int k) {
    int x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bit();
    return x;
  }

 private:
  std::string_view data_;
  size_t pos_ = 0;
  int cur_ = 0;
  int bit_left_ = 0;
};

class SixBitWriter {
 public:
  void size(int n) {
    if (n < 63) {
      out_.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
      out_.push_back('~');
      for (int shift = 12; shift >= 0; shift -= 6) out_.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
      throw FormatError("vertex counts above 258047 are not supported");
    }
  }
  void bit(int b) {
    cur_ = (cur_ << 1) | (b & 1);
    if (++fill_ == 6) flush();
  }
  void bits(int x, int k) {
    for (int i = k - 1; i >= 0; --i) bit((x >> i) & 1);
  }
  int pending() const { return fill_; }
  void pad(int b) {
    while (fill_ != 0) bit(b);
  }
  std::string str() && { return std::move(out_); }
  void raw(char c) { out_.push_back(c); }

 private:
  void flush() {
    out_.push_back(static_cast<char>(cur_ + 63));
    cur_ = 0;
    fill_ = 0;
  }
  std::string out_;
  int cur_ = 0;
  int fill_ = 0;
};

int bits_for(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

}  // namespace

Multigraph read_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.starts_with(":")) throw FormatError("sparse6 data given where graph6 was expected");
  SixBitReader in(text);
  const int n = in.read_size();
  Multigraph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (in.bit()) g.add_edge(i, j);
    }
  }
  return g;
}

std::string write_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw FormatError("graph6 cannot encode parallel edges");
  const int n = g.num_vertices();
  std::vector<char> adj(static_cast<size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<size_t>(e.u) * n + e.v] = 1;
    adj[static_cast<size_t>(e.v) * n + e.u] = 1;
  }
  SixBitWriter out;
  out.size(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.bit(adj[static_cast<size_t>(i) * n + j]);
  }
  out.pad(0);
  return std::move(out).str();
}

Multigraph read_sparse6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>sparse6<<")) text.remove_prefix(11);
  if (!text.starts_with(":")) throw FormatError("sparse6 data must start with ':'");
  text.remove_prefix(1);
  SixBitReader in(text);
  const int n = in.read_size();
  const int k = bits_for(n);
  Multigraph g(n);
  int v = 0;
  while (in.bits_remaining() >= static_cast<size_t>(1 + k)) {
    const int b = in.bit();
    const int x = in.bits(k);
    if (b == 1) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw FormatError("sparse6 data contains a loop at vertex " + std::to_string(v));
      g.add_edge(x, v);
    }
  }
  return g;
}

std::string write_sparse6(const Multigraph& g) {
  const int n = g.num_vertices();
  const int k = bits_for(n);
  std::vector<std::pair<int, int>> es;  // (larger, smaller)
  for (const Edge& e : g.edges()) es.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(es.begin(), es.end());
  SixBitWriter out;
  out.raw(':');
  out.size(n);
  int v = 0;
  for (auto [y, x] : es) {
    if (y == v) {
      out.bit(0);
      out.bits(x, k);
    } else if (y == v + 1) {
      out.bit(1);
      out.bits(x, k);
      v = y;
    } else {
      out.bit(1);
      out.bits(y, k);
      out.bit(0);
      out.bits(x, k);
      v = y;
    }
  }
  const int padding = out.pending() == 0 ? 0 : 6 - out.pending();
  if (k < 6 && n == (1 << k) && padding >= k + 1 && v == n - 2) out.bit(0);
  out.pad(1);
  return std::move(out).str();
}

Multigraph read_edgelist(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      std::istringstream header{std::string(s.substr(1))};
      std::string word;
      int count = 0;
      if (header >> word && word == "vertices" && header >> count) {
        if (count < 0) throw FormatError("negative vertex count on line " + std::to_string(line_no));
        declared = count;
      }
      continue;
    }
    std::istringstream fields{std::string(s)};
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra && extra.front() != '#')) {
      throw FormatError("malformed edge on line " + std::to_string(line_no) + ": '" + std::string(s) + "'");
    }
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) throw FormatError("vertex id out of range on line " + std::to_string(line_no));
    if (u == v) throw FormatError("loop on line " + std::to_string(line_no));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
  }
  int n = max_id + 1;
  if (declared >= 0) {
    if (declared < n) throw FormatError("edge uses a vertex beyond the declared count");
    n = declared;
  }
  return Multigraph::from_edges(n, edges);
}

Multigraph read_edgelist_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edgelist(in);
}

void write_edgelist(std::ostream& out, const Multigraph& g) {
  out << "# vertices " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string write_edgelist_string(const Multigraph& g) {
  std::ostringstream out;
  write_edgelist(out, g);
  return out.str();
}

Multigraph read_graph(std::string_view text, std::string_view format) {
  if (format == "graph6") {
    std::string_view t = trim(text);
    if (t.starts_with(":") || t.starts_with(">>sparse6<<")) return read_sparse6(t);
    return read_graph6(t);
  }
  if (format == "sparse6") return read_sparse6(text);
  if (format == "edgelist") return read_edgelist_string(text);
  throw FormatError("unknown format '" + std::string(format) + "'");
}

}  // namespace lhc
