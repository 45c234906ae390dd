#include "iml/core/io.hpp"

#include <sstream>

#include "iml/core/error.hpp"

namespace iml::io {

namespace {

void put_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

long get_size(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> long {
    if (i >= s.size()) fail(ErrorCode::kParse, "truncated size field");
    long c = static_cast<unsigned char>(s[i]) - 63;
    if (c < 0 || c > 63) fail(ErrorCode::kParse, "bad character in size field");
    return c;
  };
  if (pos >= s.size()) fail(ErrorCode::kParse, "empty input");
  if (s[pos] != 126) return byte(pos++);
  if (pos + 1 < s.size() && s[pos + 1] == 126) {
    long n = 0;
    for (std::size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | byte(i);
    pos += 8;
    return n;
  }
  long n = 0;
  for (std::size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | byte(i);
  pos += 4;
  return n;
}

class BitWriter {
 public:
  void push(bool b) {
    cur_ = static_cast<unsigned char>((cur_ << 1) | (b ? 1 : 0));
    if (++count_ == 6) flush();
  }
  std::string finish() {
    if (count_ > 0) {
      cur_ = static_cast<unsigned char>(cur_ << (6 - count_));
      flush();
    }
    return std::move(out_);
  }

 private:
  void flush() {
    out_.push_back(static_cast<char>(cur_ + 63));
    cur_ = 0;
    count_ = 0;
  }
  std::string out_;
  unsigned char cur_ = 0;
  int count_ = 0;
};

class BitReader {
 public:
  BitReader(std::string_view s, std::size_t pos) : s_(s), pos_(pos) {}
  bool next() {
    if (left_ == 0) {
      if (pos_ >= s_.size()) fail(ErrorCode::kParse, "truncated bit data");
      cur_ = static_cast<unsigned char>(s_[pos_++]) - 63;
      if (cur_ < 0 || cur_ > 63) fail(ErrorCode::kParse, "bad character in bit data");
      left_ = 6;
    }
    --left_;
    return (cur_ >> left_) & 1;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_;
  int cur_ = 0;
  int left_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\n')) s.remove_prefix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  put_size(out, g.order());
  BitWriter w;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) w.push(g.has_edge(i, j));
  return out + w.finish();
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  std::size_t pos = 0;
  long n = get_size(text, pos);
  Graph g(static_cast<int>(n));
  BitReader r(text, pos);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (r.next()) g.add_edge(i, j);
  if (n > 1 && r.pos() != text.size()) fail(ErrorCode::kParse, "trailing characters after graph6 data");
  return g;
}

std::string to_digraph6(const Digraph& d) {
  std::string out = "&";
  put_size(out, d.order());
  BitWriter w;
  for (int i = 0; i < d.order(); ++i)
    for (int j = 0; j < d.order(); ++j) w.push(d.has_arc(i, j));
  return out + w.finish();
}

Digraph from_digraph6(std::string_view text) {
  text = trim(text);
  if (text.rfind(">>digraph6<<", 0) == 0) text.remove_prefix(12);
  if (text.empty() || text[0] != '&') fail(ErrorCode::kParse, "digraph6 must start with '&'");
  std::size_t pos = 1;
  long n = get_size(text, pos);
  Digraph d(static_cast<int>(n));
  BitReader r(text, pos);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.next()) {
        if (i == j) fail(ErrorCode::kParse, "self-loop in digraph6");
        d.add_arc(i, j);
      }
  if (n > 0 && r.pos() != text.size()) fail(ErrorCode::kParse, "trailing characters after digraph6 data");
  return d;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long n = 0, m = 0;
  if (!(is >> n >> m) || n < 0 || m < 0) fail(ErrorCode::kParse, "expected 'n m' header");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(is >> u >> v)) fail(ErrorCode::kParse, "expected " + std::to_string(m) + " edge lines");
    if (g.has_edge(u, v)) fail(ErrorCode::kParse, "repeated edge");
    g.add_edge(u, v);
  }
  return g;
}

std::string to_arc_list(const Digraph& d) {
  std::ostringstream os;
  os << d.order() << '\n';
  for (auto [u, v] : d.arcs()) os << u << " -> " << v << '\n';
  return os.str();
}

Digraph from_arc_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  int n = 0;
  if (!(is >> n)) fail(ErrorCode::kParse, "expected vertex count");
  Digraph d(n);
  int u = 0, v = 0;
  std::string arrow;
  while (is >> u) {
    if (!(is >> arrow >> v) || arrow != "->") fail(ErrorCode::kParse, "expected 'u -> v'");
    d.add_arc(u, v);
  }
  if (!is.eof()) fail(ErrorCode::kParse, "unexpected token in arc list");
  return d;
}

nlohmann::json mask_to_json(Mask m) {
  auto arr = nlohmann::json::array();
  for_each_bit(m, [&](int v) { arr.push_back(v); });
  return arr;
}

Mask mask_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::kParse, "expected integer array");
  Mask m = 0;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= 64)
      fail(ErrorCode::kParse, "element out of range");
    if (test(m, x.get<int>())) fail(ErrorCode::kParse, "repeated element");
    m |= bit(x.get<int>());
  }
  return m;
}

nlohmann::json to_json(const Hypergraph& h) {
  auto edges = nlohmann::json::array();
  for (Mask e : h.edges()) edges.push_back(mask_to_json(e));
  return {{"n", h.order()}, {"k", h.uniformity()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Mask> edges;
    for (const auto& e : j.at("edges")) edges.push_back(mask_from_json(e));
    return Hypergraph(j.at("n").get<int>(), std::move(edges), j.value("k", 0));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

nlohmann::json to_json(const SetFamily& f) {
  auto sets = nlohmann::json::array();
  for (Mask s : f.sets()) sets.push_back(mask_to_json(s));
  return {{"n", f.ground_size()}, {"sets", sets}};
}

SetFamily set_family_from_json(const nlohmann::json& j) {
  try {
    std::vector<Mask> sets;
    for (const auto& s : j.at("sets")) sets.push_back(mask_from_json(s));
    return SetFamily(j.at("n").get<int>(), std::move(sets));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, e.what());
  }
}

std::string binary_string(Mask m, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (test(m, i)) s[i] = '1';
  return s;
}

}  // namespace iml::io
