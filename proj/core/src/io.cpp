#include "ivdg/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "ivdg/error.hpp"

namespace ivdg::io {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long to_int(const Line& line, std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

Rational to_rational(const Line& line, std::string_view tok) {
  try {
    return parse_rational(tok);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                      std::to_string(line.tokens.size()));
  }
}

// Header line: keyword followed by `count` non-negative integers.
std::vector<long long> header(const std::vector<Line>& lines, std::string_view keyword,
                              std::size_t count) {
  if (lines.empty()) throw ParseError(1, "missing '" + std::string(keyword) + "' header");
  const Line& h = lines.front();
  if (h.tokens.front() != keyword) {
    throw ParseError(h.number, "expected '" + std::string(keyword) + "' header, got '" +
                                   std::string(h.tokens.front()) + "'");
  }
  expect_arity(h, count + 1);
  std::vector<long long> values;
  for (std::size_t i = 1; i <= count; ++i) {
    long long v = to_int(h, h.tokens[i]);
    if (v < 0 || v > 100'000'000) throw ParseError(h.number, "header value out of range");
    values.push_back(v);
  }
  return values;
}

Vertex vertex(const Line& line, std::string_view tok, long long n) {
  long long v = to_int(line, tok);
  if (v < 0 || v >= n) {
    throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

// Marks v as seen, rejecting repeats.
void once(std::vector<char>& seen, const Line& line, Vertex v, const char* what) {
  if (seen[static_cast<std::size_t>(v)]) {
    throw ParseError(line.number, std::string("duplicate ") + what + " " + std::to_string(v));
  }
  seen[static_cast<std::size_t>(v)] = 1;
}

void all_seen(const std::vector<char>& seen, std::size_t line, const char* what) {
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw ParseError(line, std::string("missing ") + what + " " + std::to_string(v));
  }
}

std::size_t last_line(const std::vector<Line>& lines) {
  return lines.empty() ? 1 : lines.back().number;
}

std::string interval_text(const Interval& i) { return to_string(i.lo) + " " + to_string(i.hi); }

}  // namespace

Digraph parse_digraph(std::string_view text) {
  auto lines = tokenize(text);
  long long n = header(lines, "digraph", 1)[0];
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_arity(lines[i], 2);
    arcs.push_back({vertex(lines[i], lines[i].tokens[0], n), vertex(lines[i], lines[i].tokens[1], n)});
  }
  return Digraph(static_cast<int>(n), arcs);
}

Interval interval(const Line& l, std::string_view lo, std::string_view hi) {
  Interval x{to_rational(l, lo), to_rational(l, hi)};
  if (x.lo > x.hi) throw ParseError(l.number, "interval [" + std::string(lo) + ", " + std::string(hi) + "] is reversed");
  return x;
}

IntervalRep parse_intervals(std::string_view text) {
  auto lines = tokenize(text);
  long long n = header(lines, "intervals", 1)[0];
  std::vector<IntervalPair> pairs(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_arity(l, 5);
    Vertex v = vertex(l, l.tokens[0], n);
    once(seen, l, v, "vertex");
    pairs[static_cast<std::size_t>(v)] = {interval(l, l.tokens[1], l.tokens[2]),
                                          interval(l, l.tokens[3], l.tokens[4])};
  }
  all_seen(seen, last_line(lines), "vertex");
  return IntervalRep(std::move(pairs));
}

IntervalBigraphRep parse_bigraph(std::string_view text) {
  auto lines = tokenize(text);
  auto sizes = header(lines, "bigraph", 2);
  std::vector<Interval> a(static_cast<std::size_t>(sizes[0])), b(static_cast<std::size_t>(sizes[1]));
  std::vector<char> seen_a(a.size(), 0), seen_b(b.size(), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_arity(l, 4);
    bool is_a = l.tokens[0] == "A";
    if (!is_a && l.tokens[0] != "B") throw ParseError(l.number, "expected 'A' or 'B'");
    Vertex v = vertex(l, l.tokens[1], is_a ? sizes[0] : sizes[1]);
    once(is_a ? seen_a : seen_b, l, v, is_a ? "A-vertex" : "B-vertex");
    (is_a ? a : b)[static_cast<std::size_t>(v)] = interval(l, l.tokens[2], l.tokens[3]);
  }
  all_seen(seen_a, last_line(lines), "A-vertex");
  all_seen(seen_b, last_line(lines), "B-vertex");
  return IntervalBigraphRep(std::move(a), std::move(b));
}

std::vector<Weight> parse_weights(std::string_view text) {
  auto lines = tokenize(text);
  long long n = header(lines, "weights", 1)[0];
  std::vector<Weight> w(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_arity(l, 2);
    Vertex v = vertex(l, l.tokens[0], n);
    once(seen, l, v, "vertex");
    w[static_cast<std::size_t>(v)] = to_int(l, l.tokens[1]);
    if (w[static_cast<std::size_t>(v)] < 0) throw ParseError(l.number, "negative weight");
  }
  all_seen(seen, last_line(lines), "vertex");
  return w;
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::unordered_set<Vertex> seen;
  for (const Line& l : tokenize(text)) {
    for (auto tok : l.tokens) {
      long long v = to_int(l, tok);
      if (v < 0 || v > std::numeric_limits<Vertex>::max()) throw ParseError(l.number, "bad vertex id");
      if (!seen.insert(static_cast<Vertex>(v)).second) {
        throw ParseError(l.number, "vertex " + std::to_string(v) + " listed twice");
      }
      out.push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

Ordering parse_ordering(std::string_view text) { return Ordering(parse_vertex_list(text)); }

SubdivisionMap parse_subdivision(std::string_view text) {
  auto lines = tokenize(text);
  auto h = header(lines, "subdivision", 3);
  const long long n = h[0], k = h[1], m = h[2];
  if (k < 1) throw ParseError(lines.front().number, "k must be at least 1");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(last_line(lines), "expected " + std::to_string(m) + " path lines");
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_arity(lines[i], static_cast<std::size_t>(k) + 2);
    arcs.push_back({vertex(lines[i], lines[i].tokens[0], n), vertex(lines[i], lines[i].tokens[1], n)});
  }
  SubdivisionMap map = k_subdivision(Digraph(static_cast<int>(n), arcs), static_cast<int>(k));
  if (map.arcs != arcs) throw ParseError(lines.front().number, "path lines must list distinct arcs in sorted order");
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    const Line& l = lines[e + 1];
    for (int t = 1; t <= k; ++t) {
      if (to_int(l, l.tokens[static_cast<std::size_t>(t) + 1]) != map.path_vertex(e, t)) {
        throw ParseError(l.number, "path vertex " + std::to_string(t) + " must be " +
                                       std::to_string(map.path_vertex(e, t)));
      }
    }
  }
  return map;
}

Instance parse_instance(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  auto kw = lines.front().tokens.front();
  if (kw == "digraph") return parse_digraph(text);
  if (kw == "intervals") return parse_intervals(text);
  if (kw == "bigraph") return parse_bigraph(text);
  throw ParseError(lines.front().number, "unknown instance kind '" + std::string(kw) + "'");
}

std::string emit(const Digraph& g) {
  std::ostringstream out;
  out << "digraph " << g.vertex_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

std::string emit(const IntervalRep& rep) {
  std::ostringstream out;
  out << "intervals " << rep.vertex_count() << '\n';
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    out << v << ' ' << interval_text(rep[v].source) << ' ' << interval_text(rep[v].target) << '\n';
  }
  return out.str();
}

std::string emit(const IntervalBigraphRep& rep) {
  std::ostringstream out;
  out << "bigraph " << rep.a_size() << ' ' << rep.b_size() << '\n';
  for (int i = 0; i < rep.a_size(); ++i) out << "A " << i << ' ' << interval_text(rep.a()[static_cast<std::size_t>(i)]) << '\n';
  for (int j = 0; j < rep.b_size(); ++j) out << "B " << j << ' ' << interval_text(rep.b()[static_cast<std::size_t>(j)]) << '\n';
  return out.str();
}

std::string emit_weights(std::span<const Weight> weights) {
  std::ostringstream out;
  out << "weights " << weights.size() << '\n';
  for (std::size_t v = 0; v < weights.size(); ++v) out << v << ' ' << weights[v] << '\n';
  return out.str();
}

std::string emit_vertex_list(std::span<const Vertex> vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(vertices[i]);
  }
  return out + '\n';
}

std::string emit(const Ordering& ord) { return emit_vertex_list(ord.perm); }

std::string emit(const SubdivisionMap& map) {
  std::ostringstream out;
  out << "subdivision " << map.origin.vertex_count() << ' ' << map.k << ' ' << map.arcs.size() << '\n';
  for (std::size_t e = 0; e < map.arcs.size(); ++e) {
    out << map.arcs[e].from << ' ' << map.arcs[e].to;
    for (int t = 1; t <= map.k; ++t) out << ' ' << map.path_vertex(e, t);
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace ivdg::io
