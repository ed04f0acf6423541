#include "khtight/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace khtight {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  BraidWord word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_separator(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw MathError("braid: malformed letter '" + std::string(token) + "'");
    if (value == 0) throw MathError("braid: zero letter is not a generator");
    word.letters.push_back(value);
    pos = end;
  }

  if (strands) {
    word.strands = *strands;
  } else {
    if (word.letters.empty())
      throw MathError("braid: empty word needs an explicit strand count");
    int top = 0;
    for (int l : word.letters) top = std::max(top, std::abs(l));
    word.strands = top + 1;
  }
  validate(word);
  return word;
}

void validate(const BraidWord& word) {
  if (word.strands < 1) throw MathError("braid: strand count must be positive");
  for (int l : word.letters) {
    if (l == 0) throw MathError("braid: zero letter is not a generator");
    if (std::abs(l) >= word.strands)
      throw MathError("braid: letter " + std::to_string(l) + " needs more than " +
                      std::to_string(word.strands) + " strands");
  }
}

std::string to_string(const BraidWord& word) {
  std::string out;
  for (std::size_t k = 0; k < word.letters.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word.letters[k]);
  }
  return out;
}

std::string expand_template(std::string_view templ, int r) {
  std::string text(templ);
  for (auto pos = text.find("{r}"); pos != std::string::npos; pos = text.find("{r}"))
    text.replace(pos, 3, std::to_string(r));
  std::string out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(start, end - start);
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    auto star = token.find('*');
    if (star == std::string::npos) {
      if (!out.empty() && !token.empty()) out += ',';
      out += token;
    } else {
      std::string letter = token.substr(0, star);
      std::string count_text = token.substr(star + 1);
      int count = 0;
      auto [p, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
      if (ec != std::errc() || p != count_text.data() + count_text.size() || count < 0)
        throw MathError("template: bad repeat count in '" + token + "'");
      for (int k = 0; k < count; ++k) {
        if (!out.empty()) out += ',';
        out += letter;
      }
    }
    start = end + 1;
  }
  return out;
}

int writhe(const BraidWord& word) {
  int w = 0;
  for (int l : word.letters) w += l > 0 ? 1 : -1;
  return w;
}

int positive_crossings(const BraidWord& word) {
  return static_cast<int>(std::count_if(word.letters.begin(), word.letters.end(),
                                        [](int l) { return l > 0; }));
}

int negative_crossings(const BraidWord& word) { return word.length() - positive_crossings(word); }

int self_linking(const BraidWord& word) { return writhe(word) - word.strands; }

BraidWord mirror(const BraidWord& word) {
  BraidWord m = word;
  for (int& l : m.letters) l = -l;
  return m;
}

bool LinkDiagram::connected() const { return pieces() == 1; }

int LinkDiagram::pieces() const {
  std::vector<bool> present(strands, false);
  for (const auto& c : crossings) present[c.generator] = true;
  int p = 1;
  for (int j = 1; j < strands; ++j)
    if (!present[j]) ++p;
  return p;
}

int LinkDiagram::euler_characteristic() const {
  std::vector<int> touching(strands, 0);
  for (const auto& c : crossings) {
    ++touching[c.generator - 1];
    ++touching[c.generator];
  }
  int loops = static_cast<int>(std::count(touching.begin(), touching.end(), 0));
  int vertices = crossing_count() + loops;
  return vertices - edge_count + static_cast<int>(faces.size());
}

LinkDiagram closure_diagram(const BraidWord& word) {
  validate(word);
  const int b = word.strands;
  const int n = word.length();

  LinkDiagram d;
  d.strands = b;

  // Events per braid position, and per-generator occurrence counts.
  std::vector<int> events(b, 0);
  std::vector<int> occurrences(b + 1, 0);
  for (int l : word.letters) {
    int j = std::abs(l);
    ++events[j - 1];
    ++events[j];
    ++occurrences[j];
  }
  std::vector<int> offset(b + 1, 0);
  for (int p = 0; p < b; ++p) offset[p + 1] = offset[p] + std::max(events[p], 1);
  d.edge_count = offset[b];
  d.edge_position.resize(d.edge_count);
  d.edge_on_closure.assign(d.edge_count, false);
  for (int p = 0; p < b; ++p) {
    for (int e = offset[p]; e < offset[p + 1]; ++e) d.edge_position[e] = p;
    d.edge_on_closure[offset[p]] = true;
  }
  auto segment = [&](int p, int k) { return offset[p] + (events[p] ? k % events[p] : 0); };

  // Faces: level 0, pieces of levels 1..b-1, level b.
  std::vector<int> face_base(b + 1, 0);
  d.faces.push_back({0, 0, false});
  for (int j = 1; j < b; ++j) {
    face_base[j] = static_cast<int>(d.faces.size());
    int m = occurrences[j];
    for (int t = 0; t < std::max(m, 1); ++t) d.faces.push_back({j, t, m == 0});
  }
  face_base[b] = static_cast<int>(d.faces.size());
  d.faces.push_back({b, 0, false});

  std::vector<int> seen(b + 1, 0);  // occurrences of sigma_j so far
  auto face_at = [&](int level) {
    if (level == 0 || level == b) return face_base[level];
    int m = occurrences[level];
    if (m == 0) return face_base[level];
    int piece = ((seen[level] - 1) % m + m) % m;
    return face_base[level] + piece;
  };

  std::vector<int> position_event(b, 0);
  for (int k = 0; k < n; ++k) {
    int l = word.letters[k];
    int j = std::abs(l);
    int p = j - 1;
    Crossing c;
    c.sign = l > 0 ? 1 : -1;
    c.generator = j;
    c.letter_index = k;
    int tl = position_event[p]++;
    int tr = position_event[p + 1]++;
    c.edges = {segment(p, tl), segment(p + 1, tr), segment(p + 1, tr + 1), segment(p, tl + 1)};

    c.faces[0] = face_at(j - 1);
    c.faces[1] = face_at(j + 1);
    int m = occurrences[j];
    int t = seen[j];
    c.faces[2] = face_base[j] + ((t - 1) % m + m) % m;
    c.faces[3] = face_base[j] + t;
    ++seen[j];
    d.crossings.push_back(c);
  }

  d.marked_edge = segment(0, 0);

  UnionFind uf(d.edge_count);
  for (const auto& c : d.crossings) {
    uf.unite(c.in_left(), c.out_right());
    uf.unite(c.in_right(), c.out_left());
  }
  d.edge_component.assign(d.edge_count, -1);
  std::vector<int> component_of_root(d.edge_count, -1);
  for (int e = 0; e < d.edge_count; ++e) {
    int r = uf.find(e);
    if (component_of_root[r] < 0) component_of_root[r] = d.components++;
    d.edge_component[e] = component_of_root[r];
  }
  return d;
}

Resolution resolve(const LinkDiagram& diagram, std::uint64_t state) {
  UnionFind uf(diagram.edge_count);
  for (std::size_t k = 0; k < diagram.crossings.size(); ++k) {
    const auto& c = diagram.crossings[k];
    bool one = (state >> k) & 1u;
    bool vertical = (c.sign > 0) != one;
    if (vertical) {
      uf.unite(c.in_left(), c.out_left());
      uf.unite(c.in_right(), c.out_right());
    } else {
      uf.unite(c.in_left(), c.in_right());
      uf.unite(c.out_left(), c.out_right());
    }
  }
  Resolution r;
  r.state = state;
  r.circle_of_edge.assign(diagram.edge_count, 0);
  std::vector<int> circle_of_root(diagram.edge_count, -1);
  std::vector<int> closure_hits;
  for (int e = 0; e < diagram.edge_count; ++e) {
    int root = uf.find(e);
    if (circle_of_root[root] < 0) {
      circle_of_root[root] = r.circle_count++;
      closure_hits.push_back(0);
    }
    int circle = circle_of_root[root];
    r.circle_of_edge[e] = static_cast<std::uint8_t>(circle);
    if (diagram.edge_on_closure[e]) ++closure_hits[circle];
  }
  if (r.circle_count > 31) throw ResourceError("resolution has more than 31 circles");
  for (int c = 0; c < r.circle_count; ++c)
    if (closure_hits[c] % 2 == 1) r.axis_linking |= 1u << c;
  r.marked_circle = r.circle_of_edge[diagram.marked_edge];
  return r;
}

std::uint64_t oriented_state(const LinkDiagram& diagram) {
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < diagram.crossings.size(); ++k)
    if (diagram.crossings[k].sign < 0) s |= std::uint64_t{1} << k;
  return s;
}

OrientedResolution oriented_resolution(const BraidWord& word) {
  OrientedResolution o;
  o.diagram = closure_diagram(word);
  o.resolution = resolve(o.diagram, oriented_state(o.diagram));
  return o;
}

}  // namespace khtight
