#include "orthokit/formats.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ortho::io {
namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#')
        ++i;
      toks.push_back({raw.substr(start, i - start), lineno, static_cast<int>(start + 1)});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

void transitive_reflexive_close(std::vector<Bitset>& rows) {
  const int n = static_cast<int>(rows.size());
  for (int a = 0; a < n; ++a) rows[static_cast<std::size_t>(a)].set(a);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < n; ++a) {
      Bitset next = rows[static_cast<std::size_t>(a)];
      rows[static_cast<std::size_t>(a)].for_each(
          [&](int b) { next |= rows[static_cast<std::size_t>(b)]; });
      if (!(next == rows[static_cast<std::size_t>(a)])) {
        rows[static_cast<std::size_t>(a)] = next;
        grew = true;
      }
    }
  }
}

class BlockParser {
 public:
  explicit BlockParser(const std::vector<std::vector<Token>>& lines) : lines_(lines) {}

  Document parse() {
    Document doc;
    while (pos_ < lines_.size()) {
      const auto& head = lines_[pos_];
      const std::string& kw = head[0].text;
      if (kw == "lattice")
        doc.items.push_back(parse_lattice_block());
      else if (kw == "frame")
        doc.items.push_back(parse_frame_block());
      else if (kw == "map")
        doc.items.push_back(parse_map_block(doc));
      else
        throw ParseError("expected 'lattice', 'frame' or 'map', got '" + kw + "'", head[0].line,
                         head[0].col);
    }
    return doc;
  }

 private:
  const std::vector<std::vector<Token>>& lines_;
  std::size_t pos_ = 0;

  const std::vector<Token>& expect_line() {
    if (pos_ >= lines_.size()) {
      const auto& last = lines_.back().back();
      throw ParseError("unexpected end of input inside a block", last.line, last.col);
    }
    return lines_[pos_];
  }

  static void need_args(const std::vector<Token>& l, std::size_t k) {
    if (l.size() != k + 1)
      throw ParseError("directive '" + l[0].text + "' expects " + std::to_string(k) +
                           " argument(s)",
                       l[0].line, l[0].col);
  }

  static int resolve(const std::map<std::string, int>& names, const Token& t) {
    auto it = names.find(t.text);
    if (it == names.end())
      throw UndeclaredError("reference to undeclared identifier '" + t.text + "'", t.line, t.col);
    return it->second;
  }

  LatticeData parse_lattice_block() {
    const auto& head = lines_[pos_];
    need_args(head, 1);
    ++pos_;
    LatticeData d;
    d.name = head[1].text;
    std::map<std::string, int> names;
    std::vector<std::pair<int, int>> order, ortho, exists;
    bool done = false;
    while (!done) {
      const auto& l = expect_line();
      const std::string& kw = l[0].text;
      if (kw == "elements") {
        for (std::size_t i = 1; i < l.size(); ++i) {
          if (names.count(l[i].text))
            throw ParseError("duplicate element '" + l[i].text + "'", l[i].line, l[i].col);
          names[l[i].text] = static_cast<int>(d.labels.size());
          d.labels.push_back(l[i].text);
        }
      } else if (kw == "covers" || kw == "leq") {
        need_args(l, 2);
        order.emplace_back(resolve(names, l[1]), resolve(names, l[2]));
      } else if (kw == "ortho") {
        need_args(l, 2);
        ortho.emplace_back(resolve(names, l[1]), resolve(names, l[2]));
      } else if (kw == "exists") {
        need_args(l, 2);
        exists.emplace_back(resolve(names, l[1]), resolve(names, l[2]));
      } else if (kw == "end") {
        need_args(l, 0);
        done = true;
      } else {
        throw ParseError("unknown lattice directive '" + kw + "'", l[0].line, l[0].col);
      }
      ++pos_;
    }
    const std::size_t n = d.labels.size();
    d.leq.assign(n, Bitset(n));
    for (auto [a, b] : order) d.leq[static_cast<std::size_t>(a)].set(b);
    transitive_reflexive_close(d.leq);
    d.ortho.assign(n, -1);
    for (auto [a, b] : ortho) d.ortho[static_cast<std::size_t>(a)] = b;
    if (!exists.empty()) {
      std::vector<int> ex(n, -1);
      for (auto [a, b] : exists) ex[static_cast<std::size_t>(a)] = b;
      d.exists = std::move(ex);
    }
    return d;
  }

  OrthoFrame parse_frame_block() {
    const auto& head = lines_[pos_];
    need_args(head, 1);
    ++pos_;
    OrthoFrame f;
    f.name = head[1].text;
    std::map<std::string, int> names;
    std::vector<std::pair<int, int>> perp, rel;
    bool done = false;
    while (!done) {
      const auto& l = expect_line();
      const std::string& kw = l[0].text;
      if (kw == "points") {
        for (std::size_t i = 1; i < l.size(); ++i) {
          if (names.count(l[i].text))
            throw ParseError("duplicate point '" + l[i].text + "'", l[i].line, l[i].col);
          names[l[i].text] = static_cast<int>(f.labels.size());
          f.labels.push_back(l[i].text);
        }
      } else if (kw == "perp") {
        need_args(l, 2);
        perp.emplace_back(resolve(names, l[1]), resolve(names, l[2]));
      } else if (kw == "rel") {
        need_args(l, 2);
        rel.emplace_back(resolve(names, l[1]), resolve(names, l[2]));
      } else if (kw == "end") {
        need_args(l, 0);
        done = true;
      } else {
        throw ParseError("unknown frame directive '" + kw + "'", l[0].line, l[0].col);
      }
      ++pos_;
    }
    const std::size_t n = f.labels.size();
    f.perp.assign(n, Bitset(n));
    for (auto [x, y] : perp) {  // declared once per unordered pair
      f.perp[static_cast<std::size_t>(x)].set(y);
      f.perp[static_cast<std::size_t>(y)].set(x);
    }
    if (!rel.empty()) {
      std::vector<Bitset> rows(n, Bitset(n));
      for (auto [x, y] : rel) rows[static_cast<std::size_t>(x)].set(y);
      f.rel = std::move(rows);
    }
    return f;
  }

  MorphismData parse_map_block(const Document& doc) {
    const auto& head = lines_[pos_];
    need_args(head, 3);
    MorphismData m;
    m.name = head[1].text;
    m.source = head[2].text;
    m.target = head[3].text;
    m.line = head[0].line;

    auto labels_of = [&](const std::string& name, const Token& t) -> const std::vector<std::string>* {
      for (const auto& item : doc.items) {
        if (const auto* lat = std::get_if<LatticeData>(&item); lat && lat->name == name)
          return &lat->labels;
        if (const auto* fr = std::get_if<OrthoFrame>(&item); fr && fr->name == name)
          return &fr->labels;
      }
      throw UndeclaredError("map references undeclared object '" + name + "'", t.line, t.col);
    };
    const auto* src_labels = labels_of(m.source, head[2]);
    const auto* tgt_labels = labels_of(m.target, head[3]);
    auto known = [](const std::vector<std::string>& labels, const std::string& s) {
      return std::find(labels.begin(), labels.end(), s) != labels.end();
    };

    ++pos_;
    bool done = false;
    while (!done) {
      const auto& l = expect_line();
      const std::string& kw = l[0].text;
      if (kw == "send") {
        need_args(l, 2);
        if (!known(*src_labels, l[1].text))
          throw UndeclaredError("'" + l[1].text + "' is not in " + m.source, l[1].line, l[1].col);
        if (!known(*tgt_labels, l[2].text))
          throw UndeclaredError("'" + l[2].text + "' is not in " + m.target, l[2].line, l[2].col);
        m.sends.emplace_back(l[1].text, l[2].text);
      } else if (kw == "end") {
        need_args(l, 0);
        done = true;
      } else {
        throw ParseError("unknown map directive '" + kw + "'", l[0].line, l[0].col);
      }
      ++pos_;
    }
    return m;
  }
};

std::vector<std::pair<int, int>> cover_pairs_of(const std::vector<Bitset>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<Bitset> down(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    up[static_cast<std::size_t>(a)].for_each([&](int b) { down[static_cast<std::size_t>(b)].set(a); });
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !up[static_cast<std::size_t>(a)].test(b)) continue;
      Bitset between = up[static_cast<std::size_t>(a)] & down[static_cast<std::size_t>(b)];
      if (between.count() == 2) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace

const LatticeData* Document::first_lattice() const {
  for (const auto& item : items)
    if (const auto* lat = std::get_if<LatticeData>(&item)) return lat;
  return nullptr;
}

const OrthoFrame* Document::first_frame() const {
  for (const auto& item : items)
    if (const auto* fr = std::get_if<OrthoFrame>(&item)) return fr;
  return nullptr;
}

Document parse_document(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  return BlockParser(lines).parse();
}

std::string to_text(const LatticeData& d) {
  std::ostringstream out;
  out << "lattice " << (d.name.empty() ? "unnamed" : d.name) << "\n";
  out << "elements";
  for (const auto& l : d.labels) out << " " << l;
  out << "\n";
  for (auto [a, b] : cover_pairs_of(d.leq))
    out << "covers " << d.labels[static_cast<std::size_t>(a)] << " "
        << d.labels[static_cast<std::size_t>(b)] << "\n";
  for (std::size_t a = 0; a < d.ortho.size(); ++a)
    out << "ortho " << d.labels[a] << " " << d.labels[static_cast<std::size_t>(d.ortho[a])] << "\n";
  if (d.exists)
    for (std::size_t a = 0; a < d.exists->size(); ++a)
      out << "exists " << d.labels[a] << " "
          << d.labels[static_cast<std::size_t>((*d.exists)[a])] << "\n";
  out << "end\n";
  return out.str();
}

std::string to_text(const OrthoFrame& f) {
  std::ostringstream out;
  out << "frame " << (f.name.empty() ? "unnamed" : f.name) << "\n";
  out << "points";
  for (const auto& l : f.labels) out << " " << l;
  out << "\n";
  for (int x = 0; x < f.size(); ++x)
    f.perp[static_cast<std::size_t>(x)].for_each([&](int y) {
      if (x < y)
        out << "perp " << f.labels[static_cast<std::size_t>(x)] << " "
            << f.labels[static_cast<std::size_t>(y)] << "\n";
    });
  if (f.rel)
    for (int x = 0; x < f.size(); ++x)
      (*f.rel)[static_cast<std::size_t>(x)].for_each([&](int y) {
        out << "rel " << f.labels[static_cast<std::size_t>(x)] << " "
            << f.labels[static_cast<std::size_t>(y)] << "\n";
      });
  out << "end\n";
  return out.str();
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_dot(const FiniteOrthoLattice& L) {
  std::ostringstream out;
  out << "graph " << dot_quote(L.name().empty() ? "lattice" : L.name()) << " {\n";
  out << "  rankdir=BT;\n";
  for (int a = 0; a < L.size(); ++a)
    out << "  n" << a << " [label=" << dot_quote(L.label(a)) << "];\n";
  for (auto [a, b] : L.cover_pairs()) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const OrthoFrame& f) {
  std::ostringstream out;
  out << "digraph " << dot_quote(f.name.empty() ? "frame" : f.name) << " {\n";
  for (int x = 0; x < f.size(); ++x)
    out << "  n" << x << " [label=" << dot_quote(f.labels[static_cast<std::size_t>(x)]) << "];\n";
  for (int x = 0; x < f.size(); ++x)
    f.perp[static_cast<std::size_t>(x)].for_each([&](int y) {
      if (x < y) out << "  n" << x << " -> n" << y << " [dir=none];\n";
    });
  if (f.rel)
    for (int x = 0; x < f.size(); ++x)
      (*f.rel)[static_cast<std::size_t>(x)].for_each(
          [&](int y) { out << "  n" << x << " -> n" << y << ";\n"; });
  out << "}\n";
  return out.str();
}

}  // namespace ortho::io
