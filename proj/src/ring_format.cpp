#include "hypersdf/ring_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hypersdf {

ParseError::ParseError(Diagnostic diagnostic)
    : Error("line " + std::to_string(diagnostic.line) + ", column "
            + std::to_string(diagnostic.column) + ": " + diagnostic.message),
      diagnostic_(std::move(diagnostic)) {}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    out.push_back({number, line});
    if (end == text.size()) {
      break;
    }
    start = end + 1;
  }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokens(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    std::size_t const begin = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    if (i > begin) {
      out.push_back({s.substr(begin, i - begin), begin + 1});
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(split_lines(text)) {}

  HyperRing run() {
    std::size_t i = 0;
    bool ended = false;
    for (; i < lines_.size(); ++i) {
      Line const& line = lines_[i];
      if (blank(line.text)) {
        continue;
      }
      auto const toks = tokens(line.text);
      std::string_view const keyword = toks.front().text;
      if (ended) {
        fail(line, toks.front().column, "content after 'end'");
      }
      if (keyword == "end") {
        expect_arity(line, toks, 1);
        ended = true;
        end_line_ = line.number;
        continue;
      }
      if (keyword != "ring" && keyword != "order" && keyword != "zero" && keyword != "one"
          && keyword != "add" && keyword != "mul") {
        fail(line, toks.front().column, "unknown section '" + std::string(keyword) + "'");
      }
      if (!seen_.insert(std::string(keyword)).second) {
        fail(line, toks.front().column, "duplicate section '" + std::string(keyword) + "'");
      }
      if (keyword == "ring") {
        auto const rest = line.text.substr(toks.front().column - 1 + keyword.size());
        name_ = trim(rest);
        if (name_.empty()) {
          fail(line, toks.front().column, "ring name missing");
        }
      } else if (keyword == "order") {
        expect_arity(line, toks, 2);
        order_ = number(line, toks[1]);
        if (order_ == 0) {
          fail(line, toks[1].column, "order must be positive");
        }
      } else if (keyword == "zero") {
        expect_arity(line, toks, 2);
        zero_ = element(line, toks[1]);
      } else if (keyword == "one") {
        expect_arity(line, toks, 2);
        one_ = element(line, toks[1]);
      } else if (keyword == "add") {
        expect_arity(line, toks, 1);
        require_order(line, toks.front());
        i = read_add(i + 1);
      } else {
        expect_arity(line, toks, 1);
        require_order(line, toks.front());
        i = read_mul(i + 1);
      }
    }
    Line const last{lines_.empty() ? 1 : lines_.back().number, {}};
    for (char const* section : {"ring", "order", "zero", "add", "mul"}) {
      if (!seen_.count(section)) {
        fail(last, 1, std::string("missing section '") + section + "'");
      }
    }
    if (!ended) {
      fail(last, 1, "missing 'end'");
    }
    try {
      return HyperRing(name_, order_, zero_, one_, std::move(add_), std::move(mul_));
    } catch (StructuralError const& e) {
      fail(last, 1, e.what());
    }
  }

 private:
  [[noreturn]] static void fail(Line const& line, std::size_t column, std::string message) {
    throw ParseError(Diagnostic{line.number, column, std::move(message)});
  }

  static std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return std::string(s);
  }

  static void expect_arity(Line const& line, std::vector<Token> const& toks, std::size_t n) {
    if (toks.size() < n) {
      fail(line, toks.front().column, "'" + std::string(toks.front().text) + "' expects a value");
    }
    if (toks.size() > n) {
      fail(line, toks[n].column, "unexpected token '" + std::string(toks[n].text) + "'");
    }
  }

  void require_order(Line const& line, Token const& tok) const {
    if (order_ == 0) {
      fail(line, tok.column, "'order' must precede '" + std::string(tok.text) + "'");
    }
  }

  static std::size_t parse_number(std::string_view text, bool& ok) {
    std::size_t value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    ok = !text.empty() && ec == std::errc{} && ptr == last;
    return value;
  }

  static std::size_t number(Line const& line, Token const& tok) {
    bool ok = false;
    std::size_t const value = parse_number(tok.text, ok);
    if (!ok) {
      fail(line, tok.column, "bad token '" + std::string(tok.text) + "', expected a number");
    }
    return value;
  }

  Element element(Line const& line, Token const& tok) const {
    if (order_ == 0) {
      fail(line, tok.column, "'order' must precede element references");
    }
    bool ok = false;
    std::size_t const value = parse_number(tok.text, ok);
    if (!ok) {
      fail(line, tok.column, "bad token '" + std::string(tok.text) + "', expected an element");
    }
    if (value >= order_) {
      fail(line, tok.column, "unknown element '" + std::string(tok.text) + "'");
    }
    return static_cast<Element>(value);
  }

  // Returns the index of the last consumed line.
  template <typename RowFn>
  std::size_t read_rows(std::size_t i, char const* table, RowFn&& row_fn) {
    std::size_t rows = 0;
    for (; i < lines_.size() && rows < order_; ++i) {
      Line const& line = lines_[i];
      if (blank(line.text)) {
        continue;
      }
      auto const toks = tokens(line.text);
      if (!toks.empty() && !std::isdigit(static_cast<unsigned char>(toks.front().text.front()))
          && toks.front().text.front() != '{') {
        fail(line, toks.front().column,
             std::string(table) + " table has " + std::to_string(rows) + " rows, expected "
                 + std::to_string(order_));
      }
      row_fn(line);
      ++rows;
    }
    if (rows < order_) {
      Line const last{lines_.empty() ? 1 : lines_.back().number, {}};
      fail(last, 1,
           std::string(table) + " table has " + std::to_string(rows) + " rows, expected "
               + std::to_string(order_));
    }
    return i - 1;
  }

  std::size_t read_add(std::size_t i) {
    add_.reserve(order_ * order_);
    return read_rows(i, "add", [&](Line const& line) {
      auto const toks = tokens(line.text);
      if (toks.size() != order_) {
        fail(line, toks.size() > order_ ? toks[order_].column : line.text.size() + 1,
             "add row has " + std::to_string(toks.size()) + " entries, expected "
                 + std::to_string(order_));
      }
      for (Token const& tok : toks) {
        add_.push_back(element(line, tok));
      }
    });
  }

  std::size_t read_mul(std::size_t i) {
    mul_.reserve(order_ * order_);
    return read_rows(i, "mul", [&](Line const& line) {
      std::string_view const s = line.text;
      std::size_t pos = 0;
      std::size_t cells = 0;
      auto skip_space = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
          ++pos;
        }
      };
      while (true) {
        skip_space();
        if (pos >= s.size()) {
          break;
        }
        if (s[pos] != '{') {
          fail(line, pos + 1, "bad token, expected '{' to open a mul cell");
        }
        if (cells == order_) {
          fail(line, pos + 1, "mul row has more than " + std::to_string(order_) + " cells");
        }
        std::size_t const open = pos++;
        std::vector<Element> members;
        std::set<Element> unique;
        while (true) {
          skip_space();
          if (pos >= s.size()) {
            fail(line, open + 1, "unterminated mul cell");
          }
          if (s[pos] == '}') {
            ++pos;
            break;
          }
          if (!members.empty()) {
            if (s[pos] != ',') {
              fail(line, pos + 1, "bad token, expected ',' or '}'");
            }
            ++pos;
            skip_space();
          }
          std::size_t const begin = pos;
          while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) {
            ++pos;
          }
          if (pos == begin) {
            fail(line, begin + 1, members.empty() && pos < s.size() && s[pos] == '}'
                                      ? "empty mul cell"
                                      : "bad token in mul cell");
          }
          Element const e = element(line, Token{s.substr(begin, pos - begin), begin + 1});
          if (unique.insert(e).second) {
            members.push_back(e);
          }
        }
        if (members.empty()) {
          fail(line, open + 1, "empty mul cell");
        }
        mul_.push_back(std::move(members));
        ++cells;
      }
      if (cells != order_) {
        fail(line, s.size() + 1,
             "mul row has " + std::to_string(cells) + " cells, expected " + std::to_string(order_));
      }
    });
  }

  std::vector<Line> lines_;
  std::set<std::string> seen_;
  std::string name_;
  std::size_t order_ = 0;
  Element zero_ = 0;
  std::optional<Element> one_;
  std::vector<Element> add_;
  std::vector<std::vector<Element>> mul_;
  std::size_t end_line_ = 0;
};

}  // namespace

RingDocument parse_ring(std::string_view text) {
  RingDocument doc;
  doc.source = std::string(text);
  try {
    doc.ring.emplace(Parser(text).run());
  } catch (ParseError const& e) {
    doc.diagnostics.push_back(e.diagnostic());
  }
  return doc;
}

HyperRing parse_ring_or_throw(std::string_view text) {
  RingDocument doc = parse_ring(text);
  if (!doc.ok()) {
    throw ParseError(doc.diagnostics.front());
  }
  return std::move(*doc.ring);
}

std::string serialize_ring(HyperRing const& ring) {
  std::ostringstream out;
  auto const n = static_cast<Element>(ring.order());
  out << "ring " << (ring.name().empty() ? "unnamed" : ring.name()) << '\n';
  out << "order " << n << '\n';
  out << "zero " << ring.zero() << '\n';
  if (ring.one()) {
    out << "one " << *ring.one() << '\n';
  }
  out << "add\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      out << (y == 0 ? "" : " ") << ring.add(x, y);
    }
    out << '\n';
  }
  out << "mul\n";
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      out << (y == 0 ? "{" : " {");
      bool first = true;
      ring.mul(x, y).for_each([&](Element z) {
        out << (first ? "" : ",") << z;
        first = false;
      });
      out << '}';
    }
    out << '\n';
  }
  out << "end\n";
  return out.str();
}

RingDocument load_ring_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RingDocument doc;
    doc.diagnostics.push_back({0, 0, "cannot open '" + path + "'"});
    return doc;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ring(buffer.str());
}

}  // namespace hypersdf
