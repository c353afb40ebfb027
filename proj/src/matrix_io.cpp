#include "mdslab/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace mdslab {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;  // 1-based
};

class Lexer {
 public:
  Lexer(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

  /// Tokens of the next non-empty line; false at end of input.
  bool next_line(std::vector<Token>& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      out.clear();
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        const std::size_t start = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i > start) out.push_back({raw.substr(start, i - start), line_, start + 1});
      }
      if (!out.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void error(std::size_t line, std::size_t col, const std::string& msg) const {
    fail(ErrorKind::ParseError, name_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
  [[noreturn]] void error(const Token& t, const std::string& msg) const { error(t.line, t.col, msg); }
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::string name_;
  std::size_t line_ = 0;
};

std::uint64_t to_uint(const Lexer& lx, const Token& t, std::string_view text, std::size_t offset) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    lx.error(t.line, t.col + offset, "expected a non-negative integer, got '" + std::string(text) + "'");
  return v;
}

struct KeyValue {
  std::string value;
  Token token;
  std::size_t offset;  // column offset of the value inside the token
};

std::map<std::string, KeyValue> key_values(const Lexer& lx, const std::vector<Token>& line,
                                           std::initializer_list<std::string_view> allowed) {
  std::map<std::string, KeyValue> out;
  for (const auto& t : line) {
    const auto eq = t.text.find('=');
    if (eq == std::string::npos || eq == 0) lx.error(t, "expected key=value, got '" + t.text + "'");
    std::string key = t.text.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) lx.error(t, "unknown key '" + key + "'");
    if (out.count(key)) lx.error(t, "duplicate key '" + key + "'");
    out.emplace(key, KeyValue{t.text.substr(eq + 1), t, eq + 1});
  }
  return out;
}

}  // namespace

Matrix parse_matrix(std::istream& in, const std::string& name) {
  Lexer lx(in, name);
  std::vector<Token> line;
  if (!lx.next_line(line)) lx.error(lx.line() + 1, 1, "missing field header");

  const auto header = key_values(lx, line, {"q", "p", "m", "mod"});
  if (!header.count("q")) lx.error(line.front(), "field header needs q=");
  const auto& qkv = header.at("q");
  const std::uint64_t q = to_uint(lx, qkv.token, qkv.value, qkv.offset);
  const auto pm = prime_power(q);
  if (!pm || q > kMaxFieldOrder) lx.error(qkv.token.line, qkv.token.col + qkv.offset, "q=" + qkv.value + " is not a supported prime power");
  for (const char* key : {"p", "m"}) {
    if (!header.count(key)) continue;
    const auto& kv = header.at(key);
    const std::uint64_t v = to_uint(lx, kv.token, kv.value, kv.offset);
    const std::uint64_t expect = key[0] == 'p' ? pm->first : pm->second;
    if (v != expect) lx.error(kv.token.line, kv.token.col + kv.offset, std::string(key) + " is inconsistent with q");
  }
  std::optional<std::vector<std::uint32_t>> modulus;
  if (header.count("mod")) {
    const auto& kv = header.at("mod");
    modulus.emplace();
    std::size_t pos = 0;
    while (pos <= kv.value.size()) {
      std::size_t comma = kv.value.find(',', pos);
      if (comma == std::string::npos) comma = kv.value.size();
      modulus->push_back(static_cast<std::uint32_t>(
          to_uint(lx, kv.token, std::string_view(kv.value).substr(pos, comma - pos), kv.offset + pos)));
      pos = comma + 1;
    }
  }
  FieldPtr field;
  try {
    field = Field::make(pm->first, pm->second, modulus);
  } catch (const Error& e) {
    lx.error(line.front(), e.what());
  }

  if (!lx.next_line(line)) lx.error(lx.line() + 1, 1, "missing k= n= line");
  const auto shape = key_values(lx, line, {"k", "n"});
  if (!shape.count("k") || !shape.count("n")) lx.error(line.front(), "shape line needs k= and n=");
  const auto& kkv = shape.at("k");
  const auto& nkv = shape.at("n");
  const std::size_t k = to_uint(lx, kkv.token, kkv.value, kkv.offset);
  const std::size_t n = to_uint(lx, nkv.token, nkv.value, nkv.offset);

  Matrix m(field, k, n);
  for (std::size_t r = 0; r < k; ++r) {
    if (!lx.next_line(line)) lx.error(lx.line() + 1, 1, "expected " + std::to_string(k) + " rows, got " + std::to_string(r));
    if (line.size() != n)
      lx.error(line.front(), "row has " + std::to_string(line.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t v = to_uint(lx, line[c], line[c].text, 0);
      if (v >= field->q())
        fail(ErrorKind::EncodingOutOfRange, name + ":" + std::to_string(line[c].line) + ":" +
                                                std::to_string(line[c].col) + ": encoding " + line[c].text +
                                                " is not below q=" + std::to_string(field->q()));
      m(r, c) = Gf(static_cast<std::uint32_t>(v));
    }
  }
  if (lx.next_line(line)) lx.error(line.front(), "unexpected content after the last row");
  return m;
}

Matrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  return parse_matrix(in, path);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.field().header() << '\n' << "k=" << m.rows() << " n=" << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).value;
    out << '\n';
  }
}

std::string matrix_to_text(const Matrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace mdslab
