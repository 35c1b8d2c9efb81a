#include "clonelab/finite/text_format.hpp"

#include <charconv>
#include <sstream>

namespace clonelab::finite {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

unsigned parse_number(std::string_view word, std::size_t line) {
  unsigned value = 0;
  const auto* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line, "expected a number, got '" + std::string(word) + "'");
  return value;
}

unsigned parse_field(const std::string& word, const std::string& key, std::size_t line) {
  const std::string prefix = key + "=";
  if (word.rfind(prefix, 0) != 0) fail(line, "expected " + prefix + "<n>");
  return parse_number(std::string_view(word).substr(prefix.size()), line);
}

struct Header {
  std::string name;
  unsigned carrier;
  unsigned size;
};

Header parse_header(const Line& line, const std::string& keyword, const std::string& size_key) {
  if (line.words.size() != 4 || line.words[0] != keyword) {
    fail(line.number, "expected '" + keyword + " <name> carrier=<k> " + size_key + "=<n>'");
  }
  return {line.words[1], parse_field(line.words[2], "carrier", line.number),
          parse_field(line.words[3], size_key, line.number)};
}

Carrier make_carrier(unsigned k, std::size_t line) {
  try {
    return Carrier(k);
  } catch (const InvalidArgument& e) {
    fail(line, e.what());
  }
}

}  // namespace

std::string format_op(const std::string& name, const OpTable& op) {
  std::ostringstream os;
  os << "op " << name << " carrier=" << op.carrier().size() << " arity=" << op.arity() << "\n";
  const std::size_t row = op.carrier().size();
  for (std::size_t i = 0; i < op.size(); ++i) {
    os << unsigned(op.at(i)) << ((i + 1) % row == 0 ? "\n" : " ");
  }
  return os.str();
}

std::vector<NamedOp> parse_ops(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<NamedOp> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto header = parse_header(lines[i], "op", "arity");
    const Carrier carrier = make_carrier(header.carrier, lines[i].number);
    if (header.size < 1) fail(lines[i].number, "arity must be >= 1");
    const std::size_t expected = tuple_count(carrier.size(), header.size);
    const std::size_t header_line = lines[i].number;
    ++i;
    std::vector<Element> table;
    while (table.size() < expected) {
      if (i >= lines.size() || lines[i].words[0] == "op") {
        fail(header_line, "operation '" + header.name + "' has fewer than k^n values");
      }
      for (const auto& w : lines[i].words) {
        const unsigned v = parse_number(w, lines[i].number);
        if (!carrier.contains(v)) fail(lines[i].number, "value outside the carrier");
        table.push_back(static_cast<Element>(v));
      }
      ++i;
    }
    if (table.size() != expected) fail(header_line, "operation '" + header.name + "' has too many values");
    out.push_back({header.name, OpTable(carrier, header.size, std::move(table))});
  }
  return out;
}

std::string format_relation(const std::string& name, const RelationTable& r) {
  std::ostringstream os;
  os << "rel " << name << " carrier=" << r.carrier().size() << " width=" << r.width() << "\n";
  for (const auto& t : r.tuples()) {
    for (std::size_t j = 0; j < t.size(); ++j) os << (j ? " " : "") << unsigned(t[j]);
    os << "\n";
  }
  return os.str();
}

std::vector<NamedRelation> parse_relations(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<NamedRelation> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto header = parse_header(lines[i], "rel", "width");
    const Carrier carrier = make_carrier(header.carrier, lines[i].number);
    if (header.size < 1) fail(lines[i].number, "width must be >= 1");
    ++i;
    std::vector<std::vector<Element>> tuples;
    for (; i < lines.size() && lines[i].words[0] != "rel"; ++i) {
      if (lines[i].words.size() != header.size) fail(lines[i].number, "tuple has the wrong width");
      std::vector<Element> t;
      for (const auto& w : lines[i].words) {
        const unsigned v = parse_number(w, lines[i].number);
        if (!carrier.contains(v)) fail(lines[i].number, "value outside the carrier");
        t.push_back(static_cast<Element>(v));
      }
      tuples.push_back(std::move(t));
    }
    out.push_back({header.name, RelationTable(carrier, header.size, std::move(tuples))});
  }
  return out;
}

}  // namespace clonelab::finite
