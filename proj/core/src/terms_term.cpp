#include "clonelab/terms/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>

namespace clonelab::terms {

struct Term::Node {
  Kind kind;
  Nat value = 0;
  std::optional<SymbolicFn> symbol;
  std::vector<Term> children;
  unsigned depth = 0;
  std::size_t size = 1;
  bool has_x = false;
  bool has_y = false;
};

Term Term::x() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::var_x;
  n->has_x = true;
  return Term(n);
}

Term Term::y() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::var_y;
  n->has_y = true;
  return Term(n);
}

Term Term::constant(Nat value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::constant;
  n->value = value;
  return Term(n);
}

Term Term::unary(SymbolicFn f, Term arg) {
  if (f.arity() != 1) throw InvalidArgument("unary application of '" + f.name() + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::unary;
  n->depth = arg.depth() + 1;
  n->size = arg.size() + 1;
  n->has_x = arg.mentions_x();
  n->has_y = arg.mentions_y();
  n->symbol = std::move(f);
  n->children = {std::move(arg)};
  return Term(n);
}

Term Term::binary(SymbolicFn f, Term left, Term right) {
  if (f.arity() != 2) throw InvalidArgument("binary application of '" + f.name() + "'");
  auto n = std::make_shared<Node>();
  n->kind = Kind::binary;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->size = left.size() + right.size() + 1;
  n->has_x = left.mentions_x() || right.mentions_x();
  n->has_y = left.mentions_y() || right.mentions_y();
  n->symbol = std::move(f);
  n->children = {std::move(left), std::move(right)};
  return Term(n);
}

Term::Kind Term::kind() const { return node_->kind; }
Nat Term::value() const { return node_->value; }
const SymbolicFn& Term::symbol() const {
  if (!node_->symbol) throw InvalidArgument("term has no function symbol");
  return *node_->symbol;
}
const std::vector<Term>& Term::children() const { return node_->children; }
unsigned Term::depth() const { return node_->depth; }
std::size_t Term::size() const { return node_->size; }
bool Term::mentions_x() const { return node_->has_x; }
bool Term::mentions_y() const { return node_->has_y; }

Nat eval(const Term& t, Nat alpha, Nat beta) {
  switch (t.kind()) {
    case Term::Kind::var_x:
      return alpha;
    case Term::Kind::var_y:
      return beta;
    case Term::Kind::constant:
      return t.value();
    case Term::Kind::unary:
      return t.symbol()(eval(t.children()[0], alpha, beta));
    case Term::Kind::binary:
      return t.symbol()(eval(t.children()[0], alpha, beta), eval(t.children()[1], alpha, beta));
  }
  return 0;
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::var_x:
      return "x";
    case Term::Kind::var_y:
      return "y";
    case Term::Kind::constant:
      return std::to_string(t.value());
    case Term::Kind::unary:
      return "(u:" + t.symbol().name() + " " + to_string(t.children()[0]) + ")";
    case Term::Kind::binary:
      return "(b:" + t.symbol().name() + " " + to_string(t.children()[0]) + " " +
             to_string(t.children()[1]) + ")";
  }
  return "";
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const symbolic::Registry& registry) : text_(text), registry_(registry) {}

  Term parse_all() {
    Term t = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("term: " + why + " at offset " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) fail("expected an atom");
    return text_.substr(start, pos_ - start);
  }

  Term parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') {
      const std::string a = atom();
      if (a == "x") return Term::x();
      if (a == "y") return Term::y();
      Nat v = 0;
      auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), v);
      if (ec != std::errc() || ptr != a.data() + a.size()) fail("unknown atom '" + a + "'");
      return Term::constant(v);
    }
    ++pos_;
    const std::string head = atom();
    if (head.size() < 3 || (head.compare(0, 2, "u:") != 0 && head.compare(0, 2, "b:") != 0)) {
      fail("application head must be u:<name> or b:<name>");
    }
    const unsigned arity = head[0] == 'u' ? 1 : 2;
    const SymbolicFn* fn = nullptr;
    try {
      fn = &registry_.lookup(head.substr(2), arity);
    } catch (const RegistryError& e) {
      fail(e.what());
    }
    std::vector<Term> args;
    for (unsigned i = 0; i < arity; ++i) args.push_back(parse());
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' after " + std::to_string(arity) + " argument(s)");
    ++pos_;
    return arity == 1 ? Term::unary(*fn, args[0]) : Term::binary(*fn, args[0], args[1]);
  }

  const std::string& text_;
  const symbolic::Registry& registry_;
  std::size_t pos_ = 0;
};

void collect_vanishing(const Term& t, std::map<std::string, SymbolicFn>& out) {
  if (t.kind() == Term::Kind::binary && t.symbol().annotations().cross_vanishing) {
    out.emplace(t.symbol().name(), t.symbol());
  }
  for (const auto& c : t.children()) collect_vanishing(c, out);
}

}  // namespace

Term parse_term(const std::string& text, const symbolic::Registry& registry) {
  return Parser(text, registry).parse_all();
}

std::vector<Term> parse_term_list(const std::string& text, const symbolic::Registry& registry) {
  std::vector<Term> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++line_no;
    std::string line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      try {
        out.push_back(parse_term(line, registry));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    start = end + 1;
  }
  return out;
}

std::vector<SymbolicFn> vanishing_symbols(const Term& t) {
  std::map<std::string, SymbolicFn> found;
  collect_vanishing(t, found);
  std::vector<SymbolicFn> out;
  for (auto& [name, fn] : found) out.push_back(fn);
  return out;
}

}  // namespace clonelab::terms
