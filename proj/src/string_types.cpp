#include <cctype>

#include "hlc/string_calculi.hpp"

namespace hlc::str {

const char* to_string(Calc c) {
  switch (c) {
    case Calc::L: return "L";
    case Calc::LP: return "LP";
    case Calc::NLd: return "NLd";
    case Calc::LW: return "LW";
  }
  return "?";
}

std::optional<Calc> calc_from_string(const std::string& s) {
  for (Calc c : {Calc::L, Calc::LP, Calc::NLd, Calc::LW})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

namespace {

StrTypePtr make(Op op, std::string sym, StrTypePtr l, StrTypePtr r, unsigned w) {
  auto t = std::make_shared<StrType>();
  t->op = op;
  t->sym = std::move(sym);
  t->l = std::move(l);
  t->r = std::move(r);
  t->weight = w;
  return t;
}

bool is_binary(Op op) { return op == Op::Over || op == Op::Under || op == Op::Prod; }

char op_char(Op op) {
  switch (op) {
    case Op::Over: return '/';
    case Op::Under: return '\\';
    case Op::Prod: return '*';
    default: return '?';
  }
}

std::string operand(const StrType& t) {
  std::string s = to_string(t);
  if (is_binary(t.op) && t.weight == 0) return "(" + s + ")";
  if (t.op == Op::Dia || t.op == Op::Box) return "(" + s + ")";
  return s;
}

}  // namespace

StrTypePtr prim(const std::string& sym, unsigned weight) { return make(Op::Prim, sym, nullptr, nullptr, weight); }
StrTypePtr over(StrTypePtr a, StrTypePtr b, unsigned weight) {
  return make(Op::Over, "", std::move(a), std::move(b), weight);
}
StrTypePtr under(StrTypePtr b, StrTypePtr a, unsigned weight) {
  return make(Op::Under, "", std::move(b), std::move(a), weight);
}
StrTypePtr prod(StrTypePtr a, StrTypePtr b, unsigned weight) {
  return make(Op::Prod, "", std::move(a), std::move(b), weight);
}
StrTypePtr dia(StrTypePtr a) { return make(Op::Dia, "", std::move(a), nullptr, 0); }
StrTypePtr box(StrTypePtr a) { return make(Op::Box, "", std::move(a), nullptr, 0); }

StrTypePtr with_weight(const StrTypePtr& t, unsigned weight) { return make(t->op, t->sym, t->l, t->r, weight); }

bool operator==(const StrType& a, const StrType& b) {
  if (a.op != b.op || a.sym != b.sym || a.weight != b.weight) return false;
  if ((a.l == nullptr) != (b.l == nullptr) || (a.r == nullptr) != (b.r == nullptr)) return false;
  if (a.l && !(*a.l == *b.l)) return false;
  if (a.r && !(*a.r == *b.r)) return false;
  return true;
}

std::size_t connectives(const StrType& t) {
  if (t.op == Op::Prim) return 0;
  std::size_t n = 1 + connectives(*t.l);
  if (t.r) n += connectives(*t.r);
  return n;
}

bool has_weights(const StrType& t) {
  return t.weight != 0 || (t.l && has_weights(*t.l)) || (t.r && has_weights(*t.r));
}

bool has_modalities(const StrType& t) {
  return t.op == Op::Dia || t.op == Op::Box || (t.l && has_modalities(*t.l)) || (t.r && has_modalities(*t.r));
}

StrTypePtr unweighted(const StrTypePtr& t) {
  return make(t->op, t->sym, t->l ? unweighted(t->l) : nullptr, t->r ? unweighted(t->r) : nullptr, 0);
}

std::string to_string(const StrType& t) {
  std::string s;
  switch (t.op) {
    case Op::Prim: s = t.sym; break;
    case Op::Dia: return "dia " + operand(*t.l);
    case Op::Box: return "box " + operand(*t.l);
    default: s = operand(*t.l) + op_char(t.op) + operand(*t.r);
  }
  if (t.weight != 0) return "(" + s + ";" + std::to_string(t.weight) + ")";
  return s;
}

TermPtr leaf(StrTypePtr t) {
  auto x = std::make_shared<Term>();
  x->kind = Term::Leaf;
  x->type = std::move(t);
  return x;
}

TermPtr pair(TermPtr a, TermPtr b) {
  auto x = std::make_shared<Term>();
  x->kind = Term::Pair;
  x->a = std::move(a);
  x->b = std::move(b);
  return x;
}

TermPtr wrap(TermPtr a) {
  auto x = std::make_shared<Term>();
  x->kind = Term::Diam;
  x->a = std::move(a);
  return x;
}

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Leaf: return to_string(*t.type);
    case Term::Pair: return "(" + to_string(*t.a) + ", " + to_string(*t.b) + ")";
    case Term::Diam: return "<" + to_string(*t.a) + ">";
  }
  return "?";
}

std::string to_string(const StrSequent& s, Calc c) {
  std::string out;
  if (c == Calc::LW) out = "<" + std::to_string(s.weight) + "> ";
  if (c == Calc::NLd) {
    out += s.term ? to_string(*s.term) : "?";
  } else {
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
      if (i) out += ", ";
      out += to_string(*s.antecedent[i]);
    }
  }
  return out + " -> " + (s.succedent ? to_string(*s.succedent) : "?");
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool peek(const char* lit) {
    ws();
    return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_end() {
    ws();
    return pos_ == s_.size();
  }

  unsigned number() {
    ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  std::string word() {
    ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }

  StrTypePtr unary() {
    ws();
    if (peek('(')) {
      ++pos_;
      StrTypePtr t = expr();
      if (peek(';')) {
        ++pos_;
        t = with_weight(t, number());
      }
      expect(')');
      return t;
    }
    std::string w = word();
    if (w.empty()) fail("expected a type");
    if (w == "dia") return dia(unary());
    if (w == "box") return box(unary());
    return prim(w);
  }

  StrTypePtr expr() {
    std::vector<StrTypePtr> parts{unary()};
    std::optional<char> op;
    for (;;) {
      ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '/' && c != '\\' && c != '*') break;
      if (op && *op != c) fail("mixed operators need parentheses");
      op = c;
      ++pos_;
      parts.push_back(unary());
    }
    if (!op) return parts[0];
    if (*op == '\\') {
      StrTypePtr t = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) t = under(parts[i], t);
      return t;
    }
    StrTypePtr t = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) t = *op == '/' ? over(t, parts[i]) : prod(t, parts[i]);
    return t;
  }

  bool at_term_end() {
    ws();
    return pos_ == s_.size() || s_[pos_] == ',' || s_[pos_] == ')' || s_[pos_] == '>' || peek("->");
  }

  TermPtr term() {
    ws();
    if (peek('<')) {
      ++pos_;
      TermPtr a = term();
      expect('>');
      return wrap(a);
    }
    std::size_t save = pos_;
    try {
      StrTypePtr t = expr();
      if (at_term_end()) return leaf(t);
    } catch (const Error&) {
    }
    pos_ = save;
    expect('(');
    TermPtr a = term();
    expect(',');
    TermPtr b = term();
    expect(')');
    return pair(a, b);
  }

  std::size_t pos_ = 0;

 private:
  std::string s_;
};

}  // namespace

StrTypePtr parse_type(const std::string& text) {
  Parser p(text);
  StrTypePtr t = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

StrSequent parse_sequent(const std::string& text, Calc c) {
  Parser p(text);
  StrSequent s;
  if (c == Calc::LW && p.peek('<')) {
    ++p.pos_;
    s.weight = p.number();
    p.expect('>');
  }
  if (c == Calc::NLd) {
    s.term = p.term();
  } else {
    s.antecedent.push_back(p.expr());
    while (p.peek(',')) {
      ++p.pos_;
      s.antecedent.push_back(p.expr());
    }
  }
  if (!p.peek("->")) p.fail("expected '->'");
  p.pos_ += 2;
  s.succedent = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  validate(s, c);
  return s;
}

namespace {

void check_type(const StrType& t, Calc c) {
  if (t.op == Op::Prim) {
    if (t.sym.empty() || t.sym == kBracketSym || t.sym == kDiamondSym)
      throw Error(ErrorCode::MalformedSequent, "reserved or empty primitive '" + t.sym + "'");
  } else if (!t.l || (is_binary(t.op) && !t.r)) {
    throw Error(ErrorCode::MalformedSequent, "incomplete type");
  }
  if (c != Calc::NLd && (t.op == Op::Dia || t.op == Op::Box))
    throw Error(ErrorCode::MalformedSequent, "modalities are only available in NLd");
  if (c != Calc::LW && t.weight != 0) throw Error(ErrorCode::MalformedSequent, "weights are only available in LW");
  if (t.l) check_type(*t.l, c);
  if (t.r) check_type(*t.r, c);
}

void check_term(const Term& t) {
  switch (t.kind) {
    case Term::Leaf:
      if (!t.type) throw Error(ErrorCode::MalformedSequent, "empty leaf");
      check_type(*t.type, Calc::NLd);
      break;
    case Term::Pair:
      if (!t.a || !t.b) throw Error(ErrorCode::MalformedSequent, "incomplete pair");
      check_term(*t.a);
      check_term(*t.b);
      break;
    case Term::Diam:
      if (!t.a) throw Error(ErrorCode::MalformedSequent, "empty wrap");
      check_term(*t.a);
      break;
  }
}

}  // namespace

void validate(const StrSequent& s, Calc c) {
  if (!s.succedent) throw Error(ErrorCode::MalformedSequent, "missing succedent");
  check_type(*s.succedent, c);
  if (c == Calc::NLd) {
    if (!s.term) throw Error(ErrorCode::MalformedSequent, "missing antecedent structure");
    check_term(*s.term);
    return;
  }
  if (s.antecedent.empty()) throw Error(ErrorCode::MalformedSequent, "empty antecedent");
  for (const auto& t : s.antecedent) {
    if (!t) throw Error(ErrorCode::MalformedSequent, "missing antecedent type");
    check_type(*t, c);
  }
  if (c != Calc::LW && s.weight != 0) throw Error(ErrorCode::MalformedSequent, "sequent weight outside LW");
}

}  // namespace hlc::str
