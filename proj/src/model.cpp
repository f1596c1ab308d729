#include "rtea/model.hpp"

#include <cctype>
#include <optional>

namespace rtea {

ModelError::ModelError(Code code, std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      code_(code),
      line_(line),
      column_(column) {}

const char* to_string(ModelError::Code code) {
  switch (code) {
    case ModelError::Code::Syntax: return "syntax";
    case ModelError::Code::DuplicateState: return "duplicate state";
    case ModelError::Code::MissingInitial: return "missing initial state";
    case ModelError::Code::MultipleInitial: return "multiple initial states";
    case ModelError::Code::PositivePrice: return "positive price";
    case ModelError::Code::BoundBelowPrice: return "bound < -price";
    case ModelError::Code::NegativeRate: return "negative rate";
    case ModelError::Code::UndeclaredState: return "undeclared state";
  }
  return "unknown";
}

std::size_t RteaModel::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].name == name) return i;
  }
  return npos;
}

const State& RteaModel::initial_state() const {
  for (const State& s : states) {
    if (s.initial) return s;
  }
  throw std::logic_error("model has no initial state");
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok{Token::Kind::End, "", line_, column_};
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) tok.text += advance();
      tok.kind = Token::Kind::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' ||
               (c == '-' && !peek_is('>')) || c == '.') {
      tok.text += advance();
      while (pos_ < text_.size() && is_number_char(text_[pos_])) tok.text += advance();
      tok.kind = Token::Kind::Number;
    } else if (c == '-' && peek_is('>')) {
      tok.text = "->";
      advance();
      advance();
      tok.kind = Token::Kind::Punct;
    } else if (c == '{' || c == '}' || c == ';') {
      tok.text = std::string(1, advance());
      tok.kind = Token::Kind::Punct;
    } else {
      throw ModelError(ModelError::Code::Syntax, line_, column_,
                       std::string("unexpected character '") + c + "'");
    }
    return tok;
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_number_char(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/';
  }
  bool peek_is(char c) const { return pos_ + 1 < text_.size() && text_[pos_ + 1] == c; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

  RteaModel parse() {
    expect_word("rtea");
    expect_punct("{");
    while (!(tok_.kind == Token::Kind::Punct && tok_.text == "}")) {
      if (tok_.kind == Token::Kind::Ident && tok_.text == "state") {
        parse_state();
      } else if (tok_.kind == Token::Kind::Ident && tok_.text == "trans") {
        parse_trans();
      } else {
        syntax("expected 'state', 'trans' or '}'");
      }
    }
    const Token close = tok_;
    expect_punct("}");
    if (tok_.kind != Token::Kind::End) syntax("unexpected input after the model");

    for (std::size_t i = 0; i < model_.transitions.size(); ++i) {
      for (const auto& [name, at] : {std::pair{model_.transitions[i].src, trans_src_[i]},
                                      std::pair{model_.transitions[i].dst, trans_dst_[i]}}) {
        if (model_.find_state(name) == RteaModel::npos) {
          throw ModelError(ModelError::Code::UndeclaredState, at.line, at.column,
                           "undeclared state '" + name + "'");
        }
      }
    }
    if (!has_initial_) {
      throw ModelError(ModelError::Code::MissingInitial, close.line, close.column,
                       "no state is marked initial");
    }
    return std::move(model_);
  }

 private:
  [[noreturn]] void syntax(const std::string& msg) const {
    std::string found = tok_.kind == Token::Kind::End ? "end of input" : "'" + tok_.text + "'";
    throw ModelError(ModelError::Code::Syntax, tok_.line, tok_.column, msg + ", found " + found);
  }

  Token take() {
    Token t = tok_;
    tok_ = lexer_.next();
    return t;
  }

  void expect_word(const char* word) {
    if (tok_.kind != Token::Kind::Ident || tok_.text != word) {
      syntax(std::string("expected '") + word + "'");
    }
    take();
  }

  void expect_punct(const char* p) {
    if (tok_.kind != Token::Kind::Punct || tok_.text != p) syntax(std::string("expected '") + p + "'");
    take();
  }

  Token expect_ident() {
    if (tok_.kind != Token::Kind::Ident) syntax("expected an identifier");
    return take();
  }

  std::pair<Rational, Token> expect_number() {
    if (tok_.kind != Token::Kind::Number) syntax("expected a number");
    auto value = parse_rational(tok_.text);
    if (!value) syntax("malformed number");
    return {std::move(*value), take()};
  }

  void parse_state() {
    take();
    Token name = expect_ident();
    expect_word("rate");
    auto [rate, rate_tok] = expect_number();
    State s{name.text, std::move(rate)};
    while (tok_.kind == Token::Kind::Ident && (tok_.text == "initial" || tok_.text == "accepting")) {
      Token flag = take();
      if (flag.text == "initial") {
        if (has_initial_) {
          throw ModelError(ModelError::Code::MultipleInitial, flag.line, flag.column,
                           "second initial state '" + s.name + "'");
        }
        has_initial_ = true;
        s.initial = true;
      } else {
        s.accepting = true;
      }
    }
    expect_punct(";");
    if (model_.find_state(s.name) != RteaModel::npos) {
      throw ModelError(ModelError::Code::DuplicateState, name.line, name.column,
                       "state '" + s.name + "' declared twice");
    }
    if (sgn(s.rate) < 0) {
      throw ModelError(ModelError::Code::NegativeRate, rate_tok.line, rate_tok.column,
                       "rate of '" + s.name + "' is negative");
    }
    model_.states.push_back(std::move(s));
  }

  void parse_trans() {
    take();
    Token src = expect_ident();
    expect_punct("->");
    Token dst = expect_ident();
    expect_word("price");
    auto [price, price_tok] = expect_number();
    expect_word("bound");
    auto [bound, bound_tok] = expect_number();
    expect_punct(";");
    if (sgn(price) > 0) {
      throw ModelError(ModelError::Code::PositivePrice, price_tok.line, price_tok.column,
                       "price " + to_string(price) + " is positive");
    }
    if (bound < -price) {
      throw ModelError(ModelError::Code::BoundBelowPrice, bound_tok.line, bound_tok.column,
                       "bound " + to_string(bound) + " is below -price");
    }
    model_.transitions.push_back({src.text, dst.text, std::move(price), std::move(bound)});
    trans_src_.push_back(src);
    trans_dst_.push_back(dst);
  }

  Lexer lexer_;
  Token tok_;
  RteaModel model_;
  bool has_initial_ = false;
  std::vector<Token> trans_src_;
  std::vector<Token> trans_dst_;
};

}  // namespace

RteaModel parse_model(std::string_view text) { return Parser(text).parse(); }

std::string serialize(const RteaModel& m) {
  std::string out = "rtea {\n";
  for (const State& s : m.states) {
    out += "  state " + s.name + " rate " + to_string(s.rate);
    if (s.initial) out += " initial";
    if (s.accepting) out += " accepting";
    out += ";\n";
  }
  for (const Transition& t : m.transitions) {
    out += "  trans " + t.src + " -> " + t.dst + " price " + to_string(t.price) + " bound " +
           to_string(t.bound) + ";\n";
  }
  return out + "}\n";
}

std::vector<std::size_t> matrix_order(const RteaModel& m) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    if (m.states[i].accepting) order.push_back(i);
  }
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    if (!m.states[i].accepting) order.push_back(i);
  }
  return order;
}

AutomatonRep to_matrix_rep(const RteaModel& m) {
  const std::vector<std::size_t> order = matrix_order(m);
  const std::size_t n = order.size();
  std::vector<std::size_t> row_of(n);
  for (std::size_t r = 0; r < n; ++r) row_of[order[r]] = r;

  AutomatonRep rep;
  rep.m = RtefMatrix(n, n);
  rep.alpha.assign(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    const State& s = m.states[order[r]];
    rep.alpha[r] = s.initial;
    if (s.accepting) ++rep.k;
  }
  for (const Transition& t : m.transitions) {
    std::size_t i = m.find_state(t.src);
    std::size_t j = m.find_state(t.dst);
    if (i == RteaModel::npos || j == RteaModel::npos) {
      throw std::invalid_argument("transition with undeclared endpoint");
    }
    Atom atom{m.states[i].rate, t.price, t.bound};
    Rtef& entry = rep.m(row_of[i], row_of[j]);
    entry = sup(entry, Rtef::atom(atom));
  }
  return rep;
}

}  // namespace rtea
