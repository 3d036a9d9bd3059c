#include <map>
#include <sstream>

#include "euclid/script.hpp"

namespace euclid {

namespace {

struct Token {
  enum class T { Ident, Int, LPar, RPar, LBrack, RBrack, Comma, Eq, Plus, Minus, Star, Slash, End };
  T t = T::End;
  std::string text;
  int col = 1;
};

std::vector<Token> lex_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    auto push = [&](Token::T t, std::string text) { out.push_back({t, std::move(text), col}); };
    if (isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() &&
             (isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '.'))
        ++j;
      push(Token::T::Ident, line.substr(i, j - i));
      i = j;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < line.size() && isdigit(static_cast<unsigned char>(line[j]))) ++j;
      push(Token::T::Int, line.substr(i, j - i));
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Token::T::LPar, "("); break;
      case ')': push(Token::T::RPar, ")"); break;
      case '[': push(Token::T::LBrack, "["); break;
      case ']': push(Token::T::RBrack, "]"); break;
      case ',': push(Token::T::Comma, ","); break;
      case '=': push(Token::T::Eq, "="); break;
      case '+': push(Token::T::Plus, "+"); break;
      case '-': push(Token::T::Minus, "-"); break;
      case '*': push(Token::T::Star, "*"); break;
      case '/': push(Token::T::Slash, "/"); break;
      default:
        throw ParseError(ErrorCode::SyntaxError, lineno, col,
                         std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  out.push_back({Token::T::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

const std::map<std::string, Selector>& selector_table() {
  static const std::map<std::string, Selector> t = {
      {"first", Selector::First}, {"second", Selector::Second}, {"upper", Selector::Upper},
      {"lower", Selector::Lower}, {"left", Selector::Left},     {"right", Selector::Right}};
  return t;
}

const std::map<std::string, Predicate::Kind>& predicate_table() {
  static const std::map<std::string, Predicate::Kind> t = {
      {"equal_seg", Predicate::Kind::EqualSeg},   {"less_seg", Predicate::Kind::LessSeg},
      {"equal_angle", Predicate::Kind::EqualAngle}, {"parallel", Predicate::Kind::Parallel},
      {"meets", Predicate::Kind::Meets},          {"collinear", Predicate::Kind::Collinear},
      {"angle_sum_pi", Predicate::Kind::AngleSumPi}};
  return t;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int lineno, std::map<std::string, ObjKind>& symbols)
      : toks_(std::move(toks)), line_(lineno), symbols_(symbols) {}

  Stmt parse_stmt() {
    const Token& head = peek();
    if (head.t != Token::T::Ident) fail("expected a statement keyword");
    if (head.text == "point") return decl(ObjKind::Point);
    if (head.text == "line") return decl(ObjKind::Line);
    if (head.text == "ray") return decl(ObjKind::Ray);
    if (head.text == "segment") return decl(ObjKind::Segment);
    if (head.text == "circle") return decl(ObjKind::Circle);
    if (head.text == "assert") return assertion();
    for (const auto& [name, sig] : macro_signatures())
      if (head.text == name) return macro_call(name, sig);
    fail("unknown statement '" + head.text + "'");
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  int line_;
  std::map<std::string, ObjKind>& symbols_;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, line_, peek().col, what);
  }

  Token expect(Token::T t, const char* what) {
    if (peek().t != t) fail(std::string("expected ") + what);
    return next();
  }

  std::string ident(const char* what) {
    if (peek().t != Token::T::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  void expect_end() {
    if (peek().t != Token::T::End) fail("trailing input after statement");
  }

  std::string use(ObjKind want, const char* what) {
    int col = peek().col;
    std::string id = ident(what);
    auto it = symbols_.find(id);
    if (it == symbols_.end())
      throw ParseError(ErrorCode::UseBeforeDecl, line_, col, "'" + id + "' used before declaration");
    if (it->second != want)
      throw ParseError(ErrorCode::TypeMismatch, line_, col,
                       "'" + id + "' is a " + obj_kind_name(it->second) + ", expected " +
                           obj_kind_name(want));
    return id;
  }

  std::string use_carrier(bool allow_circle, const char* what) {
    int col = peek().col;
    std::string id = ident(what);
    auto it = symbols_.find(id);
    if (it == symbols_.end())
      throw ParseError(ErrorCode::UseBeforeDecl, line_, col, "'" + id + "' used before declaration");
    if (it->second == ObjKind::Point || (!allow_circle && it->second == ObjKind::Circle))
      throw ParseError(ErrorCode::TypeMismatch, line_, col,
                       "'" + id + "' cannot be intersected/carried here");
    return id;
  }

  std::string declare(ObjKind kind) {
    int col = peek().col;
    std::string id = ident("identifier");
    if (id.find('_') != std::string::npos || id.find('.') != std::string::npos)
      throw ParseError(ErrorCode::SyntaxError, line_, col,
                       "user identifiers use letters and digits only");
    if (symbols_.count(id))
      throw ParseError(ErrorCode::DuplicateId, line_, col, "'" + id + "' already declared");
    symbols_[id] = kind;
    return id;
  }

  SExprPtr sexpr() {
    SExprPtr e = term();
    while (peek().t == Token::T::Plus || peek().t == Token::T::Minus) {
      auto op = next().t == Token::T::Plus ? SExpr::Kind::Add : SExpr::Kind::Sub;
      e = sexpr_binary(op, e, term());
    }
    return e;
  }

  SExprPtr term() {
    SExprPtr e = unary();
    while (peek().t == Token::T::Star || peek().t == Token::T::Slash) {
      auto op = next().t == Token::T::Star ? SExpr::Kind::Mul : SExpr::Kind::Div;
      e = sexpr_binary(op, e, unary());
    }
    return e;
  }

  SExprPtr unary() {
    if (peek().t == Token::T::Minus) {
      next();
      return sexpr_unary(SExpr::Kind::Neg, unary());
    }
    return primary();
  }

  SExprPtr primary() {
    if (peek().t == Token::T::Int) return sexpr_literal(Rational(next().text));
    if (peek().t == Token::T::LPar) {
      next();
      SExprPtr e = sexpr();
      expect(Token::T::RPar, "')'");
      return e;
    }
    if (peek().t == Token::T::Ident) {
      std::string name = peek().text;
      if (name == "eps") {
        next();
        return sexpr_eps();
      }
      if (name == "dist") {
        next();
        expect(Token::T::LPar, "'('");
        std::string p = use(ObjKind::Point, "point id");
        expect(Token::T::Comma, "','");
        std::string q = use(ObjKind::Point, "point id");
        expect(Token::T::RPar, "')'");
        return sexpr_dist(std::move(p), std::move(q));
      }
      if (name == "sqrt") {
        next();
        expect(Token::T::LPar, "'('");
        SExprPtr e = sexpr();
        expect(Token::T::RPar, "')'");
        return sexpr_unary(SExpr::Kind::Sqrt, e);
      }
      fail("unknown scalar function '" + name + "'");
    }
    fail("expected a scalar expression");
  }

  ObjExpr point_expr() {
    ObjExpr e;
    if (peek().t == Token::T::LPar) {
      next();
      e.kind = ObjExpr::Kind::PointCoords;
      e.sx = sexpr();
      expect(Token::T::Comma, "','");
      e.sy = sexpr();
      expect(Token::T::RPar, "')'");
      return e;
    }
    std::string head = ident("point expression");
    if (head == "free") {
      e.kind = ObjExpr::Kind::FreePoint;
      return e;
    }
    if (head == "on") {
      e.kind = ObjExpr::Kind::PointOn;
      e.id1 = use_carrier(true, "carrier id");
      return e;
    }
    if (head == "intersect") {
      e.kind = ObjExpr::Kind::Intersect;
      expect(Token::T::LPar, "'('");
      e.id1 = use_carrier(true, "object id");
      expect(Token::T::Comma, "','");
      e.id2 = use_carrier(true, "object id");
      expect(Token::T::RPar, "')'");
      expect(Token::T::LBrack, "'['");
      int col = peek().col;
      std::string sel = ident("selector");
      auto it = selector_table().find(sel);
      if (it == selector_table().end())
        throw ParseError(ErrorCode::SyntaxError, line_, col, "unknown selector '" + sel + "'");
      e.selector = it->second;
      expect(Token::T::RBrack, "']'");
      return e;
    }
    fail("expected '(', 'free', 'on' or 'intersect'");
  }

  Stmt decl(ObjKind kind) {
    next();  // keyword
    // the defining expression may reference earlier ids only, so parse the
    // right-hand side before registering the new id
    int id_col = peek().col;
    std::string id = ident("identifier");
    expect(Token::T::Eq, "'='");
    ObjExpr expr;
    switch (kind) {
      case ObjKind::Point: expr = point_expr(); break;
      case ObjKind::Line: {
        std::string head = ident("'line'");
        if (head != "line") fail("expected line(p, q)");
        expr.kind = ObjExpr::Kind::LineThrough;
        expect(Token::T::LPar, "'('");
        expr.id1 = use(ObjKind::Point, "point id");
        expect(Token::T::Comma, "','");
        expr.id2 = use(ObjKind::Point, "point id");
        expect(Token::T::RPar, "')'");
        break;
      }
      case ObjKind::Ray: {
        std::string head = ident("'ray'");
        if (head != "ray") fail("expected ray(p, q)");
        expr.kind = ObjExpr::Kind::RayFrom;
        expect(Token::T::LPar, "'('");
        expr.id1 = use(ObjKind::Point, "point id");
        expect(Token::T::Comma, "','");
        expr.id2 = use(ObjKind::Point, "point id");
        expect(Token::T::RPar, "')'");
        break;
      }
      case ObjKind::Segment: {
        std::string head = ident("'seg'");
        if (head != "seg") fail("expected seg(p, q)");
        expr.kind = ObjExpr::Kind::SegmentOf;
        expect(Token::T::LPar, "'('");
        expr.id1 = use(ObjKind::Point, "point id");
        expect(Token::T::Comma, "','");
        expr.id2 = use(ObjKind::Point, "point id");
        expect(Token::T::RPar, "')'");
        break;
      }
      case ObjKind::Circle: {
        std::string head = ident("'circle'");
        if (head != "circle") fail("expected circle(center, radius)");
        expr.kind = ObjExpr::Kind::CircleOf;
        expect(Token::T::LPar, "'('");
        expr.id1 = use(ObjKind::Point, "point id");
        expect(Token::T::Comma, "','");
        expr.sx = sexpr();
        expect(Token::T::RPar, "')'");
        break;
      }
    }
    expect_end();
    // register after the right-hand side resolved
    {
      if (symbols_.count(id))
        throw ParseError(ErrorCode::DuplicateId, line_, id_col, "'" + id + "' already declared");
      if (id.find('_') != std::string::npos || id.find('.') != std::string::npos)
        throw ParseError(ErrorCode::SyntaxError, line_, id_col,
                         "user identifiers use letters and digits only");
      symbols_[id] = kind;
    }
    return Stmt{DeclStmt{kind, std::move(id), std::move(expr)}, line_};
  }

  Stmt assertion() {
    next();  // 'assert'
    int col = peek().col;
    std::string name = ident("predicate name");
    auto it = predicate_table().find(name);
    if (it == predicate_table().end())
      throw ParseError(ErrorCode::SyntaxError, line_, col, "unknown predicate '" + name + "'");
    Predicate pred{it->second, {}};
    expect(Token::T::LPar, "'('");
    ObjKind want = (pred.kind == Predicate::Kind::Parallel || pred.kind == Predicate::Kind::Meets)
                       ? ObjKind::Line
                       : ObjKind::Point;
    pred.args.push_back(use(want, "argument id"));
    while (peek().t == Token::T::Comma) {
      next();
      pred.args.push_back(use(want, "argument id"));
    }
    expect(Token::T::RPar, "')'");
    expect_end();
    check_pred_arity(pred, col);
    return Stmt{AssertStmt{std::move(pred)}, line_};
  }

  void check_pred_arity(const Predicate& p, int col) {
    size_t n = p.args.size();
    bool ok = true;
    switch (p.kind) {
      case Predicate::Kind::EqualSeg: ok = n >= 4 && n % 2 == 0; break;
      case Predicate::Kind::LessSeg: ok = n == 4; break;
      case Predicate::Kind::EqualAngle: ok = n == 6; break;
      case Predicate::Kind::Parallel:
      case Predicate::Kind::Meets: ok = n == 2; break;
      case Predicate::Kind::Collinear:
      case Predicate::Kind::AngleSumPi: ok = n == 3; break;
    }
    if (!ok)
      throw ParseError(ErrorCode::ArityError, line_, col,
                       std::string("wrong argument count for ") + predicate_name(p.kind));
  }

  Stmt macro_call(const std::string& name, const MacroSignature& sig) {
    next();  // macro name
    int col = peek().col;
    expect(Token::T::LPar, "'('");
    std::vector<std::string> args;
    args.push_back(ident("argument id"));
    while (peek().t == Token::T::Comma) {
      next();
      args.push_back(ident("argument id"));
    }
    expect(Token::T::RPar, "')'");
    expect_end();
    if (args.size() != sig.inputs + sig.outputs)
      throw ParseError(ErrorCode::ArityError, line_, col,
                       name + " takes " + std::to_string(sig.inputs) + " inputs and " +
                           std::to_string(sig.outputs) + " outputs");
    for (unsigned i = 0; i < sig.inputs; ++i) {
      auto it = symbols_.find(args[i]);
      if (it == symbols_.end())
        throw ParseError(ErrorCode::UseBeforeDecl, line_, col,
                         "'" + args[i] + "' used before declaration");
      if (it->second != ObjKind::Point)
        throw ParseError(ErrorCode::TypeMismatch, line_, col, "macro inputs are points");
    }
    for (unsigned i = sig.inputs; i < args.size(); ++i) {
      if (symbols_.count(args[i]))
        throw ParseError(ErrorCode::DuplicateId, line_, col,
                         "output '" + args[i] + "' already declared");
      symbols_[args[i]] = ObjKind::Point;
    }
    return Stmt{MacroStmt{name, std::move(args)}, line_};
  }
};

}  // namespace

Script parse_script(const std::string& text, const std::string& name) {
  Script script{name, {}};
  std::map<std::string, ObjKind> symbols;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = lex_line(line, lineno);
    if (toks.size() == 1) continue;  // blank or comment-only
    LineParser p(std::move(toks), lineno, symbols);
    script.statements.push_back(p.parse_stmt());
  }
  return script;
}

}  // namespace euclid
