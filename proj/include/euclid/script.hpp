#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "euclid/errors.hpp"
#include "euclid/rational.hpp"

namespace euclid {

// AST of the .euc construction language. Scripts are straight-line programs:
// declarations, assertions, and macro calls mirroring the classical
// construction tables; no loops, no conditionals.

enum class Selector { First, Second, Upper, Lower, Left, Right };

const char* selector_name(Selector s);

struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

// Scalar expression: rational literals, eps (nonarch only), exact distances,
// field arithmetic and square roots.
struct SExpr {
  enum class Kind { Literal, Eps, Dist, Add, Sub, Mul, Div, Neg, Sqrt };
  Kind kind = Kind::Literal;
  Rational literal;
  std::string id1, id2;  // Dist operands
  SExprPtr lhs, rhs;
};

SExprPtr sexpr_literal(Rational r);
SExprPtr sexpr_eps();
SExprPtr sexpr_dist(std::string p, std::string q);
SExprPtr sexpr_binary(SExpr::Kind op, SExprPtr lhs, SExprPtr rhs);
SExprPtr sexpr_unary(SExpr::Kind op, SExprPtr operand);

enum class ObjKind { Point, Line, Ray, Segment, Circle };
const char* obj_kind_name(ObjKind k);

struct ObjExpr {
  enum class Kind {
    PointCoords,  // (sx, sy)
    FreePoint,    // free
    PointOn,      // on <carrier>
    Intersect,    // intersect(a, b)[sel]
    LineThrough,  // line(p, q)
    RayFrom,      // ray(p, q)
    SegmentOf,    // seg(p, q)
    CircleOf      // circle(center, radius-expr)
  };
  Kind kind = Kind::FreePoint;
  SExprPtr sx, sy;        // PointCoords; CircleOf radius in sx
  std::string id1, id2;   // object/point operands
  Selector selector = Selector::First;
};

struct Predicate {
  enum class Kind { EqualSeg, LessSeg, EqualAngle, Parallel, Meets, Collinear, AngleSumPi };
  Kind kind;
  std::vector<std::string> args;
};

const char* predicate_name(Predicate::Kind k);

struct DeclStmt {
  ObjKind kind;
  std::string id;
  ObjExpr expr;
};

struct AssertStmt {
  Predicate pred;
};

struct MacroStmt {
  std::string name;
  std::vector<std::string> args;
};

// Internal statement kind emitted only by macro expansion: cut_off's runtime
// precondition that segment (a,b) is strictly greater than (p,q). Failing it
// is the EqualNotLess construction failure, not an assert failure.
struct RequireStmt {
  std::array<std::string, 4> pts;  // a, b, p, q
};

struct Stmt {
  std::variant<DeclStmt, AssertStmt, MacroStmt, RequireStmt> node;
  int line = 0;  // 1-based source line, 0 for generated statements
};

struct Script {
  std::string name;
  std::vector<Stmt> statements;
};

// Parse errors carry the source position and what was expected.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int col, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Text -> Script. Checks declaration-before-use, duplicate ids, operand
// kinds, predicate and macro arities.
Script parse_script(const std::string& text, const std::string& name = "script");

// Canonical text form; parse(render(s)) reproduces s.
std::string render_script(const Script& s);
std::string render_stmt(const Stmt& s);
std::string render_sexpr(const SExpr& e);

// Expansion of one macro call into plain statements. `fresh_counter` feeds
// deterministic generated identifiers.
std::vector<Stmt> macro_expand(const std::string& name, const std::vector<std::string>& args,
                               int& fresh_counter);

// Replace every macro call (recursively) by its expansion.
Script expand_macros(const Script& s);

// Known macro signatures: name -> (inputs, outputs), used by both the parser
// and the expander.
struct MacroSignature {
  unsigned inputs;
  unsigned outputs;
};
const std::vector<std::pair<std::string, MacroSignature>>& macro_signatures();

}  // namespace euclid
