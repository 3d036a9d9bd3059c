#include "euclid/field.hpp"

namespace euclid {

const char* field_tag_name(FieldTag tag) {
  switch (tag) {
    case FieldTag::Rat: return "rational";
    case FieldTag::Constructible: return "constructible";
    case FieldTag::NonArch: return "nonarch";
  }
  return "?";
}

std::optional<FieldTag> field_tag_from_name(const std::string& name) {
  if (name == "rational") return FieldTag::Rat;
  if (name == "constructible") return FieldTag::Constructible;
  if (name == "nonarch") return FieldTag::NonArch;
  return std::nullopt;
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::LT: return "LT";
    case Ordering::EQ: return "EQ";
    case Ordering::GT: return "GT";
  }
  return "?";
}

const char* magnitude_class_name(MagnitudeClass c) {
  switch (c) {
    case MagnitudeClass::Zero: return "Zero";
    case MagnitudeClass::Infinitesimal: return "Infinitesimal";
    case MagnitudeClass::LimitedAppreciable: return "LimitedAppreciable";
    case MagnitudeClass::Infinite: return "Infinite";
  }
  return "?";
}

FieldValue FieldValue::lift(FieldTag tag, const Rational& r) {
  switch (tag) {
    case FieldTag::Rat: return FieldValue(r);
    case FieldTag::Constructible: return FieldValue(TowerReal(r));
    case FieldTag::NonArch: return FieldValue(SeriesValue(r));
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

std::string FieldValue::str() const {
  return std::visit([](const auto& v) { return scalar_str(v); }, v_);
}

namespace {

void require_same_tag(const FieldValue& x, const FieldValue& y) {
  if (x.tag() != y.tag())
    raise(ErrorCode::TagMismatch, std::string("operands live in different backends: ") +
                                      field_tag_name(x.tag()) + " vs " + field_tag_name(y.tag()));
}

template <class S>
S apply_op(ArithOp op, const S& a, const S& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if (is_zero(b)) raise(ErrorCode::DivisionByZero, "division by zero");
      return a / b;
  }
  raise(ErrorCode::InternalError, "bad arith op");
}

}  // namespace

FieldValue field_arith(ArithOp op, const FieldValue& x, const FieldValue& y) {
  require_same_tag(x, y);
  switch (x.tag()) {
    case FieldTag::Rat: return FieldValue(apply_op(op, x.as_rational(), y.as_rational()));
    case FieldTag::Constructible: return FieldValue(apply_op(op, x.as_tower(), y.as_tower()));
    case FieldTag::NonArch: return FieldValue(apply_op(op, x.as_series(), y.as_series()));
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

Ordering field_compare(const FieldValue& x, const FieldValue& y) {
  require_same_tag(x, y);
  switch (x.tag()) {
    case FieldTag::Rat: return ordering_from_sign(compare3(x.as_rational(), y.as_rational()));
    case FieldTag::Constructible: return ordering_from_sign(compare3(x.as_tower(), y.as_tower()));
    case FieldTag::NonArch: return ordering_from_sign(compare3(x.as_series(), y.as_series()));
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

FieldValue field_sqrt(const FieldValue& x) {
  switch (x.tag()) {
    case FieldTag::Rat: {
      auto r = try_rational_sqrt(x.as_rational());
      if (!r)
        raise(ErrorCode::NoSqrtInField,
              rational_str(x.as_rational()) + " has no square root over the rationals");
      return FieldValue(*r);
    }
    case FieldTag::Constructible: return FieldValue(TowerReal::sqrt_of(x.as_tower()));
    case FieldTag::NonArch: return FieldValue(SeriesValue::sqrt_of(x.as_series()));
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

MagnitudeClass field_classify(const FieldValue& x) {
  switch (x.tag()) {
    case FieldTag::Rat: return classify_value(x.as_rational());
    case FieldTag::Constructible: return classify_value(x.as_tower());
    case FieldTag::NonArch: return classify_value(x.as_series());
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

std::optional<Integer> field_archimedean_witness(const FieldValue& a, const FieldValue& b) {
  require_same_tag(a, b);
  switch (a.tag()) {
    case FieldTag::Rat: return archimedean_witness(a.as_rational(), b.as_rational());
    case FieldTag::Constructible: return archimedean_witness(a.as_tower(), b.as_tower());
    case FieldTag::NonArch: return archimedean_witness(a.as_series(), b.as_series());
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

}  // namespace euclid
