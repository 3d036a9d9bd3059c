#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euclid/geometry.hpp"

namespace euclid {

// Euclid's magnitudes: same-kind positive quantities forming an ordered
// additive semi-group. Segments and triangle areas carry a scalar (length
// representative / doubled area); angles carry the exact (dot, cross) pair,
// normalized to a nonnegative cross part, so no angle measure is ever needed.
enum class MagnitudeKind { Segment, Angle, TriangleArea };

const char* magnitude_kind_name(MagnitudeKind k);

template <class S>
struct Magnitude {
  MagnitudeKind kind;
  std::variant<S, AnglePair<S>> value;
};

template <class S>
Magnitude<S> segment_magnitude(S length) {
  if (sign_of(length) <= 0) raise(ErrorCode::Degenerate, "magnitudes are positive");
  return {MagnitudeKind::Segment, std::move(length)};
}

template <class S>
Magnitude<S> area_magnitude(S doubled_area) {
  if (sign_of(doubled_area) <= 0) raise(ErrorCode::Degenerate, "magnitudes are positive");
  return {MagnitudeKind::TriangleArea, std::move(doubled_area)};
}

template <class S>
Magnitude<S> angle_magnitude(AnglePair<S> pair) {
  pair = unsigned_angle(std::move(pair));
  if (sign_of(pair.s) == 0 && sign_of(pair.c) >= 0)
    raise(ErrorCode::Degenerate, "zero angle is not a magnitude");
  return {MagnitudeKind::Angle, std::move(pair)};
}

template <class S>
std::string magnitude_str(const Magnitude<S>& m) {
  if (const S* v = std::get_if<S>(&m.value)) return scalar_str(*v);
  const auto& a = std::get<AnglePair<S>>(m.value);
  return "angle(" + scalar_str(a.c) + ", " + scalar_str(a.s) + ")";
}

namespace detail_mag {

template <class S>
void require_same_kind(const Magnitude<S>& a, const Magnitude<S>& b) {
  if (a.kind != b.kind) raise(ErrorCode::KindMismatch, "magnitudes of different kinds");
}

template <class S>
const S& scalar_of(const Magnitude<S>& m) {
  const S* v = std::get_if<S>(&m.value);
  if (!v)
    raise(ErrorCode::UnsupportedForKind,
          "operation needs a scalar-valued magnitude kind (segment or area)");
  return *v;
}

}  // namespace detail_mag

template <class S>
Ordering mag_compare(const Magnitude<S>& a, const Magnitude<S>& b) {
  detail_mag::require_same_kind(a, b);
  if (const S* va = std::get_if<S>(&a.value))
    return ordering_from_sign(compare3(*va, std::get<S>(b.value)));
  return compare_angles(std::get<AnglePair<S>>(a.value), std::get<AnglePair<S>>(b.value));
}

template <class S>
bool mag_equal(const Magnitude<S>& a, const Magnitude<S>& b) {
  return mag_compare(a, b) == Ordering::EQ;
}

template <class S>
Magnitude<S> mag_add(const Magnitude<S>& a, const Magnitude<S>& b) {
  detail_mag::require_same_kind(a, b);
  if (const S* va = std::get_if<S>(&a.value))
    return {a.kind, *va + std::get<S>(b.value)};
  AnglePair<S> sum = angle_add(std::get<AnglePair<S>>(a.value), std::get<AnglePair<S>>(b.value));
  int ss = sign_of(sum.s);
  if (ss < 0 || (ss == 0 && sign_of(sum.c) > 0))
    raise(ErrorCode::Degenerate, "angle sum beyond two right angles");
  return {MagnitudeKind::Angle, std::move(sum)};
}

// a - b for a > b; NotGreater otherwise.
template <class S>
Magnitude<S> mag_sub(const Magnitude<S>& a, const Magnitude<S>& b) {
  detail_mag::require_same_kind(a, b);
  if (mag_compare(a, b) != Ordering::GT)
    raise(ErrorCode::NotGreater, "subtraction needs the greater magnitude first");
  if (const S* va = std::get_if<S>(&a.value))
    return {a.kind, *va - std::get<S>(b.value)};
  const auto& pa = std::get<AnglePair<S>>(a.value);
  const auto& pb = std::get<AnglePair<S>>(b.value);
  // compose with the inverse of b
  return {MagnitudeKind::Angle, angle_add(pa, AnglePair<S>{pb.c, -pb.s})};
}

template <class S>
Magnitude<S> mag_scale(const Magnitude<S>& a, unsigned n) {
  if (n == 0) raise(ErrorCode::Degenerate, "zero multiple of a magnitude");
  const S& v = detail_mag::scalar_of(a);
  return {a.kind, v * ScalarTraits<S>::from_rational(Rational(static_cast<long>(n)))};
}

// --- machine-checked axiom verdicts ---

enum class AxiomId { E1, E2, E3, E4, E5, CN1, CN2, CN3, CN5, Trichotomy };

const char* axiom_name(AxiomId id);

struct AxiomVerdict {
  AxiomId axiom;
  bool holds = false;
  // name/value pairs sufficient to replay the check
  std::vector<std::pair<std::string, std::string>> witness;
};

namespace detail_mag {

inline void put(AxiomVerdict& v, std::string name, std::string value) {
  v.witness.emplace_back(std::move(name), std::move(value));
}

template <class S>
void put_mag(AxiomVerdict& v, std::string name, const Magnitude<S>& m) {
  put(v, std::move(name), magnitude_str(m));
}

}  // namespace detail_mag

// E1: exists n with n*a > b. Decided through classification of b/a, never by
// a bounded search; fails exactly on infinite ratios (the non-Archimedean
// signature). Scalar kinds only.
template <class S>
AxiomVerdict check_E1(const Magnitude<S>& a, const Magnitude<S>& b) {
  using namespace detail_mag;
  require_same_kind(a, b);
  AxiomVerdict v;
  v.axiom = AxiomId::E1;
  put_mag(v, "a", a);
  put_mag(v, "b", b);
  const S& sa = scalar_of(a);
  const S& sb = scalar_of(b);
  MagnitudeClass ratio = classify_value(sb / sa);
  put(v, "classify(b/a)", magnitude_class_name(ratio));
  auto n = archimedean_witness(sa, sb);
  v.holds = n.has_value();
  if (n) put(v, "n", n->str());
  return v;
}

// E2: a > b implies a = b + c for the produced c.
template <class S>
AxiomVerdict check_E2(const Magnitude<S>& a, const Magnitude<S>& b) {
  using namespace detail_mag;
  AxiomVerdict v;
  v.axiom = AxiomId::E2;
  put_mag(v, "a", a);
  put_mag(v, "b", b);
  Magnitude<S> c = mag_sub(a, b);  // NotGreater if precondition broken
  put_mag(v, "c", c);
  v.holds = mag_equal(a, mag_add(b, c));
  return v;
}

// E3: a > b implies a + c > b + c; vacuously true when the premise fails.
template <class S>
AxiomVerdict check_E3(const Magnitude<S>& a, const Magnitude<S>& b, const Magnitude<S>& c) {
  using namespace detail_mag;
  AxiomVerdict v;
  v.axiom = AxiomId::E3;
  put_mag(v, "a", a);
  put_mag(v, "b", b);
  put_mag(v, "c", c);
  if (mag_compare(a, b) != Ordering::GT) {
    put(v, "premise", "a <= b, vacuous");
    v.holds = true;
    return v;
  }
  v.holds = mag_compare(mag_add(a, c), mag_add(b, c)) == Ordering::GT;
  put(v, "a+c", magnitude_str(mag_add(a, c)));
  put(v, "b+c", magnitude_str(mag_add(b, c)));
  return v;
}

// E4: the n-th part b with n*b = a. Scalar kinds (angle n-section is not a
// straightedge-and-compass operation).
template <class S>
AxiomVerdict check_E4(const Magnitude<S>& a, unsigned n) {
  using namespace detail_mag;
  AxiomVerdict v;
  v.axiom = AxiomId::E4;
  put_mag(v, "a", a);
  put(v, "n", std::to_string(n));
  if (n == 0) raise(ErrorCode::Degenerate, "E4 needs n >= 1");
  const S& sa = scalar_of(a);
  Magnitude<S> b{a.kind, sa / ScalarTraits<S>::from_rational(Rational(static_cast<long>(n)))};
  put_mag(v, "b", b);
  v.holds = mag_equal(mag_scale(b, n), a);
  return v;
}

// E5: the fourth proportional d with a : b :: c : d, read as the cross
// product equality a*d = b*c. Scalar kinds.
template <class S>
AxiomVerdict check_E5(const Magnitude<S>& a, const Magnitude<S>& b, const Magnitude<S>& c) {
  using namespace detail_mag;
  require_same_kind(a, b);
  require_same_kind(b, c);
  AxiomVerdict v;
  v.axiom = AxiomId::E5;
  put_mag(v, "a", a);
  put_mag(v, "b", b);
  put_mag(v, "c", c);
  const S& sa = scalar_of(a);
  const S& sb = scalar_of(b);
  const S& sc = scalar_of(c);
  S d = sb * sc / sa;
  put(v, "d", scalar_str(d));
  // d can be a truncated quotient over the series backend; the cross product
  // equality is then certified on the whole known prefix.
  std::string note;
  v.holds = certified_equal(sa * d, sb * sc, &note);
  put(v, "a*d", scalar_str(sa * d));
  put(v, "b*c", scalar_str(sb * sc));
  if (!note.empty()) put(v, "precision", note);
  return v;
}

enum class CommonNotion { CN1, CN2, CN3, CN5 };

// CN1 transitivity (a = b, b = c => a = c); CN2 addition and CN3 subtraction
// of equals; CN5 the whole is greater than the part (a + b > a).
template <class S>
AxiomVerdict cn_apply(CommonNotion cn, const std::vector<Magnitude<S>>& ops) {
  using namespace detail_mag;
  auto arity = [&](size_t want, const char* shape) {
    if (ops.size() != want) raise(ErrorCode::Degenerate, std::string("operands must be ") + shape);
  };
  switch (cn) {
    case CommonNotion::CN1: {
      arity(3, "a, b, c");
      AxiomVerdict v;
  v.axiom = AxiomId::CN1;
      for (size_t i = 0; i < 3; ++i) put_mag(v, std::string(1, char('a' + i)), ops[i]);
      if (!mag_equal(ops[0], ops[1]) || !mag_equal(ops[1], ops[2])) {
        put(v, "premise", "not all equal, vacuous");
        v.holds = true;
      } else {
        v.holds = mag_equal(ops[0], ops[2]);
      }
      return v;
    }
    case CommonNotion::CN2:
    case CommonNotion::CN3: {
      arity(4, "a, a', b, b'");
      AxiomVerdict v;
      v.axiom = cn == CommonNotion::CN2 ? AxiomId::CN2 : AxiomId::CN3;
      const Magnitude<S>&a = ops[0], &a2 = ops[1], &b = ops[2], &b2 = ops[3];
      put_mag(v, "a", a);
      put_mag(v, "a'", a2);
      put_mag(v, "b", b);
      put_mag(v, "b'", b2);
      if (cn == CommonNotion::CN3 &&
          (mag_compare(a, b) != Ordering::GT || mag_compare(a2, b2) != Ordering::GT))
        raise(ErrorCode::NotGreater, "CN3 needs a > b and a' > b'");
      if (!mag_equal(a, a2) || !mag_equal(b, b2)) {
        put(v, "premise", "pairs not equal, vacuous");
        v.holds = true;
        return v;
      }
      if (cn == CommonNotion::CN2) {
        v.holds = mag_equal(mag_add(a, b), mag_add(a2, b2));
        put(v, "a+b", magnitude_str(mag_add(a, b)));
      } else {
        Magnitude<S> d1 = mag_sub(a, b);
        Magnitude<S> d2 = mag_sub(a2, b2);
        v.holds = mag_equal(d1, d2);
        put(v, "a-b", magnitude_str(d1));
        put(v, "a'-b'", magnitude_str(d2));
      }
      return v;
    }
    case CommonNotion::CN5: {
      arity(2, "a, b");
      AxiomVerdict v;
  v.axiom = AxiomId::CN5;
      put_mag(v, "a", ops[0]);
      put_mag(v, "b", ops[1]);
      Magnitude<S> whole = mag_add(ops[0], ops[1]);
      put(v, "a+b", magnitude_str(whole));
      v.holds = mag_compare(whole, ops[0]) == Ordering::GT;
      return v;
    }
  }
  raise(ErrorCode::InternalError, "bad common notion");
}

template <class S>
AxiomVerdict trichotomy_check(const Magnitude<S>& a, const Magnitude<S>& b) {
  using namespace detail_mag;
  AxiomVerdict v;
  v.axiom = AxiomId::Trichotomy;
  put_mag(v, "a", a);
  put_mag(v, "b", b);
  Ordering ab = mag_compare(a, b);
  Ordering ba = mag_compare(b, a);
  put(v, "compare(a,b)", ordering_name(ab));
  put(v, "compare(b,a)", ordering_name(ba));
  const bool exactly_one =
      (ab == Ordering::LT) + (ab == Ordering::EQ) + (ab == Ordering::GT) == 1;
  const bool mirrored = (ab == Ordering::LT) == (ba == Ordering::GT) &&
                        (ab == Ordering::EQ) == (ba == Ordering::EQ);
  v.holds = exactly_one && mirrored;
  return v;
}

// The spec's check_axiom surface: dispatch on the axiom id.
template <class S>
AxiomVerdict check_axiom(AxiomId id, const std::vector<Magnitude<S>>& ops,
                         std::optional<unsigned> n = std::nullopt) {
  auto need = [&](size_t k) {
    if (ops.size() != k) raise(ErrorCode::Degenerate, "wrong operand count for axiom");
  };
  switch (id) {
    case AxiomId::E1: need(2); return check_E1(ops[0], ops[1]);
    case AxiomId::E2: need(2); return check_E2(ops[0], ops[1]);
    case AxiomId::E3: need(3); return check_E3(ops[0], ops[1], ops[2]);
    case AxiomId::E4:
      need(1);
      if (!n) raise(ErrorCode::Degenerate, "E4 needs n");
      return check_E4(ops[0], *n);
    case AxiomId::E5: need(3); return check_E5(ops[0], ops[1], ops[2]);
    case AxiomId::CN1: return cn_apply(CommonNotion::CN1, ops);
    case AxiomId::CN2: return cn_apply(CommonNotion::CN2, ops);
    case AxiomId::CN3: return cn_apply(CommonNotion::CN3, ops);
    case AxiomId::CN5: return cn_apply(CommonNotion::CN5, ops);
    case AxiomId::Trichotomy: need(2); return trichotomy_check(ops[0], ops[1]);
  }
  raise(ErrorCode::InternalError, "bad axiom id");
}

}  // namespace euclid
