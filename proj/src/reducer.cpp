#include "agp/reducer.hpp"

namespace agp {

std::string_view to_string(RootClass c) {
  switch (c) {
    case RootClass::distinct_real: return "distinct_real";
    case RootClass::repeated: return "repeated";
    case RootClass::complex_pair: return "complex_pair";
    case RootClass::rational_roots: return "rational_roots";
  }
  return "unknown";
}

SecondOrder reduce(const AgpParams& p) {
  SecondOrder s;
  s.P = p.a + Rat(2) * p.r;
  s.Q = -(p.r * p.r + (p.a - p.d) * p.r);
  s.B = p.a * p.a + (p.a + p.d) * p.r;
  s.x1 = p.a * p.x0;
  s.x2 = s.B * p.x0;
  return s;
}

Rat discriminant(const SecondOrder& s) { return s.P * s.P + Rat(4) * s.Q; }

RootClass classify(const Rat& delta) {
  if (delta.is_zero()) return RootClass::repeated;
  if (delta.sign() < 0) return RootClass::complex_pair;
  return delta.is_square() ? RootClass::rational_roots : RootClass::distinct_real;
}

EigenStructure eigenvalues(const SecondOrder& s) {
  EigenStructure e;
  e.delta = discriminant(s);
  const Rat half(1, 2);
  e.lambda1 = Quad(s.P * half, half, e.delta);
  e.lambda2 = Quad(s.P * half, -half, e.delta);
  e.root_class = classify(e.delta);
  return e;
}

AgpFamily::Point AgpFamily::at(const Rat& r) const {
  if (r.is_zero()) {
    throw Error(ErrorKind::invalid_ratio, "the coefficient family is undefined at r = 0");
  }
  const Rat a = P - Rat(2) * r;
  return {a, a + (Q + r * r) / r};
}

AgpFamily identify_family(const Rat& P, const Rat& Q) { return AgpFamily{P, Q}; }

AgpParams identify(const Rat& P, const Rat& Q, const Rat& x1, const Rat& x2, const Rat& r) {
  const auto [a, d] = identify_family(P, Q).at(r);
  const Rat B = a * a + (a + d) * r;

  Rat x0;
  if (!a.is_zero()) {
    x0 = x1 / a;
  } else if (!B.is_zero()) {
    x0 = x2 / B;
  } else if (x1.is_zero() && x2.is_zero()) {
    throw Error(ErrorKind::underdetermined,
                "a = 0 and B = 0: every x0 reproduces x1 = x2 = 0");
  } else {
    throw Error(ErrorKind::inconsistent_data,
                "a = 0 and B = 0 force x1 = x2 = 0, got x1 = " + x1.to_string() +
                    ", x2 = " + x2.to_string());
  }
  if (a * x0 != x1 || B * x0 != x2) {
    throw Error(ErrorKind::inconsistent_data,
                "(x1, x2) = (" + x1.to_string() + ", " + x2.to_string() +
                    ") is not a multiple of (a, B) = (" + a.to_string() + ", " + B.to_string() +
                    ")");
  }
  return AgpParams{a, d, r, x0};
}

}  // namespace agp
