#include "euclid/corpus.hpp"

namespace euclid {

namespace {

const char* kI1 = R"(# To construct an equilateral triangle on a given segment
point A = (0, 0)
point B = (0, 1)
circle ca = circle(A, dist(A, B))
circle cb = circle(B, dist(A, B))
point C = intersect(ca, cb)[left]
assert equal_seg(A, B, B, C, C, A)
)";

const char* kI2 = R"(# To place at a given point a segment equal to a given segment
point A = (0, 0)
point B = (4, 0)
point C = (5, 3)
transport_seg(A, B, C, L)
assert equal_seg(A, L, B, C)
)";

const char* kI3 = R"(# To cut off from the greater a segment equal to the lesser
point A = (0, 0)
point B = (7, 1)
point C = (1, 1)
point D = (4, 5)
cut_off(A, B, C, D, E)
assert equal_seg(A, E, C, D)
assert less_seg(A, E, A, B)
assert collinear(A, E, B)
)";

const char* kI5 = R"(# The base angles of an isosceles triangle are equal
point A = (0, 4)
point B = (-2, 0)
point C = (2, 0)
assert equal_seg(A, B, A, C)
assert equal_angle(B, A, C, C, A, B)
ray rb = ray(A, B)
ray rc = ray(A, C)
point F = on rb
circle cf = circle(A, dist(A, F))
point G = intersect(cf, rc)[second]
assert equal_seg(A, F, A, G)
assert equal_angle(F, B, C, G, C, B)
)";

const char* kI6 = R"(# Equal base angles: cutting the lesser from the greater is impossible
point A = (0, 0)
point B = (-1, 2)
point C = (1, 2)
assert equal_angle(B, A, C, C, A, B)
assert equal_seg(A, B, A, C)
cut_off(B, A, A, C, D)
)";

const char* kI22 = R"(# To construct a triangle from three given segments
point P1 = (0, 0)
point P2 = (3, 0)
point Q1 = (0, 1)
point Q2 = (4, 1)
point R1 = (1, 2)
point R2 = (7, 2)
triangle_sss(P1, P2, Q1, Q2, R1, R2, D, G, K)
assert equal_seg(D, K, P1, P2)
assert equal_seg(D, G, Q1, Q2)
assert equal_seg(G, K, R1, R2)
)";

const char* kI23 = R"(# To construct an angle equal to a given angle at a point on a line
point C = (0, 0)
point D = (3, 0)
point E = (1, 2)
point A = (6, 1)
point B = (10, 2)
transport_angle(C, D, E, A, B, F, G)
assert equal_angle(C, D, E, A, G, F)
)";

const char* kFig9 = R"(# Lines with infinitesimal slope through the origin never reach y = 1
# inside the limited subplane, although the full plane joins them.
point O = (0, 0)
point P = (1, eps)
point Q = (1, 2*eps)
point H1 = (0, 1)
point H2 = (1, 1)
line y1 = line(O, P)
line y2 = line(O, Q)
line h = line(H1, H2)
assert parallel(y1, h)
assert parallel(y2, h)
assert meets(y1, y2)
)";

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"I.1", "i1.euc", kI1},   {"I.2", "i2.euc", kI2},   {"I.3", "i3.euc", kI3},
      {"I.5", "i5.euc", kI5},   {"I.6", "i6.euc", kI6},   {"I.22", "i22.euc", kI22},
      {"I.23", "i23.euc", kI23}, {"Fig.9", "fig9.euc", kFig9},
  };
  return entries;
}

const CorpusEntry* corpus_find(const std::string& id) {
  for (const CorpusEntry& e : corpus())
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace euclid
