#include "oadp/ratmaps.hpp"

namespace oadp {

RationalMap cremona_dejonquieres(const MultiPoly& g, const MultiPoly& g2, const Point4& p) {
  Point pt(p.begin(), p.end());
  if (g.evaluate(pt) != 0) throw Error(ErrorCode::RankDrop, "p is not on g = 0");
  bool smooth = false;
  for (int i = 0; i < 4; ++i)
    if (g.differentiate(i).evaluate(pt) != 0) smooth = true;
  if (!smooth) throw Error(ErrorCode::RankDrop, "p is a singular point of g = 0");
  LinearSystem L = build_system(3, {CIPowerCurve{g, g2, 1}, PointMult{p, 2}});
  if (L.dim() != 4) throw Error(ErrorCode::DimensionUnexpected, "cubic system has dimension " + std::to_string(L.dim()));
  return RationalMap::make(L.basis);
}

}  // namespace oadp
